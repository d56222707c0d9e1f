#include "bvdouble/doublecopy.hpp"
#include "support.hpp"

using namespace bvdouble;
using namespace bvtest;

namespace {

const Metric& eta() {
  static const Metric e = Metric::diagonal({1, 1, -1});
  return e;
}

VectorField rfield(Rng& rng) {
  VectorField a;
  for (int i = 0; i < 3; ++i) a.push_back(random_scalar(3, 1, rng));
  return a;
}

}  // namespace

TEST_CASE("C-bracket with a constant left argument") {
  Rng rng(50);
  VectorField a{FourierScalar::constant(3, q(2)), FourierScalar(3), FourierScalar::constant(3, q(-1))};
  const VectorField b = rfield(rng);
  VectorField expect = zero_components(3);
  for (int j = 0; j < 3; ++j) expect[j] = partial(b[j], 0) * q(2) - partial(b[j], 2);
  CHECK(c_bracket_raw(a, b, eta()) == expect);
}

TEST_CASE("skew C-bracket is antisymmetric and the raw one is not") {
  Rng rng(51);
  const VectorField a = rfield(rng), b = rfield(rng);
  CHECK(is_zero(c_bracket(a, a, eta())));
  CHECK(is_zero(add(c_bracket(a, b, eta()), c_bracket(b, a, eta()))));
  CHECK_FALSE(is_zero(add(c_bracket_raw(a, b, eta()), c_bracket_raw(b, a, eta()))));
}

TEST_CASE("eta term by explicit expansion") {
  // A = e^{i x1} d_2, B = d_2 (constant): only the eta-term survives, eta^{1j} eta_22 (i) e^{i x1}
  VectorField a = zero_components(3), b = zero_components(3);
  a[1] = mode({1, 0, 0});
  b[1] = FourierScalar::constant(3, q(1));
  VectorField expect = zero_components(3);
  expect[0] = mode({1, 0, 0}, qi(1));
  CHECK(c_bracket_raw(a, b, eta()) == expect);
}

TEST_CASE("Jacobiator on constrained and unconstrained fields") {
  Rng rng(52);
  const std::vector<int> null{1, 0, 1};
  for (int i = 0; i < 4; ++i) {
    const VectorField a = random_directional_field(null, 2, rng), b = random_directional_field(null, 2, rng);
    const VectorField c = random_directional_field(null, 2, rng);
    CHECK(c_constraints(a, b, eta()).all_zero());
    CHECK(is_zero(c_jacobiator(a, b, c, eta())));
  }
  VectorField k = zero_components(3);
  k[0] = FourierScalar::constant(3, q(1));
  CHECK(is_zero(c_jacobiator(k, k, k, eta())));
  VectorField a = zero_components(3), b = zero_components(3), c = zero_components(3);
  a[1] = mode({1, 0, 0});
  b[0] = mode({1, 0, 0});
  c[0] = mode({0, 1, 0}, q(2));
  c[1] = mode({1, 0, 0}, q(-1));
  CHECK_FALSE(c_constraints(a, b, eta()).all_zero());
  CHECK_FALSE(is_zero(c_jacobiator(a, b, c, eta())));
}

TEST_CASE("Delta_minus and the strong constraint") {
  const FourierScalar f = mode({1, 0, 0, 1, 0, 0});
  CHECK(delta_minus(f) == f * q(-2));
  CHECK(delta_minus(mode({1, 2, 0, 0, 0, 0})).is_zero());
  CHECK(delta_minus(mode({0, 0, 0, 3, 0, 1})).is_zero());
  const FourierScalar g = mode({0, 1, 1, 0, 0, 0}), h = mode({2, 0, 1, 0, 0, 0});
  CHECK(strong_constraint_check(g, h).cross_free);
  const FourierScalar x = mode({1, 0, 0, 0, 0, 0}), xt = mode({0, 0, 0, 1, 0, 0});
  CHECK_FALSE(strong_constraint_check(x, xt).cross_free);
  CHECK(strong_cross_term(x, xt) == strong_cross_term(xt, x));
  CHECK_THROWS_AS(delta_minus(mode({1, 0, 0})), Error);
}

TEST_CASE("double bracket") {
  Rng rng(53);
  Bivector c(2);
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) c.at(k, l) = FourierScalar::constant(4, q(k + 2 * l + 1));
  }
  const Bivector g = random_bivector(2, 1, rng), h = random_bivector(2, 1, rng);
  CHECK(double_bracket(c, c).is_zero());
  CHECK(double_bracket(g, h) == double_bracket(h, g));
  Bivector g2 = g;
  g2 += g;
  const Bivector twice = double_bracket(g, h) + double_bracket(g, h);
  CHECK(double_bracket(g2, h) == twice);
}

TEST_CASE("bivector residual on a diagonal single-mode field") {
  // g = diag(e^{i x1}, e^{i xbar1}), phi = 0; term by term:
  //   div g = (v, vbar) = (0, (i e^{i x1}, 0)), [[g,g]] = 0,
  //   L_V g has the single entry vbar^1 dbar_1 g^{2 2bar} = -e^{i(x1 + xbar1)}
  Bivector g(2);
  g.at(0, 0) = mode({1, 0, 0, 0});
  g.at(1, 1) = mode({0, 0, 1, 0});
  const BivectorResidual r = bivector_mc_residual(g, FourierScalar(4));
  CHECK(double_bracket(g, g).is_zero());
  Bivector expect(2);
  expect.at(1, 1) = mode({1, 0, 1, 0}, q(-1));
  CHECK(r.bilinear == expect);
  CHECK(r.scalar.is_zero());
  const auto it = std::find(r.holomorphic.begin(), r.holomorphic.end(), mode({1, 0, 0, 0}, q(-1)));
  CHECK(it != r.holomorphic.end());
  CHECK_FALSE(r.all_zero());
}

TEST_CASE("constant bivector with phi = 0 is a solution") {
  Bivector g(3);
  for (int k = 0; k < 3; ++k) g.at(k, k) = FourierScalar::constant(6, q(k + 1));
  CHECK(bivector_mc_residual(g, FourierScalar(6)).all_zero());
}
