#include "bvdouble/sections.hpp"
#include "support.hpp"

using namespace bvdouble;
using namespace bvtest;

namespace {

GenSection vec_only(int dim, int comp, const FourierScalar& f) {
  GenSection s(dim);
  s.vec[comp] = f;
  return s;
}

GenSection form_only(int dim, int comp, const FourierScalar& f) {
  GenSection s(dim);
  s.form[comp] = f;
  return s;
}

}  // namespace

TEST_CASE("dorfman of a constant field and a mode field") {
  const GenSection x1 = vec_only(2, 0, FourierScalar::constant(2, q(1)));
  const GenSection x2 = vec_only(2, 1, mode({1, 0}));
  CHECK(dorfman(x1, x2) == vec_only(2, 1, mode({1, 0}, qi(1))));
  CHECK(dorfman(x2, x1) == vec_only(2, 1, mode({1, 0}, qi(-1))));
}

TEST_CASE("dorfman of a field with a one-form is the Lie derivative") {
  // [X, xi] = L_X xi; X = e^{i x2} d_1, xi = e^{i x1} dx^1 in D = 2
  const GenSection x = vec_only(2, 0, mode({0, 1}));
  const GenSection xi = form_only(2, 0, mode({1, 0}));
  // (L_X xi)_j = X^i d_i xi_j + xi_i d_j X^i
  GenSection expect(2);
  expect.form[0] = mode({1, 1}, qi(1));
  expect.form[1] = mode({1, 1}, qi(1));
  CHECK(dorfman(x, xi) == expect);
}

TEST_CASE("pairing is xi(Y) + eta(X)") {
  const GenSection a = vec_only(3, 0, FourierScalar::constant(3, q(1)));
  const GenSection b = form_only(3, 0, FourierScalar::constant(3, q(1)));
  CHECK(pairing(a, b) == FourierScalar::constant(3, q(1)));
  CHECK(pairing(a, a).is_zero());
}

TEST_CASE("Courant and Calabi-Yau axioms hold on random sections") {
  for_samples(10, 3, [](Rng& rng, int) {
    const auto a1 = random_section(3, 2, rng), a2 = random_section(3, 2, rng), a3 = random_section(3, 2, rng);
    const auto u = random_scalar(3, 2, rng), u1 = random_scalar(3, 2, rng), u2 = random_scalar(3, 2, rng);
    CHECK(courant_axiom_residuals(a1, a2, a3, u, u1, u2).all_zero());
    CHECK(cy_axiom_residuals(u, a1, a2).all_zero());
  });
}

TEST_CASE("zero inputs give zero residuals") {
  const GenSection z(3);
  const FourierScalar s(3);
  CHECK(courant_axiom_residuals(z, z, z, s, s, s).all_zero());
  CHECK(cy_axiom_residuals(s, z, z).all_zero());
}

TEST_CASE("antisymmetrized dorfman bracket is not skew-Jacobi") {
  Rng rng(9);
  bool found = false;
  for (int i = 0; i < 5 && !found; ++i) {
    const auto a = random_section(3, 1, rng), b = random_section(3, 1, rng), c = random_section(3, 1, rng);
    auto skew = [](const GenSection& x, const GenSection& y) {
      return (dorfman(x, y) - dorfman(y, x)) * q(1, 2);
    };
    const GenSection jac = skew(skew(a, b), c) + skew(skew(b, c), a) + skew(skew(c, a), b);
    found = !jac.is_zero();
  }
  CHECK(found);
}
