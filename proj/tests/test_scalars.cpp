#include "bvdouble/scalars.hpp"
#include "support.hpp"

using namespace bvdouble;
using namespace bvtest;

TEST_CASE("rationals round-trip through p/q strings") {
  CHECK(rational_string(parse_rational("6/4")) == "3/2");
  CHECK(rational_string(parse_rational("-5")) == "-5/1");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("gaussian rationals") {
  const GaussRational a(Rational(1, 2), Rational(3));
  CHECK(a * a.inverse() == q(1));
  CHECK(qi(1) * qi(1) == q(-1));
  CHECK(GaussRational::from_json(a.to_json()) == a);
}

TEST_CASE("mode products add mode vectors") {
  const FourierScalar f = mode({1, 0}, q(2)) + mode({0, 1}, q(3));
  const FourierScalar g = mode({-1, 0}, q(1, 2));
  const FourierScalar fg = f * g;
  CHECK(fg == mode({0, 0}, q(1)) + mode({-1, 1}, q(3, 2)));
  CHECK(integrate(fg) == q(1));
  CHECK(fg == g * f);
}

TEST_CASE("partial derivative multiplies by i k_j") {
  const FourierScalar f = mode({2, -1, 0}, q(3));
  CHECK(partial(f, 0) == mode({2, -1, 0}, qi(6)));
  CHECK(partial(f, 1) == mode({2, -1, 0}, qi(-3)));
  CHECK(partial(f, 2).is_zero());
  CHECK_THROWS_AS(partial(f, 3), Error);
}

TEST_CASE("laplacian of a mode is -eta(k,k)") {
  const Metric eta = Metric::diagonal({1, 1, -1});
  const FourierScalar f = mode({1, 2, 1});
  // -(1 + 4 - 1)
  CHECK(laplacian(f, eta) == mode({1, 2, 1}, q(-4)));
  CHECK(laplacian(mode({1, 0, 1}), eta).is_zero());
}

TEST_CASE("product is associative, commutative and satisfies Leibniz") {
  for_samples(20, 1, [](Rng& rng, int) {
    const auto f = random_scalar(3, 2, rng), g = random_scalar(3, 2, rng), h = random_scalar(3, 2, rng);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    for (int j = 0; j < 3; ++j) CHECK(partial(f * g, j) == partial(f, j) * g + f * partial(g, j));
    CHECK((f + g) - g == f);
  });
}

TEST_CASE("metric inverse, determinant and square root") {
  const Metric eta({{Rational(2), Rational(1)}, {Rational(1), Rational(1)}});
  CHECK(eta.det() == 1);
  CHECK(eta.down(0, 0) == 1);
  CHECK(eta.down(0, 1) == -1);
  CHECK(eta.down(1, 1) == 2);
  CHECK(*Metric::diagonal({4, -1}).sqrt_abs_det() == 2);
  CHECK_FALSE(Metric::diagonal({2, 1}).sqrt_abs_det().has_value());
  CHECK_THROWS_AS(Metric::zero(2).down(0, 0), Error);
  CHECK_THROWS_AS(Metric({{Rational(1), Rational(2)}, {Rational(0), Rational(1)}}), Error);
}

TEST_CASE("fourier scalars serialize and parse back") {
  for_samples(5, 2, [](Rng& rng, int) {
    const auto f = random_scalar(3, 2, rng);
    CHECK(FourierScalar::from_json(3, f.to_json()) == f);
  });
}
