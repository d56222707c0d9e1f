#include "bvdouble/exterior.hpp"
#include "support.hpp"

using namespace bvdouble;
using namespace bvtest;

namespace {

FourierScalar one3() { return FourierScalar::constant(3, q(1)); }

}  // namespace

TEST_CASE("wedge basics") {
  const auto dx1 = DifferentialForm::basis({0}, one3());
  const auto dx2 = DifferentialForm::basis({1}, one3());
  CHECK(wedge(dx1, dx1).is_zero());
  CHECK(wedge(dx1, dx2) == -wedge(dx2, dx1));
  const FourierScalar f = mode({1, 0, 0}), g = mode({0, 2, 1}, q(3));
  CHECK(wedge(DifferentialForm::basis({0}, f), DifferentialForm::basis({1}, g)) ==
        DifferentialForm::basis({0, 1}, f * g));
  CHECK(DifferentialForm::basis({1, 0}, f) == DifferentialForm::basis({0, 1}, -f));
  CHECK(wedge(DifferentialForm::basis({0, 1}, f), DifferentialForm::basis({1, 2}, f)).is_zero());
}

TEST_CASE("hodge star examples") {
  const Metric id = Metric::diagonal({1, 1, 1});
  CHECK(hodge(DifferentialForm::basis({0}, one3()), id) == DifferentialForm::basis({1, 2}, one3()));
  const Metric eta4({{Rational(4), 0, 0}, {0, Rational(1), 0}, {0, 0, Rational(-1)}});
  // sqrt|det| = 2
  CHECK(hodge(DifferentialForm::scalar(one3()), eta4) == DifferentialForm::basis({0, 1, 2}, FourierScalar::constant(3, q(2))));
  CHECK_THROWS_AS(hodge(DifferentialForm::scalar(one3()), Metric::diagonal({2, 1, 1})), Error);
}

TEST_CASE("d^2 = 0, Leibniz, ** sign and pairing symmetry") {
  const Metric eta = Metric::diagonal({1, 1, -1});
  for_samples(16, 40, [&](Rng& rng, int i) {
    const int p = i % 4, r = (i / 4) % 4;
    const auto a = random_form(p, 3, 1, rng), b = random_form(r, 3, 1, rng);
    CHECK(dform(dform(a)).is_zero());
    CHECK(dform(wedge(a, b)) == wedge(dform(a), b) + wedge(a, dform(b)) * sign(p));
    CHECK(hodge(hodge(a, eta), eta) == a * sign(p * (3 - p) + 1));
    const auto c = random_form(p, 3, 1, rng);
    CHECK(hodge_pairing(a, c, eta) == hodge_pairing(c, a, eta));
  });
}

TEST_CASE("form table cells") {
  const Metric eta = Metric::diagonal({1, 1, -1});
  const YmElement w(0, DifferentialForm::scalar(mode({1, 0, 0})));
  const YmElement b(1, DifferentialForm::basis({2}, mode({0, 1, 0})));
  CHECK(ym_mu_sym(w, b, eta) == YmElement(1, DifferentialForm::basis({2}, mode({1, 1, 0}))));
  const YmElement dx1(1, DifferentialForm::basis({0}, one3()));
  const YmElement dx2(1, DifferentialForm::basis({1}, one3()));
  CHECK(ym_mu_sym(dx1, dx2, eta).is_zero());
  Rng rng(41);
  CHECK(ym_nu_sym(random_ym_element(0, 3, 1, rng), dx1, dx2, eta).is_zero());
  CHECK(ym_nu_sym(dx1, dx2, random_ym_element(2, 3, 1, rng), eta).is_zero());
  CHECK_FALSE(ym_nu_sym(random_ym_element(1, 3, 1, rng), random_ym_element(1, 3, 1, rng),
                        random_ym_element(1, 3, 1, rng), eta).is_zero());
}

TEST_CASE("form C-infinity relations and transport into the complex") {
  const Metric eta = Metric::diagonal({1, 1, -1});
  for_samples(20, 42, [&](Rng& rng, int i) {
    const int d1 = i % 4, d2 = (i / 4) % (4 - d1);
    const int d3 = std::max(0, 3 - d1 - d2 - (i % 2));
    const auto a1 = random_ym_element(d1, 3, 1, rng), a2 = random_ym_element(d2, 3, 1, rng);
    const auto a3 = random_ym_element(d3, 3, 1, rng);
    CHECK(ym_cinf_residuals(a1, a2, a3, eta).all_zero());
    CHECK(mu_eta_sym(ym_to_bv(a1, eta), ym_to_bv(a2, eta), eta) == ym_to_bv(ym_mu_sym(a1, a2, eta), eta));
    CHECK(Q_eta(ym_to_bv(a1, eta), eta) == ym_to_bv(ym_Q(a1, eta), eta));
  });
  const YmElement z = YmElement::zero(1, 3);
  CHECK(ym_cinf_residuals(z, z, z, eta).all_zero());
}
