#include "bvdouble/bvops.hpp"
#include "support.hpp"

using namespace bvdouble;
using namespace bvtest;

TEST_CASE("square-zero operators and [b,c] = 1 in every degree") {
  for_samples(16, 4, [](Rng& rng, int i) {
    const BVElement x = random_element(i % 4, 3, 2, rng);
    CHECK(Q(Q(x)).is_zero());
    CHECK(b_op(b_op(x)).is_zero());
    CHECK(c_op(c_op(x)).is_zero());
    CHECK((Q(b_op(x)) + b_op(Q(x))).is_zero());
    CHECK(b_op(c_op(x)) + c_op(b_op(x)) == x);
    CHECK(Q(x) == d_part(x) + dstar_part(x) + qtilde_part(x));
  });
}

TEST_CASE("d* vanishes on covectors and kills du") {
  GenSection a(3);
  a.form[1] = mode({1, 2, 0});
  CHECK(dstar(BVElement::section(a)).is_zero());
  const FourierScalar u = mode({1, 1, 1}, q(2));
  CHECK(dstar(Q(BVElement::deg0(u))).is_zero());
  CHECK(dtilde_inverse(dtilde(u)) == u);
  CHECK_THROWS_AS(dstar(BVElement::deg0(u)), Error);
}

TEST_CASE("projection onto F_c") {
  for_samples(12, 5, [](Rng& rng, int i) {
    const BVElement x = random_element(i % 4, 3, 2, rng);
    const BVElement p = project_Fc(x);
    CHECK(project_Fc(p) == p);
    CHECK(in_Fc(Q(p)));
  });
  GenSection a(3);
  a.vec[0] = mode({0, 1, 0});  // divergence free
  CHECK(project_Fc(BVElement::deg1(a, mode({1, 0, 0}))) == BVElement::section(a));
  // v = -1/2 div A
  GenSection b(3);
  b.vec[0] = mode({1, 0, 0});
  CHECK(project_Fc(BVElement::section(b)).scalar() == mode({1, 0, 0}, qi(-1, 2)));
}

TEST_CASE("odd pairing conditions and orthogonality") {
  for_samples(20, 6, [](Rng& rng, int i) {
    const int d1 = i % 3;
    const BVElement a1 = random_element(d1, 3, 2, rng), a2 = random_element(2 - d1, 3, 2, rng);
    CHECK(pairing_q_condition(a1, a2).is_zero());
    CHECK(pairing_c_condition(a1, a2).is_zero());
    const BVElement b1 = random_element(1 + i % 3, 3, 2, rng), b2 = random_element(3 - i % 3, 3, 2, rng);
    CHECK(pairing_b_condition(b1, b2).is_zero());
    const BVElement v = BVElement::vslot(random_scalar(3, 2, rng));
    CHECK(odd_pairing(project_Fc(random_element(1, 3, 2, rng)), Q(v)).is_zero());
    CHECK(odd_pairing(project_Fc(random_element(2, 3, 2, rng)), v).is_zero());
  });
}

TEST_CASE("odd pairing is symmetric and zero off its support") {
  for_samples(8, 7, [](Rng& rng, int i) {
    const int d = i % 4;
    const BVElement x = random_element(d, 3, 2, rng), y = random_element(3 - d, 3, 2, rng);
    CHECK(odd_pairing(x, y) == odd_pairing(y, x));
    CHECK(odd_pairing(x, x).is_zero());
  });
  CHECK(odd_pairing(BVElement::deg0(mode({0, 0, 0})), BVElement::deg3(mode({0, 0, 0}))) == q(-2));
}

TEST_CASE("adding elements of different nonzero degrees throws") {
  const BVElement a = BVElement::deg0(mode({1, 0, 0}));
  const BVElement b = BVElement::deg3(mode({1, 0, 0}));
  CHECK_THROWS_AS(a + b, Error);
  CHECK(a + BVElement::zero(2, 3) == a);
}
