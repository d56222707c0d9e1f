#include "bvdouble/bvops.hpp"
#include "support.hpp"

using namespace bvdouble;
using namespace bvtest;

namespace {

GenSection vec_only(int dim, int comp, const FourierScalar& f) {
  GenSection s(dim);
  s.vec[comp] = f;
  return s;
}

BVElement rnd(Rng& rng, int degree) { return random_element(degree, 3, 2, rng); }

}  // namespace

TEST_CASE("mu of two vector fields is their Dorfman bracket plus half the pairing") {
  const BVElement a1 = BVElement::section(vec_only(2, 0, FourierScalar::constant(2, q(1))));
  const BVElement a2 = BVElement::section(vec_only(2, 1, mode({1, 0})));
  const BVElement r = mu(a1, a2);
  CHECK(r.degree() == 2);
  CHECK(r == BVElement::deg2(vec_only(2, 1, mode({1, 0}, qi(1))), FourierScalar(2)));
}

TEST_CASE("mu table corner cells") {
  const FourierScalar v1 = mode({1, 0, 0}), v2 = mode({0, 1, 0});
  CHECK(mu(BVElement::vslot(v1), BVElement::vslot(v2)).is_zero());
  Rng rng(11);
  const BVElement x = rnd(rng, 2);
  CHECK(mu(BVElement::deg0(FourierScalar::constant(3, q(1))), x) == x);
  CHECK(mu(rnd(rng, 2), rnd(rng, 2)).is_zero());
}

TEST_CASE("m pairs two sections into the v slot") {
  GenSection y(3);
  y.form[0] = FourierScalar::constant(3, q(1));
  const BVElement r = m(BVElement::section(vec_only(3, 0, FourierScalar::constant(3, q(1)))), BVElement::section(y));
  CHECK(r == BVElement::vslot(FourierScalar::constant(3, q(1))));
  Rng rng(12);
  CHECK(m(rnd(rng, 0), rnd(rng, 1)).is_zero());
  CHECK(m(rnd(rng, 1), rnd(rng, 2)).is_zero());
  const BVElement a = BVElement::section(random_section(3, 2, rng)), b = BVElement::section(random_section(3, 2, rng));
  CHECK(n(a, b) == n(b, a));
}

TEST_CASE("bracket special values") {
  Rng rng(13);
  CHECK(bracket(rnd(rng, 0), rnd(rng, 0)).is_zero());
  const BVElement du = BVElement::section(exterior_d(random_scalar(3, 2, rng)));
  CHECK(bracket(du, BVElement::section(random_section(3, 2, rng))).is_zero());
  const GenSection x1 = random_section(3, 2, rng), x2 = random_section(3, 2, rng);
  CHECK(bracket_dorfman_residual(x1, x2).is_zero());
}

TEST_CASE("nu support") {
  Rng rng(14);
  CHECK(nu(rnd(rng, 0), rnd(rng, 1), rnd(rng, 1)).is_zero());
  CHECK(nu(rnd(rng, 1), rnd(rng, 1), rnd(rng, 0)).is_zero());
  const BVElement vt = BVElement::vtslot(random_scalar(3, 2, rng));
  const BVElement a2 = BVElement::section(random_section(3, 2, rng));
  const BVElement a3 = BVElement::section(random_section(3, 2, rng));
  CHECK(nu(vt, a2, a3) == -mu(m(a2, a3), vt));
  CHECK(nu_sym(a2, a3, vt) == mu(m(a2, a3), vt) * q(-1, 2));
}

TEST_CASE("A-infinity relations for (Q, mu, nu) and (Q, mu_sym, nu_sym)") {
  const BvOps o;
  const BvSymOps s;
  for_samples(12, 15, [&](Rng& rng, int i) {
    const int d1 = i % 2, d2 = 1, d3 = (i / 2) % 2;
    const BVElement a1 = rnd(rng, d1), a2 = rnd(rng, d2), a3 = rnd(rng, d3);
    CHECK(q_derivation_residual(o, a1, a2).is_zero());
    CHECK(homotopy_commutativity_residual(o, a1, a2).is_zero());
    CHECK(homotopy_associativity_residual(o, a1, a2, a3).is_zero());
    CHECK(homotopy_associativity_residual(s, a1, a2, a3).is_zero());
    CHECK(shuffle12_residual(s, a1, a2, a3).is_zero());
    CHECK(shuffle21_residual(s, a1, a2, a3).is_zero());
  });
  for_samples(4, 16, [&](Rng& rng, int) {
    const BVElement a1 = rnd(rng, 1), a2 = rnd(rng, 1), a3 = rnd(rng, 1), a4 = rnd(rng, 1);
    CHECK(pentagon_residual(o, a1, a2, a3, a4).is_zero());
    CHECK(pentagon_residual(s, a1, a2, a3, a4).is_zero());
  });
}

TEST_CASE("nu is not shuffle-free; nu_sym is") {
  Rng rng(17);
  const BvOps o;
  bool found = false;
  for (int i = 0; i < 5 && !found; ++i) {
    found = !shuffle12_residual(o, rnd(rng, 1), rnd(rng, 1), rnd(rng, 1)).is_zero();
  }
  CHECK(found);
}

TEST_CASE("bracket relations on random degree-1 triples") {
  for_samples(6, 18, [](Rng& rng, int) {
    const BVElement a1 = rnd(rng, 1), a2 = rnd(rng, 1), a3 = rnd(rng, 1);
    CHECK(jacobi_residual(a1, a2, a3).is_zero());
    CHECK(nprime_residual(a1, a2, a3).is_zero());
    CHECK(bracket_derivation_residual(a1, a2, a3).is_zero());
    CHECK(homotopy_symmetry_residual(a1, a2).is_zero());
    CHECK(q_bracket_residual(a1, a2).is_zero());
    CHECK(b_bracket_residual(a1, a2).is_zero());
    CHECK(c_mu_residual(a1, a2).is_zero());
    CHECK(c_bracket_compat_residual(a1, a2).is_zero());
  });
}

TEST_CASE("half-complex brackets stay in the half-complex") {
  for_samples(6, 19, [](Rng& rng, int i) {
    const BVElement u = BVElement::deg0(random_scalar(3, 2, rng));
    const BVElement a = BVElement::section(random_section(3, 2, rng));
    const BVElement v = BVElement::vslot(random_scalar(3, 2, rng));
    const std::vector<BVElement> xs{u, a, v};
    CHECK(half_complex_violation(xs[i % 3], xs[(i + 1) % 3]).is_zero());
  });
}

TEST_CASE("trilinear bracket") {
  for_samples(4, 20, [](Rng& rng, int) {
    const GenSection x0 = random_section(3, 2, rng), x1 = random_section(3, 2, rng), x2 = random_section(3, 2, rng);
    CHECK(l3_jacobiator_residual(x0, x1, x2).is_zero());
    CHECK(l3_b_derivation_residual(rnd(rng, 1), rnd(rng, 1), rnd(rng, 2)).is_zero());
  });
  Rng rng(21);
  CHECK(l3_bracket(rnd(rng, 0), rnd(rng, 1), rnd(rng, 1)).is_zero());
  GenSection c0(3), c1(3), c2(3);
  c0.vec[0] = c1.form[1] = c2.vec[2] = FourierScalar::constant(3, q(1));
  CHECK(l3_bracket(BVElement::section(c0), BVElement::section(c1), BVElement::section(c2)).is_zero());
}

TEST_CASE("the printed trilinear normalization misses the Jacobiator") {
  Rng rng(22);
  bool differs = false;
  for (int i = 0; i < 5 && !differs; ++i) {
    const BVElement a = BVElement::section(random_section(3, 1, rng));
    const BVElement b = BVElement::section(random_section(3, 1, rng));
    const BVElement c = BVElement::section(random_section(3, 1, rng));
    differs = !(Q(l3_bracket_printed(a, b, c)) == antisym_jacobiator(a, b, c));
  }
  CHECK(differs);
}

TEST_CASE("cyclic forms") {
  for_samples(9, 23, [](Rng& rng, int i) {
    std::vector<BVElement> p2{project_Fc(rnd(rng, i % 3)), project_Fc(rnd(rng, 2 - i % 3))};
    CHECK(cyclic_sign_residual(p2).is_zero());
    std::vector<BVElement> p3{project_Fc(rnd(rng, 1)), project_Fc(rnd(rng, 1)), project_Fc(rnd(rng, 1))};
    CHECK(cyclic_sign_residual(p3).is_zero());
    std::vector<BVElement> p4{project_Fc(rnd(rng, 1)), project_Fc(rnd(rng, 1)), project_Fc(rnd(rng, 1)),
                              project_Fc(rnd(rng, 1))};
    CHECK(cyclic_sign_residual(p4).is_zero());
  });
  Rng rng(24);
  GenSection a(3);
  a.vec[0] = mode({1, 0, 0});
  CHECK_THROWS_AS(cyclic_form({BVElement::section(a), project_Fc(rnd(rng, 1))}), Error);
}
