#include "bvdouble/bvops.hpp"

namespace bvdouble {

namespace {

const GaussRational kHalf(Rational(1, 2));

void same_dim(const BVElement& a, const BVElement& b) {
  if (a.dim() != b.dim()) throw Error("element dimension mismatch");
}

bool both(const BVElement& a1, const BVElement& a2, int d1, int d2) {
  return a1.degree() == d1 && a2.degree() == d2;
}

BVElement section_of(const BVElement& a) { return BVElement::section(a.sec()); }

}  // namespace

BVElement mu(const BVElement& a1, const BVElement& a2) {
  same_dim(a1, a2);
  const int d1 = a1.degree();
  const int d2 = a2.degree();
  const int dim = a1.dim();
  if (d1 < 0 || d2 < 0 || d1 + d2 > 3 || a1.is_zero() || a2.is_zero()) {
    return BVElement::zero(d1 + d2, dim);
  }
  if (d1 == 0) {
    const FourierScalar& u = a1.scalar();
    switch (d2) {
      case 0:
        return BVElement::deg0(u * a2.scalar());
      case 1:
        return BVElement::deg1(module_action(u, a2.sec()), u * a2.scalar());
      case 2:
        return BVElement::deg2(module_action(u, a2.sec()), u * a2.scalar());
      default:
        return BVElement::deg3(u * a2.scalar());
    }
  }
  if (d2 == 0) {
    const FourierScalar& u = a2.scalar();
    switch (d1) {
      case 1:
        return BVElement::deg1(module_action(u, a1.sec()),
                               a1.scalar() * u - anchor(a1.sec(), u));
      case 2:
        return BVElement::deg2(module_action(u, a1.sec()), a1.scalar() * u);
      default:
        return BVElement::deg3(a1.scalar() * u);
    }
  }
  const GenSection& x1 = a1.sec();
  const GenSection& x2 = a2.sec();
  if (d1 == 1 && d2 == 1) {
    GenSection xt = dorfman(x1, x2) + module_action(a2.scalar(), x1) - module_action(a1.scalar(), x2);
    return BVElement::deg2(std::move(xt), pairing(x1, x2) * kHalf);
  }
  if (d1 == 1) {
    return BVElement::deg3(pairing(x1, x2) * -kHalf + anchor(x1, a2.scalar()) -
                           a1.scalar() * a2.scalar());
  }
  return BVElement::deg3(pairing(x1, x2) * -kHalf + anchor(x2, a1.scalar()) -
                         a1.scalar() * a2.scalar());
}

BVElement m(const BVElement& a1, const BVElement& a2) {
  same_dim(a1, a2);
  if (both(a1, a2, 1, 1)) return BVElement::vslot(pairing(a1.sec(), a2.sec()));
  return BVElement::zero(a1.degree() + a2.degree() - 1, a1.dim());
}

BVElement n(const BVElement& a1, const BVElement& a2) {
  return b_op(m(a1, a2)) + m(b_op(a1), a2) + m(a1, b_op(a2)) * sign(a1.degree());
}

BVElement bracket(const BVElement& a1, const BVElement& a2) {
  const int d1 = a1.degree();
  return (b_op(mu(a1, a2)) - mu(b_op(a1), a2) - mu(a1, b_op(a2)) * sign(d1)) * sign(d1);
}

BVElement nu(const BVElement& a1, const BVElement& a2, const BVElement& a3) {
  same_dim(a1, a2);
  same_dim(a1, a3);
  const int d1 = a1.degree();
  const int d2 = a2.degree();
  const int d3 = a3.degree();
  BVElement r = BVElement::zero(d1 + d2 + d3 - 1, a1.dim());
  if (d3 != 1) return r;
  if (d1 == 1 && d2 == 1) {
    return mu(m(a1, a3), section_of(a2)) - mu(m(a2, a3), section_of(a1));
  }
  if (d1 == 2 && d2 == 1) return -mu(m(a2, a3), BVElement::vtslot(a1.scalar()));
  if (d1 == 1 && d2 == 2) return -mu(m(a1, a3), BVElement::vtslot(a2.scalar()));
  return r;
}

BVElement mu_sym(const BVElement& a1, const BVElement& a2) {
  return (mu(a1, a2) + mu(a2, a1) * sign(a1.degree() * a2.degree())) * kHalf;
}

BVElement nu_sym(const BVElement& a1, const BVElement& a2, const BVElement& a3) {
  same_dim(a1, a2);
  same_dim(a1, a3);
  const int d1 = a1.degree();
  const int d2 = a2.degree();
  const int d3 = a3.degree();
  if (d1 == 1 && d2 == 1 && d3 == 1) {
    BVElement x1 = section_of(a1), x2 = section_of(a2), x3 = section_of(a3);
    return mu(m(x1, x3), x2) - mu(m(x2, x3), x1) * kHalf - mu(m(x1, x2), x3) * kHalf;
  }
  if (d1 == 1 && d2 == 1 && d3 == 2) {
    return mu(m(a1, a2), BVElement::vtslot(a3.scalar())) * -kHalf;
  }
  if (d1 == 2 && d2 == 1 && d3 == 1) {
    return mu(m(a2, a3), BVElement::vtslot(a1.scalar())) * -kHalf;
  }
  if (d1 == 1 && d2 == 2 && d3 == 1) return -mu(m(a1, a3), BVElement::vtslot(a2.scalar()));
  return BVElement::zero(d1 + d2 + d3 - 1, a1.dim());
}

BVElement bracket_antisym(const BVElement& a1, const BVElement& a2) {
  const int s = (a1.degree() - 1) * (a2.degree() - 1);
  return (bracket(a1, a2) - bracket(a2, a1) * sign(s)) * kHalf;
}

namespace {

const GaussRational kSixth(Rational(1, 6));

BVElement l3_core3(const GenSection& x1, const GenSection& x2, const GenSection& x3) {
  BVElement a1 = BVElement::section(x1), a2 = BVElement::section(x2), a3 = BVElement::section(x3);
  return (n(a1, bracket_antisym(a2, a3)) + n(a2, bracket_antisym(a3, a1)) +
          n(a3, bracket_antisym(a1, a2))) *
         kSixth;
}

/// Cell with two sections and the section part of a degree-2 argument, entered as B = b(At).
BVElement l3_core2(const GenSection& x1, const GenSection& x2, const GenSection& xt) {
  BVElement a1 = BVElement::section(x1), a2 = BVElement::section(x2), bb = BVElement::section(-xt);
  return (m(a1, bracket_antisym(a2, bb)) + m(a2, bracket_antisym(bb, a1)) +
          m(bb, bracket_antisym(a1, a2))) *
         -kSixth;
}

}  // namespace

BVElement l3_bracket(const BVElement& a1, const BVElement& a2, const BVElement& a3) {
  same_dim(a1, a2);
  same_dim(a1, a3);
  const int d1 = a1.degree();
  const int d2 = a2.degree();
  const int d3 = a3.degree();
  if (d1 == 1 && d2 == 1 && d3 == 1) return l3_core3(a1.sec(), a2.sec(), a3.sec());
  if (d1 == 1 && d2 == 1 && d3 == 2) return l3_core2(a1.sec(), a2.sec(), a3.sec());
  if (d1 == 1 && d2 == 2 && d3 == 1) return l3_core2(a1.sec(), a3.sec(), a2.sec());
  if (d1 == 2 && d2 == 1 && d3 == 1) return l3_core2(a2.sec(), a3.sec(), a1.sec());
  return BVElement::zero(d1 + d2 + d3 - 3, a1.dim());
}

BVElement l3_bracket_printed(const BVElement& a1, const BVElement& a2, const BVElement& a3) {
  if (a1.degree() != 1 || a2.degree() != 1 || a3.degree() != 1) {
    return BVElement::zero(a1.degree() + a2.degree() + a3.degree() - 3, a1.dim());
  }
  BVElement x1 = section_of(a1), x2 = section_of(a2), x3 = section_of(a3);
  return (n(x1, bracket_antisym(x2, x3)) + n(x2, bracket_antisym(x1, x3)) +
          n(x3, bracket_antisym(x1, x2))) *
         GaussRational(Rational(1, 3));
}

BVElement antisym_jacobiator(const BVElement& a0, const BVElement& a1, const BVElement& a2) {
  return bracket_antisym(bracket_antisym(a0, a1), a2) + bracket_antisym(bracket_antisym(a2, a0), a1) +
         bracket_antisym(bracket_antisym(a1, a2), a0);
}

BVElement nprime(const BVElement& a1, const BVElement& a2, const BVElement& a3) {
  const int d1 = a1.degree();
  const int d2 = a2.degree();
  const int d3 = a3.degree();
  return n(mu(a1, a2), a3) + mu(n(a3, a1), a2) * sign(d3 * (d1 + d2)) +
         mu(a1, n(a3, a2)) * sign(d2 * d3);
}

BVElement q_bracket_residual(const BVElement& a1, const BVElement& a2) {
  return Q(bracket(a1, a2)) - bracket(Q(a1), a2) - bracket(a1, Q(a2)) * sign(a1.degree() - 1);
}

BVElement b_bracket_residual(const BVElement& a1, const BVElement& a2) {
  return b_op(bracket(a1, a2)) - bracket(b_op(a1), a2) -
         bracket(a1, b_op(a2)) * sign(a1.degree() - 1);
}

BVElement bracket_derivation_residual(const BVElement& a1, const BVElement& a2, const BVElement& a3) {
  const int d1 = a1.degree();
  const int d2 = a2.degree();
  return bracket(a1, mu(a2, a3)) - mu(bracket(a1, a2), a3) -
         mu(a2, bracket(a1, a3)) * sign((d1 - 1) * d2);
}

BVElement homotopy_symmetry_residual(const BVElement& a1, const BVElement& a2) {
  const int d1 = a1.degree();
  const int d2 = a2.degree();
  BVElement lhs = bracket(a1, a2) + bracket(a2, a1) * sign((d1 - 1) * (d2 - 1));
  BVElement rhs = (Q(n(a1, a2)) - n(Q(a1), a2) - n(a1, Q(a2)) * sign(d1)) * sign(d1 - 1);
  return lhs - rhs;
}

BVElement jacobi_residual(const BVElement& a1, const BVElement& a2, const BVElement& a3) {
  const int d1 = a1.degree();
  const int d2 = a2.degree();
  return bracket(bracket(a1, a2), a3) - bracket(a1, bracket(a2, a3)) +
         bracket(a2, bracket(a1, a3)) * sign((d1 - 1) * (d2 - 1));
}

BVElement nprime_residual(const BVElement& a1, const BVElement& a2, const BVElement& a3) {
  const int d1 = a1.degree();
  const int d2 = a2.degree();
  const int d3 = a3.degree();
  BVElement lhs = bracket(mu(a1, a2), a3) - mu(a1, bracket(a2, a3)) -
                  mu(bracket(a1, a3), a2) * sign((d3 - 1) * d2);
  BVElement rhs = (Q(nprime(a1, a2, a3)) - nprime(Q(a1), a2, a3) -
                   nprime(a1, Q(a2), a3) * sign(d1) - nprime(a1, a2, Q(a3)) * sign(d1 + d2)) *
                  sign(d1 + d2 - 1);
  return lhs - rhs;
}

BVElement bracket_dorfman_residual(const GenSection& x1, const GenSection& x2) {
  return bracket(BVElement::section(x1), BVElement::section(x2)) -
         BVElement::section(dorfman(x1, x2));
}

BVElement c_mu_residual(const BVElement& a1, const BVElement& a2) {
  return c_op(mu(a1, a2)) - mu(a1, c_op(a2)) * sign(a1.degree());
}

BVElement c_bracket_compat_residual(const BVElement& a1, const BVElement& a2) {
  return c_op(bracket(a1, a2)) - bracket(a1, c_op(a2)) * sign(a1.degree() - 1);
}

BVElement l3_jacobiator_residual(const GenSection& x0, const GenSection& x1, const GenSection& x2) {
  BVElement a0 = BVElement::section(x0), a1 = BVElement::section(x1), a2 = BVElement::section(x2);
  return antisym_jacobiator(a0, a1, a2) - Q(l3_bracket(a0, a1, a2));
}

BVElement l3_b_derivation_residual(const BVElement& a1, const BVElement& a2, const BVElement& a3) {
  const int d1 = a1.degree();
  const int d2 = a2.degree();
  return b_op(l3_bracket(a1, a2, a3)) + l3_bracket(b_op(a1), a2, a3) +
         l3_bracket(a1, b_op(a2), a3) * sign(d1) + l3_bracket(a1, a2, b_op(a3)) * sign(d1 + d2);
}

namespace {

enum class HalfSlot { u, section, v };

HalfSlot classify(const BVElement& x) {
  if (x.degree() == 0) return HalfSlot::u;
  if (x.degree() == 1 && x.scalar().is_zero()) return HalfSlot::section;
  if (x.degree() == 1 && x.sec().is_zero()) return HalfSlot::v;
  throw Error("half_complex_violation: argument is not slot-pure in u + (A, v)");
}

}  // namespace

BVElement half_complex_violation(const BVElement& x, const BVElement& y) {
  const HalfSlot sx = classify(x);
  const HalfSlot sy = classify(y);
  BVElement br = bracket(x, y);
  const int dim = x.dim();
  // {u, v} and {v, u} vanish; {v, v} vanishes.
  if ((sx == HalfSlot::u || sx == HalfSlot::v) && (sy == HalfSlot::u || sy == HalfSlot::v) &&
      !(sx == HalfSlot::u && sy == HalfSlot::u)) {
    return br;
  }
  // {A, v}, {v, A} stay in the v slot.
  if ((sx == HalfSlot::section && sy == HalfSlot::v) || (sx == HalfSlot::v && sy == HalfSlot::section)) {
    if (br.degree() != 1) return br;
    return BVElement::section(br.sec());
  }
  // {A1, A2} stays in degree 1; {A, u}, {u, A}, {u, u} in degree 0.
  const int expected = (sx == HalfSlot::section && sy == HalfSlot::section) ? 1 : 0;
  if (br.degree() != expected) return br;
  return BVElement::zero(expected, dim);
}

GaussRational pairing_q_condition(const BVElement& a1, const BVElement& a2) {
  return odd_pairing(Q(a1), a2) + odd_pairing(Q(a2), a1) * sign(a1.degree() * a2.degree());
}

GaussRational pairing_b_condition(const BVElement& a1, const BVElement& a2) {
  return odd_pairing(b_op(a1), a2) - odd_pairing(b_op(a2), a1) * sign(a1.degree() * a2.degree());
}

GaussRational pairing_c_condition(const BVElement& a1, const BVElement& a2) {
  return odd_pairing(c_op(a1), a2) + odd_pairing(c_op(a2), a1) * sign(a1.degree() * a2.degree());
}

GaussRational cyclic_form(const std::vector<BVElement>& phis) {
  for (const auto& p : phis) {
    if (!in_Fc(p)) throw Error("cyclic_form: argument outside the subcomplex F_c");
  }
  switch (phis.size()) {
    case 2:
      return odd_pairing(Q(phis[0]), phis[1]);
    case 3:
      return odd_pairing(mu_sym(phis[0], phis[1]), phis[2]);
    case 4:
      return odd_pairing(nu_sym(phis[0], phis[1], phis[2]), phis[3]);
    default:
      throw Error("cyclic_form: expects 2, 3 or 4 arguments");
  }
}

GaussRational cyclic_sign_residual(const std::vector<BVElement>& phis) {
  const int k = static_cast<int>(phis.size());
  int others = 0;
  for (int i = 0; i + 1 < k; ++i) others += phis[i].degree();
  std::vector<BVElement> rotated;
  rotated.push_back(phis.back());
  rotated.insert(rotated.end(), phis.begin(), phis.end() - 1);
  return cyclic_form(phis) -
         cyclic_form(rotated) * sign(k - 1) * sign(phis.back().degree() * others);
}

}  // namespace bvdouble
