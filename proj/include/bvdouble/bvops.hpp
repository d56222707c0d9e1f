#pragma once

#include <vector>

#include "bvdouble/bvcomplex.hpp"
#include "bvdouble/relations.hpp"

namespace bvdouble {

/// Product; zero when the degrees add up to more than 3.
BVElement mu(const BVElement& a1, const BVElement& a2);
/// Homotopy for commutativity: <A1,A2> in the v slot, nonzero only on two degree-1 sections.
BVElement m(const BVElement& a1, const BVElement& a2);
/// n = [b, m] = b m + m(b., .) + (-1)^{|a1|} m(., b.).
BVElement n(const BVElement& a1, const BVElement& a2);
/// {a1,a2} = (-1)^{|a1|} (b mu(a1,a2) - mu(b a1, a2) - (-1)^{|a1|} mu(a1, b a2)).
BVElement bracket(const BVElement& a1, const BVElement& a2);
/// Homotopy for associativity.
BVElement nu(const BVElement& a1, const BVElement& a2, const BVElement& a3);

BVElement mu_sym(const BVElement& a1, const BVElement& a2);
BVElement nu_sym(const BVElement& a1, const BVElement& a2, const BVElement& a3);
/// [a1,a2] = 1/2 ({a1,a2} - (-1)^{(|a1|-1)(|a2|-1)} {a2,a1}).
BVElement bracket_antisym(const BVElement& a1, const BVElement& a2);

/// Trilinear bracket, nonzero on (1,1,1) and on one degree-2 slot among degree-1 sections.
BVElement l3_bracket(const BVElement& a1, const BVElement& a2, const BVElement& a3);
/// The (1,1,1) cell with 1/3 normalization and n(A2,[A1,A3]); kept to show it misses the Jacobiator.
BVElement l3_bracket_printed(const BVElement& a1, const BVElement& a2, const BVElement& a3);
/// Jacobiator [[a0,a1],a2] + [[a2,a0],a1] + [[a1,a2],a0] of the antisymmetrized bracket.
BVElement antisym_jacobiator(const BVElement& a0, const BVElement& a1, const BVElement& a2);

/// Homotopy for the derivation property of the bracket over mu.
BVElement nprime(const BVElement& a1, const BVElement& a2, const BVElement& a3);

struct BvOps {
  BVElement Q(const BVElement& x) const { return bvdouble::Q(x); }
  BVElement mu(const BVElement& a, const BVElement& b) const { return bvdouble::mu(a, b); }
  BVElement m(const BVElement& a, const BVElement& b) const { return bvdouble::m(a, b); }
  BVElement nu(const BVElement& a, const BVElement& b, const BVElement& c) const {
    return bvdouble::nu(a, b, c);
  }
};

struct BvSymOps {
  BVElement Q(const BVElement& x) const { return bvdouble::Q(x); }
  BVElement mu(const BVElement& a, const BVElement& b) const { return mu_sym(a, b); }
  BVElement m(const BVElement& a, const BVElement& b) const { return bvdouble::m(a, b); }
  BVElement nu(const BVElement& a, const BVElement& b, const BVElement& c) const {
    return nu_sym(a, b, c);
  }
};

// Bracket relations.
BVElement q_bracket_residual(const BVElement& a1, const BVElement& a2);
BVElement b_bracket_residual(const BVElement& a1, const BVElement& a2);
BVElement bracket_derivation_residual(const BVElement& a1, const BVElement& a2, const BVElement& a3);
BVElement homotopy_symmetry_residual(const BVElement& a1, const BVElement& a2);
BVElement jacobi_residual(const BVElement& a1, const BVElement& a2, const BVElement& a3);
BVElement nprime_residual(const BVElement& a1, const BVElement& a2, const BVElement& a3);
/// Bracket of two sections minus their Dorfman bracket.
BVElement bracket_dorfman_residual(const GenSection& x1, const GenSection& x2);
BVElement c_mu_residual(const BVElement& a1, const BVElement& a2);
BVElement c_bracket_compat_residual(const BVElement& a1, const BVElement& a2);
BVElement l3_jacobiator_residual(const GenSection& x0, const GenSection& x1, const GenSection& x2);
BVElement l3_b_derivation_residual(const BVElement& a1, const BVElement& a2, const BVElement& a3);

/**
 * Part of {x,y} outside the subspace allowed on the half-complex u + (A, v).
 * Arguments are slot-pure: a degree-0 u, a pure section or a pure v.
 */
BVElement half_complex_violation(const BVElement& x, const BVElement& y);

// Pairing conditions; each returns the left-hand side that must vanish.
GaussRational pairing_q_condition(const BVElement& a1, const BVElement& a2);
GaussRational pairing_b_condition(const BVElement& a1, const BVElement& a2);
GaussRational pairing_c_condition(const BVElement& a1, const BVElement& a2);

/// (Phi1,Phi2) = (Q Phi1, Phi2); (Phi1,Phi2,Phi3) = (mu_sym, Phi3); (Phi1..Phi4) = (nu_sym, Phi4).
GaussRational cyclic_form(const std::vector<BVElement>& phis);
/// form(Phi) - (-1)^{n-1} (-1)^{|Phi_n| (|Phi_1|+..+|Phi_{n-1}|)} form(Phi_n, Phi_1, ..).
GaussRational cyclic_sign_residual(const std::vector<BVElement>& phis);

}  // namespace bvdouble
