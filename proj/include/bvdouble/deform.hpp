#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "bvdouble/bvops.hpp"

namespace bvdouble {

/// Degree-1 elements f_i with vector part d/dx^i.
std::vector<BVElement> flat_sections(const Metric& eta);

/// R^eta = sum eta^{ij} mu(f_i, {f_j, .}).
BVElement R_eta(const BVElement& x, const Metric& eta);
/// The same operator written with Laplacian, raised gradient and raised divergence.
BVElement R_eta_diagram(const BVElement& x, const Metric& eta);
BVElement Q_eta(const BVElement& x, const Metric& eta);

/// mu-bar = eta^{ij} [nu(f_i, {f_j,a1}, a2) - mu(m(f_i,a1), {f_j,a2})].
BVElement mu_bar_eta(const BVElement& a1, const BVElement& a2, const Metric& eta);
/// mu-bar cell by cell, each cell written through mu, m and the bracket with f_j.
BVElement mu_bar_eta_table(const BVElement& a1, const BVElement& a2, const Metric& eta);
/// mu-bar in coordinates.
BVElement mu_bar_eta_explicit(const BVElement& a1, const BVElement& a2, const Metric& eta);
BVElement mu_eta(const BVElement& a1, const BVElement& a2, const Metric& eta);
BVElement mu_eta_sym(const BVElement& a1, const BVElement& a2, const Metric& eta);
/// Bracket built from mu^eta and b; fails the Jacobi identity in general.
BVElement bracket_eta(const BVElement& a1, const BVElement& a2, const Metric& eta);
BVElement jacobi_eta_residual(const BVElement& a1, const BVElement& a2, const BVElement& a3,
                              const Metric& eta);

// Raised gradient (d-hat u)^j = eta^{ij} d_i u, raised divergence eta^{ij} d_i B_j and
// the component Laplacian.
VectorField hat_d(const FourierScalar& u, const Metric& eta);
FourierScalar hat_div(const OneForm& b, const Metric& eta);
VectorField raise(const OneForm& b, const Metric& eta);
OneForm lower(const VectorField& a, const Metric& eta);

/// Operation set plugged into the generic relation residuals.
struct FnOps {
  std::function<BVElement(const BVElement&)> Q;
  std::function<BVElement(const BVElement&, const BVElement&)> mu;
  std::function<BVElement(const BVElement&, const BVElement&)> m;
  std::function<BVElement(const BVElement&, const BVElement&, const BVElement&)> nu;
};

/// (Q^eta, mu^eta, m, nu).
FnOps deformed_ops(const Metric& eta);
/// (Q^eta, mu^eta_sym, m, nu_sym).
FnOps deformed_sym_ops(const Metric& eta);

enum class YmMap { f1, g1, f2, g2, f3, g3 };
using YmArg = std::variant<OneForm, FourierScalar>;

/**
 * Embeddings of the three summands into the complex.
 *   f1(B) = B + B* - div-hat B,  g1(Bt) = Bt + Bt*
 *   f2(B) = B - B*,              g2(Bt) = Bt - Bt*
 *   f3(v) = v,                   g3(vt) = vt + (d vt + d-hat vt)
 * f1..g2 take a one-form, f3 and g3 a scalar.
 */
BVElement ym_embed(YmMap kind, const YmArg& arg, const Metric& eta);

// Differentials of the summands, in coordinates.
OneForm g1_d0(const FourierScalar& u);
OneForm g1_d1(const OneForm& b, const Metric& eta);
FourierScalar g1_d2(const OneForm& bt, const Metric& eta);
OneForm g2_d(const OneForm& b, const Metric& eta);

}  // namespace bvdouble
