#pragma once

#include <vector>

#include "bvdouble/sections.hpp"

namespace bvdouble {

/// A^i d_i B^j - d_i A^j B^i + eta^{rj} eta_kl d_r A^k B^l.
VectorField c_bracket_raw(const VectorField& a, const VectorField& b, const Metric& eta);
/// Antisymmetrization of c_bracket_raw.
VectorField c_bracket(const VectorField& a, const VectorField& b, const Metric& eta);
/// [A,[B,C]] - [[A,B],C] - [B,[A,C]] for c_bracket_raw.
VectorField c_jacobiator(const VectorField& a, const VectorField& b, const VectorField& c,
                         const Metric& eta);

/// eta^{ij} d_i d_j A^k, eta^{ij} d_i d_j B^k and eta^{ij} d_i A^k d_j B^l.
struct CConstraints {
  std::vector<FourierScalar> box_a;
  std::vector<FourierScalar> box_b;
  std::vector<FourierScalar> cross;
  bool all_zero() const;
};

CConstraints c_constraints(const VectorField& a, const VectorField& b, const Metric& eta);

/// Fields built from modes m * n, m in [-cutoff, cutoff], for a fixed direction n.
VectorField random_directional_field(const std::vector<int>& direction, int cutoff, Rng& rng);

// Doubled scalars live on T^{2D}: axes 0..D-1 carry x (or the holomorphic sector), axes D..2D-1
// carry x-tilde (or the antiholomorphic sector).

/// 2 sum_i d_i dtilde^i.
FourierScalar delta_minus(const FourierScalar& f);

struct StrongConstraint {
  bool level_matched;  // delta_minus f == 0
  bool cross_free;     // sum_i d_i f dtilde^i g + dtilde^i f d_i g == 0
};

StrongConstraint strong_constraint_check(const FourierScalar& f, const FourierScalar& g);
FourierScalar strong_cross_term(const FourierScalar& f, const FourierScalar& g);

/// g^{k lbar}, stored row-major over (k, lbar).
class Bivector {
 public:
  explicit Bivector(int half_dim);
  Bivector(int half_dim, std::vector<FourierScalar> entries);

  int half_dim() const { return n_; }
  FourierScalar& at(int k, int l) { return e_[k * n_ + l]; }
  const FourierScalar& at(int k, int l) const { return e_[k * n_ + l]; }
  bool is_zero() const;

  Bivector& operator+=(const Bivector& o);
  friend Bivector operator+(Bivector a, const Bivector& b) { return a += b; }
  friend bool operator==(const Bivector& a, const Bivector& b) { return a.e_ == b.e_; }
  nlohmann::json to_json() const;

 private:
  int n_;
  std::vector<FourierScalar> e_;
};

Bivector random_bivector(int half_dim, int cutoff, Rng& rng, int terms = 2);

/**
 * [[g,h]]^{k lbar} = g^{i jbar} d_i d_jbar h^{k lbar} + h^{i jbar} d_i d_jbar g^{k lbar}
 *                    - d_i g^{k jbar} d_jbar h^{i lbar} - d_i h^{k jbar} d_jbar g^{i lbar}.
 */
Bivector double_bracket(const Bivector& g, const Bivector& h);

/// Vector field (v^k, vbar^lbar) on the doubled torus.
struct SplitVector {
  std::vector<FourierScalar> v;
  std::vector<FourierScalar> vbar;
  nlohmann::json to_json() const;
};

/// v^k = d_jbar g^{k jbar} - 2 g^{k jbar} d_jbar phi, vbar^lbar = d_i g^{i lbar} - 2 g^{i lbar} d_i phi.
SplitVector div_omega(const Bivector& g, const FourierScalar& phi);
/// d_i v^i + d_jbar vbar^jbar - 2 (v^i d_i phi + vbar^jbar d_jbar phi).
FourierScalar div_omega(const SplitVector& v, const FourierScalar& phi);
Bivector lie_derivative(const SplitVector& v, const Bivector& g);

struct BivectorResidual {
  Bivector bilinear;                       // [[g,g]] + L_{div g} g
  FourierScalar scalar;                    // div div g
  std::vector<FourierScalar> holomorphic;  // d_jbar v^k and d_i vbar^lbar
  bool all_zero() const;
  nlohmann::json to_json() const;
};

BivectorResidual bivector_mc_residual(const Bivector& g, const FourierScalar& phi);

}  // namespace bvdouble
