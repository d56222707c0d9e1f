#pragma once

#include <optional>
#include <vector>

#include "bvdouble/deform.hpp"

namespace bvdouble {

/// n x n matrix of complex elements, all of one degree; matrix factors carry degree 0.
class LieBV {
 public:
  LieBV(int rank, int degree, int dim);

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  int dim() const { return dim_; }
  BVElement& at(int a, int b) { return e_[a * rank_ + b]; }
  const BVElement& at(int a, int b) const { return e_[a * rank_ + b]; }
  bool is_zero() const;

  LieBV& operator+=(const LieBV& o);
  LieBV& operator-=(const LieBV& o);
  friend LieBV operator+(LieBV a, const LieBV& b) { return a += b; }
  friend LieBV operator-(LieBV a, const LieBV& b) { return a -= b; }
  friend LieBV operator*(LieBV a, const GaussRational& c);

  nlohmann::json to_json() const;

 private:
  int rank_;
  int degree_;
  int dim_;
  std::vector<BVElement> e_;
};

using UnaryOp = std::function<BVElement(const BVElement&)>;
using BinaryOp = std::function<BVElement(const BVElement&, const BVElement&)>;
using TernaryOp = std::function<BVElement(const BVElement&, const BVElement&, const BVElement&)>;

LieBV lift(const UnaryOp& op, const LieBV& x);
/// (x y)_{ac} = sum_b op(x_ab, y_bc).
LieBV lift(const BinaryOp& op, const LieBV& x, const LieBV& y);
LieBV lift(const TernaryOp& op, const LieBV& x, const LieBV& y, const LieBV& z);

/// Q^eta Psi + mu^eta(Psi,Psi) + nu(Psi,Psi,Psi); symmetric uses mu^eta_sym and nu_sym.
LieBV mc_residual(const LieBV& psi, const Metric& eta, bool symmetric = false);
/// Q^eta u + mu^eta(Psi,u) - mu^eta(u,Psi).
LieBV gauge_variation(const LieBV& psi, const LieBV& u, const Metric& eta);

/// n x n matrix of scalars.
struct ScalarMatrix {
  int rank = 1;
  std::vector<FourierScalar> e;

  ScalarMatrix() = default;
  ScalarMatrix(int rank, int dim);
  FourierScalar& at(int a, int b) { return e[a * rank + b]; }
  const FourierScalar& at(int a, int b) const { return e[a * rank + b]; }
  bool is_zero() const;

  ScalarMatrix& operator+=(const ScalarMatrix& o);
  ScalarMatrix& operator-=(const ScalarMatrix& o);
  friend ScalarMatrix operator+(ScalarMatrix a, const ScalarMatrix& b) { return a += b; }
  friend ScalarMatrix operator-(ScalarMatrix a, const ScalarMatrix& b) { return a -= b; }
  friend ScalarMatrix operator*(ScalarMatrix a, const GaussRational& c);
  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) { return a.e == b.e; }
  nlohmann::json to_json() const;
};

ScalarMatrix commutator(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix partial(const ScalarMatrix& a, int j);

/// Matrix-valued one-form, indexed by the lower index k.
using MatrixField = std::vector<ScalarMatrix>;

bool is_zero(const MatrixField& f);
nlohmann::json to_json(const MatrixField& f);

struct YmResidual {
  MatrixField e1;  // eta^{ij}[D_i,[D_j,D_k]] - eta^{ij}[[D_k,Phi_i],Phi_j]
  MatrixField e2;  // eta^{ij}[D_i,[D_j,Phi_k]] - eta^{ij}[Phi_i,[Phi_j,Phi_k]]
};

/// D_i = d_i + cA_i acting by commutator; [D_i,D_j] is the curvature F_ij.
YmResidual ym_field_residual(const MatrixField& ca, const MatrixField& phi, const Metric& eta);

/// cA_k = lambda (B_k + eta_{kj} A^j), Phi_k = lambda (B_k - eta_{kj} A^j).
std::pair<MatrixField, MatrixField> ym_dictionary(const LieBV& psi, const Metric& eta,
                                                  const Rational& lambda);

/// Dictionary scale and the two proportionality constants between MC and field residuals.
struct YmCalibration {
  Rational lambda;
  Rational kappa1;
  Rational kappa2;
  nlohmann::json to_json() const;
};

/**
 * Fits lambda from the abelian gauge variation (dcA = du) and then kappa1, kappa2 from abelian
 * MC residuals. Returns nothing when the samples do not determine consistent real constants.
 */
std::optional<YmCalibration> calibrate_ym(const std::vector<LieBV>& abelian_psi,
                                          const std::vector<LieBV>& abelian_u, const Metric& eta);

/// Psi with v replaced by the value solving the vt component of the MC equation.
LieBV eliminate_auxiliary(const LieBV& psi, const Metric& eta, bool symmetric = false);

struct YmComparison {
  bool match = false;
  LieBV mc;            // MC residual after eliminating v
  MatrixField c1, c2;  // form + eta_flat(vec), form - eta_flat(vec) of the At slot
  YmResidual field;
  nlohmann::json witness() const;
};

YmComparison mc_vs_ym_compare(const LieBV& psi, const Metric& eta, const YmCalibration& cal,
                              bool symmetric = false);

struct GaugeTransport {
  MatrixField d_ca;   // dcA - (du + [cA,u])
  MatrixField d_phi;  // dPhi - [Phi,u]
  bool is_zero() const;
};

GaugeTransport gauge_transport_residual(const LieBV& psi, const LieBV& u, const Metric& eta,
                                        const Rational& lambda);

LieBV random_lie_psi(int rank, int dim, int cutoff, Rng& rng, bool abelian, int terms = 2);
LieBV random_lie_scalar(int rank, int dim, int cutoff, Rng& rng, bool abelian, int terms = 2);

}  // namespace bvdouble
