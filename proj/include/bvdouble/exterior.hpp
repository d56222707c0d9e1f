#pragma once

#include <map>
#include <vector>

#include "bvdouble/deform.hpp"

namespace bvdouble {

/// p-form on T^D; keys are strictly increasing 0-based index tuples, zero components are dropped.
class DifferentialForm {
 public:
  using Index = std::vector<int>;

  DifferentialForm() = default;
  DifferentialForm(int degree, int dim);
  static DifferentialForm scalar(const FourierScalar& f);
  /// f dx^{i1} ^ ... ^ dx^{ip}; an unsorted index is sorted with its permutation sign.
  static DifferentialForm basis(const Index& idx, const FourierScalar& f);

  int degree() const { return degree_; }
  int dim() const { return dim_; }
  const std::map<Index, FourierScalar>& components() const { return c_; }
  FourierScalar component(const Index& idx) const;
  void add_to(const Index& sorted_idx, const FourierScalar& f);
  bool is_zero() const { return c_.empty(); }

  DifferentialForm& operator+=(const DifferentialForm& o);
  DifferentialForm& operator-=(const DifferentialForm& o);
  DifferentialForm operator-() const;
  friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
  friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }
  friend DifferentialForm operator*(DifferentialForm a, const GaussRational& c);
  friend bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
    return a.degree_ == b.degree_ && a.dim_ == b.dim_ && a.c_ == b.c_;
  }

  nlohmann::json to_json() const;

 private:
  int degree_ = 0;
  int dim_ = 1;
  std::map<Index, FourierScalar> c_;
};

/// Sign of the permutation sorting idx, 0 on a repeated index.
int permutation_sign(const std::vector<int>& idx);

/// Zero form of degree p + q when p + q > D.
DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm dform(const DifferentialForm& a);
/// Throws unless eta is invertible with rational sqrt|det eta|.
DifferentialForm hodge(const DifferentialForm& a, const Metric& eta);
/// Integral of a ^ *b.
GaussRational hodge_pairing(const DifferentialForm& a, const DifferentialForm& b, const Metric& eta);

DifferentialForm random_form(int degree, int dim, int cutoff, Rng& rng, int terms = 2);

/// Element of 0 -> Omega^0 -> Omega^1 -> Omega^{D-1} -> Omega^D at ghost degree 0..3.
class YmElement {
 public:
  YmElement() = default;
  YmElement(int degree, DifferentialForm form);
  static YmElement zero(int degree, int dim);
  static int form_degree(int degree, int dim);

  int degree() const { return degree_; }
  int dim() const { return form_.dim(); }
  const DifferentialForm& form() const { return form_; }
  bool is_zero() const { return form_.is_zero(); }

  YmElement& operator+=(const YmElement& o);
  YmElement& operator-=(const YmElement& o);
  friend YmElement operator+(YmElement a, const YmElement& b) { return a += b; }
  friend YmElement operator-(YmElement a, const YmElement& b) { return a -= b; }
  friend YmElement operator*(YmElement a, const GaussRational& c);
  friend bool operator==(const YmElement& a, const YmElement& b) {
    return (a.is_zero() && b.is_zero()) || (a.degree_ == b.degree_ && a.form_ == b.form_);
  }
  nlohmann::json to_json() const;

 private:
  int degree_ = 0;
  DifferentialForm form_;
};

YmElement random_ym_element(int degree, int dim, int cutoff, Rng& rng, int terms = 2);

/// d, *d*d, d.
YmElement ym_Q(const YmElement& x, const Metric& eta);
/// Scalar rows multiply; (A,B) -> A^*dB - B^*dA + d*(A^B); (V,A) -> A^V; (A,W) -> A^W.
YmElement ym_mu_sym(const YmElement& a1, const YmElement& a2, const Metric& eta);
/// A ^ *(B ^ C) - C ^ *(A ^ B) on three one-forms, zero elsewhere.
YmElement ym_nu_sym(const YmElement& a1, const YmElement& a2, const YmElement& a3, const Metric& eta);

struct YmOps {
  Metric eta;
  YmElement Q(const YmElement& x) const { return ym_Q(x, eta); }
  YmElement mu(const YmElement& a, const YmElement& b) const { return ym_mu_sym(a, b, eta); }
  YmElement nu(const YmElement& a, const YmElement& b, const YmElement& c) const {
    return ym_nu_sym(a, b, c, eta);
  }
};

/// u, f1(A), g1(*V), -*W into the complex.
BVElement ym_to_bv(const YmElement& x, const Metric& eta);

struct YmCinfResiduals {
  YmElement q_derivation;
  YmElement associativity;
  YmElement shuffle12;
  YmElement shuffle21;
  bool all_zero() const;
  nlohmann::json to_json() const;
};

YmCinfResiduals ym_cinf_residuals(const YmElement& a1, const YmElement& a2, const YmElement& a3,
                                  const Metric& eta);

}  // namespace bvdouble
