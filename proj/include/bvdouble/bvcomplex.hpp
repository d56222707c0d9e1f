#pragma once

#include "bvdouble/sections.hpp"

namespace bvdouble {

/**
 * Homogeneous element of the four-term complex.
 *
 *   degree 0: u            (scalar)
 *   degree 1: (A, v)       (section, scalar)
 *   degree 2: (At, vt)     (section, scalar)
 *   degree 3: ut           (scalar)
 *
 * Other degrees only hold zero; operations that leave the range return such zeros.
 */
class BVElement {
 public:
  BVElement() = default;
  static BVElement zero(int degree, int dim);
  static BVElement deg0(FourierScalar u);
  static BVElement deg1(GenSection a, FourierScalar v);
  static BVElement deg2(GenSection at, FourierScalar vt);
  static BVElement deg3(FourierScalar ut);
  /// Degree-1 element with only a section part.
  static BVElement section(GenSection a);
  static BVElement vslot(FourierScalar v);
  static BVElement vtslot(FourierScalar vt);

  int degree() const { return degree_; }
  int dim() const { return dim_; }
  bool is_zero() const;

  /// Scalar slot: u, v, vt or ut depending on degree.
  const FourierScalar& scalar() const { return s_; }
  /// Section slot: A or At (degrees 1 and 2).
  const GenSection& sec() const { return sec_; }
  FourierScalar& scalar() { return s_; }
  GenSection& sec() { return sec_; }

  BVElement& operator+=(const BVElement& o);
  BVElement& operator-=(const BVElement& o);
  BVElement operator-() const;
  friend BVElement operator+(BVElement a, const BVElement& b) { return a += b; }
  friend BVElement operator-(BVElement a, const BVElement& b) { return a -= b; }
  friend BVElement operator*(BVElement a, const GaussRational& c);
  friend BVElement operator*(const GaussRational& c, BVElement a) { return std::move(a) * c; }
  friend bool operator==(const BVElement& a, const BVElement& b);

  nlohmann::json to_json() const;

 private:
  int degree_ = 0;
  int dim_ = 1;
  FourierScalar s_;
  GenSection sec_;
};

BVElement random_element(int degree, int dim, int cutoff, Rng& rng, int terms = 3);

BVElement Q(const BVElement& x);
BVElement b_op(const BVElement& x);
BVElement c_op(const BVElement& x);

/// Pieces of Q = d + d* + Qt.
BVElement d_part(const BVElement& x);
BVElement dstar_part(const BVElement& x);
BVElement qtilde_part(const BVElement& x);
/// d* on its own: +1/2 div A at degree 1, -1/2 div At at degree 2.
FourierScalar dstar(const BVElement& x);
/// Qt: v -> vt (identity map), and its inverse.
FourierScalar dtilde(const FourierScalar& v);
FourierScalar dtilde_inverse(const FourierScalar& vt);

/// Projection along (v, Qv): v -> -Qt^{-1} d* A at degree 1, (At, vt) -> (At - d Qt^{-1} vt, 0) at degree 2.
BVElement project_Fc(const BVElement& x);
bool in_Fc(const BVElement& x);

/// Odd pairing; zero unless the degrees add up to 3.
GaussRational odd_pairing(const BVElement& x, const BVElement& y);

}  // namespace bvdouble
