#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace bvdouble {

/// Error raised on malformed operands (dimension mismatch, bad axis, bad degree).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string rational_string(const Rational& q);

/// Element of Q(i).
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long re) : re_(re) {}
  GaussRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  GaussRational operator-() const { return GaussRational(-re_, -im_); }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  GaussRational inverse() const;
  nlohmann::json to_json() const;
  static GaussRational from_json(const nlohmann::json& j);

 private:
  Rational re_{0};
  Rational im_{0};
};

/// (-1)^k as a coefficient.
inline GaussRational sign(int k) { return GaussRational(k % 2 == 0 ? 1 : -1); }

inline constexpr int kMaxDim = 8;

/// Integer mode vector; entries past the scalar's dimension stay zero.
using Mode = std::array<int, kMaxDim>;

class Metric;

/// Finite Fourier sum on the torus T^D with coefficients in Q(i), kept sorted by mode.
class FourierScalar {
 public:
  using Term = std::pair<Mode, GaussRational>;

  FourierScalar() = default;
  explicit FourierScalar(int dim);
  static FourierScalar constant(int dim, const GaussRational& c);
  static FourierScalar mode(const std::vector<int>& k, const GaussRational& c = GaussRational(1));
  static FourierScalar from_terms(int dim, std::vector<Term> terms);

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussRational coefficient(const Mode& k) const;

  FourierScalar& operator+=(const FourierScalar& o);
  FourierScalar& operator-=(const FourierScalar& o);
  FourierScalar& operator*=(const GaussRational& c);
  FourierScalar operator-() const;
  friend FourierScalar operator+(FourierScalar a, const FourierScalar& b) { return a += b; }
  friend FourierScalar operator-(FourierScalar a, const FourierScalar& b) { return a -= b; }
  friend FourierScalar operator*(FourierScalar a, const GaussRational& c) { return a *= c; }
  friend FourierScalar operator*(const GaussRational& c, FourierScalar a) { return a *= c; }
  friend FourierScalar operator*(const FourierScalar& a, const FourierScalar& b);
  friend bool operator==(const FourierScalar& a, const FourierScalar& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  nlohmann::json to_json() const;
  static FourierScalar from_json(int dim, const nlohmann::json& j);

 private:
  int dim_ = 1;
  std::vector<Term> terms_;
};

FourierScalar mul(const FourierScalar& f, const FourierScalar& g);
/// 0-based axis.
FourierScalar partial(const FourierScalar& f, int j);
GaussRational integrate(const FourierScalar& f);
FourierScalar laplacian(const FourierScalar& f, const Metric& eta);

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
int draw_int(Rng& rng, int lo, int hi);
GaussRational random_coefficient(Rng& rng);
FourierScalar random_scalar(int dim, int cutoff, Rng& rng, int terms = 3);

/// Constant symmetric matrix eta^{ij} with cached inverse eta_{ij} when it exists.
class Metric {
 public:
  Metric() = default;
  explicit Metric(std::vector<std::vector<Rational>> upper);
  static Metric diagonal(const std::vector<long>& entries);
  static Metric zero(int dim);

  int dim() const { return dim_; }
  const Rational& up(int i, int j) const { return up_[i * dim_ + j]; }
  const Rational& down(int i, int j) const;
  bool invertible() const { return sgn(det_) != 0; }
  const Rational& det() const { return det_; }
  /// sqrt|det eta| when it is rational.
  const std::optional<Rational>& sqrt_abs_det() const { return sqrt_abs_det_; }
  nlohmann::json to_json() const;

 private:
  int dim_ = 0;
  std::vector<Rational> up_;
  std::vector<Rational> down_;
  Rational det_{0};
  std::optional<Rational> sqrt_abs_det_;
};

Rational determinant(std::vector<Rational> m, int n);
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace bvdouble
