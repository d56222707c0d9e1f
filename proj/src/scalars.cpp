#include "bvdouble/scalars.hpp"

#include <algorithm>

namespace bvdouble {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw Error("bad rational: '" + text + "'");
  if (q.get_den() == 0) throw Error("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw Error("division by zero in Q(i)");
  Rational n = re_ * re_ + im_ * im_;
  return GaussRational(re_ / n, -im_ / n);
}

GaussRational& GaussRational::operator/=(const GaussRational& o) { return *this *= o.inverse(); }

nlohmann::json GaussRational::to_json() const {
  return {{"re", rational_string(re_)}, {"im", rational_string(im_)}};
}

GaussRational GaussRational::from_json(const nlohmann::json& j) {
  return GaussRational(parse_rational(j.at("re").get<std::string>()),
                       parse_rational(j.at("im").get<std::string>()));
}

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) throw Error("dimension out of range: " + std::to_string(dim));
}

void same_dim(const FourierScalar& a, const FourierScalar& b) {
  if (a.dim() != b.dim()) {
    throw Error("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

/// Sort by mode and merge equal modes, dropping zeros.
void normalize(std::vector<FourierScalar::Term>& t) {
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i + 1;
    GaussRational c = std::move(t[i].second);
    while (j < t.size() && t[j].first == t[i].first) c += t[j++].second;
    if (!c.is_zero()) {
      t[out].first = t[i].first;
      t[out].second = std::move(c);
      ++out;
    }
    i = j;
  }
  t.resize(out);
}

}  // namespace

FourierScalar::FourierScalar(int dim) : dim_(dim) { check_dim(dim); }

FourierScalar FourierScalar::constant(int dim, const GaussRational& c) {
  FourierScalar f(dim);
  if (!c.is_zero()) f.terms_.push_back({Mode{}, c});
  return f;
}

FourierScalar FourierScalar::mode(const std::vector<int>& k, const GaussRational& c) {
  FourierScalar f(static_cast<int>(k.size()));
  Mode m{};
  std::copy(k.begin(), k.end(), m.begin());
  if (!c.is_zero()) f.terms_.push_back({m, c});
  return f;
}

FourierScalar FourierScalar::from_terms(int dim, std::vector<Term> terms) {
  FourierScalar f(dim);
  for (const auto& [k, c] : terms) {
    for (int i = dim; i < kMaxDim; ++i) {
      if (k[i] != 0) throw Error("mode longer than dimension");
    }
  }
  normalize(terms);
  f.terms_ = std::move(terms);
  return f;
}

GaussRational FourierScalar::coefficient(const Mode& k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, const Mode& m) { return t.first < m; });
  if (it != terms_.end() && it->first == k) return it->second;
  return GaussRational();
}

FourierScalar& FourierScalar::operator+=(const FourierScalar& o) {
  same_dim(*this, o);
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      GaussRational c = a->second + b->second;
      if (!c.is_zero()) out.push_back({a->first, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

FourierScalar& FourierScalar::operator-=(const FourierScalar& o) { return *this += -o; }

FourierScalar& FourierScalar::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

FourierScalar FourierScalar::operator-() const {
  FourierScalar r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

FourierScalar operator*(const FourierScalar& a, const FourierScalar& b) {
  same_dim(a, b);
  FourierScalar r(a.dim_);
  if (a.is_zero() || b.is_zero()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      Mode k;
      for (int i = 0; i < kMaxDim; ++i) k[i] = ka[i] + kb[i];
      r.terms_.push_back({k, ca * cb});
    }
  }
  normalize(r.terms_);
  return r;
}

nlohmann::json FourierScalar::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, c] : terms_) {
    out.push_back({{"mode", std::vector<int>(k.begin(), k.begin() + dim_)}, {"coeff", c.to_json()}});
  }
  return out;
}

FourierScalar FourierScalar::from_json(int dim, const nlohmann::json& j) {
  std::vector<Term> terms;
  for (const auto& e : j) {
    auto k = e.at("mode").get<std::vector<int>>();
    if (static_cast<int>(k.size()) != dim) throw Error("mode length differs from dimension");
    Mode m{};
    std::copy(k.begin(), k.end(), m.begin());
    terms.push_back({m, GaussRational::from_json(e.at("coeff"))});
  }
  return from_terms(dim, std::move(terms));
}

FourierScalar mul(const FourierScalar& f, const FourierScalar& g) { return f * g; }

FourierScalar partial(const FourierScalar& f, int j) {
  if (j < 0 || j >= f.dim()) throw Error("axis out of range: " + std::to_string(j));
  std::vector<FourierScalar::Term> t;
  t.reserve(f.terms().size());
  for (const auto& [k, c] : f.terms()) {
    if (k[j] != 0) t.push_back({k, c * GaussRational(0, k[j])});
  }
  return FourierScalar::from_terms(f.dim(), std::move(t));
}

GaussRational integrate(const FourierScalar& f) { return f.coefficient(Mode{}); }

FourierScalar laplacian(const FourierScalar& f, const Metric& eta) {
  if (eta.dim() != f.dim()) throw Error("metric dimension mismatch");
  std::vector<FourierScalar::Term> t;
  for (const auto& [k, c] : f.terms()) {
    Rational s = 0;
    for (int i = 0; i < f.dim(); ++i) {
      for (int j = 0; j < f.dim(); ++j) s -= eta.up(i, j) * k[i] * k[j];
    }
    if (sgn(s) != 0) t.push_back({k, c * GaussRational(s)});
  }
  return FourierScalar::from_terms(f.dim(), std::move(t));
}

int draw_int(Rng& rng, int lo, int hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

GaussRational random_coefficient(Rng& rng) {
  Rational re(draw_int(rng, -2, 2), draw_int(rng, 1, 2));
  Rational im(draw_int(rng, -2, 2), draw_int(rng, 1, 2));
  re.canonicalize();
  im.canonicalize();
  return GaussRational(re, im);
}

FourierScalar random_scalar(int dim, int cutoff, Rng& rng, int terms) {
  if (cutoff < 0) throw Error("negative cutoff");
  std::vector<FourierScalar::Term> t;
  for (int n = 0; n < terms; ++n) {
    Mode k{};
    for (int i = 0; i < dim; ++i) k[i] = draw_int(rng, -cutoff, cutoff);
    t.push_back({k, random_coefficient(rng)});
  }
  return FourierScalar::from_terms(dim, std::move(t));
}

Rational determinant(std::vector<Rational> m, int n) {
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && sgn(m[p * n + c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int k = 0; k < n; ++k) std::swap(m[p * n + k], m[c * n + k]);
      det = -det;
    }
    det *= m[c * n + c];
    for (int r = c + 1; r < n; ++r) {
      Rational f = m[r * n + c] / m[c * n + c];
      if (sgn(f) == 0) continue;
      for (int k = c; k < n; ++k) m[r * n + k] -= f * m[c * n + k];
    }
  }
  return det;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  return Rational(sqrt(num), sqrt(den));
}

Metric::Metric(std::vector<std::vector<Rational>> upper) {
  dim_ = static_cast<int>(upper.size());
  check_dim(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (static_cast<int>(upper[i].size()) != dim_) throw Error("metric is not square");
    for (int j = 0; j < dim_; ++j) {
      if (upper[i][j] != upper[j][i]) throw Error("metric is not symmetric");
      up_.push_back(upper[i][j]);
    }
  }
  det_ = determinant(up_, dim_);
  if (sgn(det_) == 0) return;
  sqrt_abs_det_ = rational_sqrt(abs(det_));
  // Gauss-Jordan inverse.
  const int n = dim_;
  std::vector<Rational> a = up_;
  down_.assign(n * n, 0);
  for (int i = 0; i < n; ++i) down_[i * n + i] = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (sgn(a[p * n + c]) == 0) ++p;
    for (int k = 0; k < n; ++k) {
      std::swap(a[p * n + k], a[c * n + k]);
      std::swap(down_[p * n + k], down_[c * n + k]);
    }
    Rational piv = a[c * n + c];
    for (int k = 0; k < n; ++k) {
      a[c * n + k] /= piv;
      down_[c * n + k] /= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || sgn(a[r * n + c]) == 0) continue;
      Rational f = a[r * n + c];
      for (int k = 0; k < n; ++k) {
        a[r * n + k] -= f * a[c * n + k];
        down_[r * n + k] -= f * down_[c * n + k];
      }
    }
  }
}

Metric Metric::diagonal(const std::vector<long>& entries) {
  const auto n = entries.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = entries[i];
  return Metric(std::move(m));
}

Metric Metric::zero(int dim) {
  return Metric(std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, 0)));
}

const Rational& Metric::down(int i, int j) const {
  if (!invertible()) throw Error("metric is not invertible");
  return down_[i * dim_ + j];
}

nlohmann::json Metric::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < dim_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < dim_; ++j) row.push_back(rational_string(up(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bvdouble
