#include "bvdouble/doublecopy.hpp"

namespace bvdouble {

namespace {

const GaussRational kHalf(Rational(1, 2));

int dim_of(const VectorField& a) { return static_cast<int>(a.size()); }

void check_doubled(const FourierScalar& f) {
  if (f.dim() % 2 != 0) throw Error("doubled scalar needs an even number of axes");
}

}  // namespace

VectorField c_bracket_raw(const VectorField& a, const VectorField& b, const Metric& eta) {
  const int dim = eta.dim();
  if (dim_of(a) != dim || dim_of(b) != dim) throw Error("c_bracket: dimension mismatch");
  VectorField r = zero_components(dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) r[j] += a[i] * partial(b[j], i) - partial(a[j], i) * b[i];
    for (int s = 0; s < dim; ++s) {
      if (sgn(eta.up(s, j)) == 0) continue;
      for (int k = 0; k < dim; ++k) {
        for (int l = 0; l < dim; ++l) {
          if (sgn(eta.down(k, l)) == 0) continue;
          r[j] += partial(a[k], s) * b[l] * GaussRational(eta.up(s, j) * eta.down(k, l));
        }
      }
    }
  }
  return r;
}

VectorField c_bracket(const VectorField& a, const VectorField& b, const Metric& eta) {
  return scale(sub(c_bracket_raw(a, b, eta), c_bracket_raw(b, a, eta)), kHalf);
}

VectorField c_jacobiator(const VectorField& a, const VectorField& b, const VectorField& c,
                         const Metric& eta) {
  auto br = [&](const VectorField& x, const VectorField& y) { return c_bracket_raw(x, y, eta); };
  return sub(br(a, br(b, c)), add(br(br(a, b), c), br(b, br(a, c))));
}

bool CConstraints::all_zero() const {
  for (const auto* v : {&box_a, &box_b, &cross}) {
    for (const auto& x : *v) {
      if (!x.is_zero()) return false;
    }
  }
  return true;
}

CConstraints c_constraints(const VectorField& a, const VectorField& b, const Metric& eta) {
  const int dim = eta.dim();
  CConstraints c;
  for (int k = 0; k < dim; ++k) {
    c.box_a.push_back(laplacian(a[k], eta));
    c.box_b.push_back(laplacian(b[k], eta));
    for (int l = 0; l < dim; ++l) {
      FourierScalar x(dim);
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          if (sgn(eta.up(i, j)) != 0) x += partial(a[k], i) * partial(b[l], j) * GaussRational(eta.up(i, j));
        }
      }
      c.cross.push_back(x);
    }
  }
  return c;
}

VectorField random_directional_field(const std::vector<int>& direction, int cutoff, Rng& rng) {
  const int dim = static_cast<int>(direction.size());
  VectorField a = zero_components(dim);
  for (auto& x : a) {
    for (int m = -cutoff; m <= cutoff; ++m) {
      std::vector<int> k(direction);
      for (auto& e : k) e *= m;
      x += FourierScalar::mode(k, random_coefficient(rng));
    }
  }
  return a;
}

FourierScalar delta_minus(const FourierScalar& f) {
  check_doubled(f);
  const int half = f.dim() / 2;
  FourierScalar r(f.dim());
  for (int i = 0; i < half; ++i) r += partial(partial(f, i), half + i);
  return r * GaussRational(2);
}

FourierScalar strong_cross_term(const FourierScalar& f, const FourierScalar& g) {
  check_doubled(f);
  if (f.dim() != g.dim()) throw Error("strong constraint: dimension mismatch");
  const int half = f.dim() / 2;
  FourierScalar r(f.dim());
  for (int i = 0; i < half; ++i) {
    r += partial(f, i) * partial(g, half + i) + partial(f, half + i) * partial(g, i);
  }
  return r;
}

StrongConstraint strong_constraint_check(const FourierScalar& f, const FourierScalar& g) {
  return {delta_minus(f).is_zero(), strong_cross_term(f, g).is_zero()};
}

Bivector::Bivector(int half_dim) : n_(half_dim), e_(half_dim * half_dim, FourierScalar(2 * half_dim)) {
  if (2 * half_dim > kMaxDim || half_dim < 1) throw Error("bivector dimension out of range");
}

Bivector::Bivector(int half_dim, std::vector<FourierScalar> entries) : Bivector(half_dim) {
  if (static_cast<int>(entries.size()) != n_ * n_) throw Error("bivector entry count mismatch");
  for (const auto& x : entries) {
    if (x.dim() != 2 * n_) throw Error("bivector entry dimension mismatch");
  }
  e_ = std::move(entries);
}

bool Bivector::is_zero() const {
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Bivector& Bivector::operator+=(const Bivector& o) {
  if (n_ != o.n_) throw Error("bivector dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

nlohmann::json Bivector::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : e_) out.push_back(x.to_json());
  return out;
}

Bivector random_bivector(int half_dim, int cutoff, Rng& rng, int terms) {
  Bivector g(half_dim);
  for (int k = 0; k < half_dim; ++k) {
    for (int l = 0; l < half_dim; ++l) g.at(k, l) = random_scalar(2 * half_dim, cutoff, rng, terms);
  }
  return g;
}

Bivector double_bracket(const Bivector& g, const Bivector& h) {
  const int n = g.half_dim();
  if (h.half_dim() != n) throw Error("double_bracket: dimension mismatch");
  Bivector r(n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      FourierScalar& x = r.at(k, l);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          x += g.at(i, j) * partial(partial(h.at(k, l), i), n + j);
          x += h.at(i, j) * partial(partial(g.at(k, l), i), n + j);
          x -= partial(g.at(k, j), i) * partial(h.at(i, l), n + j);
          x -= partial(h.at(k, j), i) * partial(g.at(i, l), n + j);
        }
      }
    }
  }
  return r;
}

nlohmann::json SplitVector::to_json() const {
  nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
  for (const auto& x : v) a.push_back(x.to_json());
  for (const auto& x : vbar) b.push_back(x.to_json());
  return {{"v", a}, {"vbar", b}};
}

SplitVector div_omega(const Bivector& g, const FourierScalar& phi) {
  const int n = g.half_dim();
  if (phi.dim() != 2 * n) throw Error("div_omega: dimension mismatch");
  const GaussRational two(2);
  SplitVector s{std::vector<FourierScalar>(n, FourierScalar(2 * n)),
                std::vector<FourierScalar>(n, FourierScalar(2 * n))};
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      s.v[k] += partial(g.at(k, j), n + j) - g.at(k, j) * partial(phi, n + j) * two;
      s.vbar[k] += partial(g.at(j, k), j) - g.at(j, k) * partial(phi, j) * two;
    }
  }
  return s;
}

FourierScalar div_omega(const SplitVector& v, const FourierScalar& phi) {
  const int n = static_cast<int>(v.v.size());
  const GaussRational two(2);
  FourierScalar r(2 * n);
  for (int i = 0; i < n; ++i) {
    r += partial(v.v[i], i) + partial(v.vbar[i], n + i);
    r -= (v.v[i] * partial(phi, i) + v.vbar[i] * partial(phi, n + i)) * two;
  }
  return r;
}

Bivector lie_derivative(const SplitVector& v, const Bivector& g) {
  const int n = g.half_dim();
  Bivector r(n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      FourierScalar& x = r.at(k, l);
      for (int i = 0; i < n; ++i) {
        x += v.v[i] * partial(g.at(k, l), i) + v.vbar[i] * partial(g.at(k, l), n + i);
        x -= partial(v.v[k], i) * g.at(i, l) + partial(v.vbar[l], n + i) * g.at(k, i);
      }
    }
  }
  return r;
}

bool BivectorResidual::all_zero() const {
  if (!bilinear.is_zero() || !scalar.is_zero()) return false;
  for (const auto& x : holomorphic) {
    if (!x.is_zero()) return false;
  }
  return true;
}

nlohmann::json BivectorResidual::to_json() const {
  nlohmann::json h = nlohmann::json::array();
  for (const auto& x : holomorphic) h.push_back(x.to_json());
  return {{"bilinear", bilinear.to_json()}, {"scalar", scalar.to_json()}, {"holomorphic", h}};
}

BivectorResidual bivector_mc_residual(const Bivector& g, const FourierScalar& phi) {
  const int n = g.half_dim();
  const SplitVector v = div_omega(g, phi);
  BivectorResidual r{double_bracket(g, g) + lie_derivative(v, g), div_omega(v, phi), {}};
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      r.holomorphic.push_back(partial(v.v[k], n + j));
      r.holomorphic.push_back(partial(v.vbar[k], j));
    }
  }
  return r;
}

}  // namespace bvdouble
