#include "bvdouble/ym.hpp"

namespace bvdouble {

LieBV::LieBV(int rank, int degree, int dim)
    : rank_(rank), degree_(degree), dim_(dim), e_(rank * rank, BVElement::zero(degree, dim)) {
  if (rank < 1) throw Error("matrix rank must be positive");
}

bool LieBV::is_zero() const {
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

LieBV& LieBV::operator+=(const LieBV& o) {
  if (rank_ != o.rank_) throw Error("matrix rank mismatch");
  if (degree_ != o.degree_) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    throw Error("adding matrix elements of different degrees");
  }
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

LieBV& LieBV::operator-=(const LieBV& o) { return *this += o * GaussRational(-1); }

LieBV operator*(LieBV a, const GaussRational& c) {
  for (auto& x : a.e_) x = x * c;
  return a;
}

nlohmann::json LieBV::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : e_) out.push_back(x.to_json());
  return {{"rank", rank_}, {"degree", degree_}, {"entries", out}};
}

LieBV lift(const UnaryOp& op, const LieBV& x) {
  const int n = x.rank();
  std::vector<BVElement> out;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out.push_back(op(x.at(a, b)));
  }
  LieBV r(n, out.front().degree(), x.dim());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) r.at(a, b) = out[a * n + b];
  }
  return r;
}

LieBV lift(const BinaryOp& op, const LieBV& x, const LieBV& y) {
  const int n = x.rank();
  if (y.rank() != n) throw Error("matrix rank mismatch");
  LieBV r(n, x.degree() + y.degree(), x.dim());
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      for (int b = 0; b < n; ++b) r.at(a, c) += op(x.at(a, b), y.at(b, c));
    }
  }
  return r;
}

LieBV lift(const TernaryOp& op, const LieBV& x, const LieBV& y, const LieBV& z) {
  const int n = x.rank();
  if (y.rank() != n || z.rank() != n) throw Error("matrix rank mismatch");
  LieBV r(n, x.degree() + y.degree() + z.degree() - 1, x.dim());
  for (int a = 0; a < n; ++a) {
    for (int d = 0; d < n; ++d) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) r.at(a, d) += op(x.at(a, b), y.at(b, c), z.at(c, d));
      }
    }
  }
  return r;
}

LieBV mc_residual(const LieBV& psi, const Metric& eta, bool symmetric) {
  if (psi.degree() != 1) throw Error("mc_residual: Psi must have degree 1");
  const FnOps o = symmetric ? deformed_sym_ops(eta) : deformed_ops(eta);
  return lift(o.Q, psi) + lift(o.mu, psi, psi) + lift(o.nu, psi, psi, psi);
}

LieBV gauge_variation(const LieBV& psi, const LieBV& u, const Metric& eta) {
  if (psi.degree() != 1 || u.degree() != 0) throw Error("gauge_variation: degrees must be 1 and 0");
  const FnOps o = deformed_ops(eta);
  return lift(o.Q, u) + lift(o.mu, psi, u) - lift(o.mu, u, psi);
}

ScalarMatrix::ScalarMatrix(int rank_, int dim) : rank(rank_), e(rank_ * rank_, FourierScalar(dim)) {}

bool ScalarMatrix::is_zero() const {
  for (const auto& x : e) {
    if (!x.is_zero()) return false;
  }
  return true;
}

ScalarMatrix& ScalarMatrix::operator+=(const ScalarMatrix& o) {
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
  return *this;
}

ScalarMatrix& ScalarMatrix::operator-=(const ScalarMatrix& o) {
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.e[i];
  return *this;
}

ScalarMatrix operator*(ScalarMatrix a, const GaussRational& c) {
  for (auto& x : a.e) x *= c;
  return a;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  const int n = a.rank;
  ScalarMatrix r(n, a.e.front().dim());
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) r.at(i, k) += a.at(i, j) * b.at(j, k);
    }
  }
  return r;
}

nlohmann::json ScalarMatrix::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : e) out.push_back(x.to_json());
  return out;
}

ScalarMatrix commutator(const ScalarMatrix& a, const ScalarMatrix& b) { return a * b - b * a; }

ScalarMatrix partial(const ScalarMatrix& a, int j) {
  ScalarMatrix r = a;
  for (auto& x : r.e) x = partial(x, j);
  return r;
}

bool is_zero(const MatrixField& f) {
  for (const auto& x : f) {
    if (!x.is_zero()) return false;
  }
  return true;
}

nlohmann::json to_json(const MatrixField& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : f) out.push_back(x.to_json());
  return out;
}

YmResidual ym_field_residual(const MatrixField& ca, const MatrixField& phi, const Metric& eta) {
  const int dim = eta.dim();
  if (static_cast<int>(ca.size()) != dim || static_cast<int>(phi.size()) != dim) {
    throw Error("ym_field_residual: dimension mismatch");
  }
  const int rank = ca.front().rank;
  const int sdim = ca.front().e.front().dim();
  auto nab = [&](int i, const ScalarMatrix& x) { return partial(x, i) + commutator(ca[i], x); };
  std::vector<MatrixField> f(dim, MatrixField(dim));
  for (int j = 0; j < dim; ++j) {
    for (int k = 0; k < dim; ++k) {
      f[j][k] = partial(ca[k], j) - partial(ca[j], k) + commutator(ca[j], ca[k]);
    }
  }
  YmResidual r{MatrixField(dim, ScalarMatrix(rank, sdim)), MatrixField(dim, ScalarMatrix(rank, sdim))};
  for (int k = 0; k < dim; ++k) {
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        if (sgn(eta.up(i, j)) == 0) continue;
        const GaussRational e(eta.up(i, j));
        r.e1[k] += (nab(i, f[j][k]) - commutator(nab(k, phi[i]), phi[j])) * e;
        r.e2[k] += (nab(i, nab(j, phi[k])) - commutator(phi[i], commutator(phi[j], phi[k]))) * e;
      }
    }
  }
  return r;
}

namespace {

/// Per k: (B_k, eta_{kl} A^l) of a degree-1 or degree-2 matrix element.
std::pair<MatrixField, MatrixField> split_section(const LieBV& x, const Metric& eta) {
  const int dim = eta.dim();
  const int n = x.rank();
  MatrixField form(dim, ScalarMatrix(n, dim)), flat(dim, ScalarMatrix(n, dim));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const BVElement& e = x.at(a, b);
      if (e.degree() != 1 && e.degree() != 2) continue;
      const OneForm lowered = lower(e.sec().vec, eta);
      for (int k = 0; k < dim; ++k) {
        form[k].at(a, b) = e.sec().form[k];
        flat[k].at(a, b) = lowered[k];
      }
    }
  }
  return {form, flat};
}

ScalarMatrix scalar_part(const LieBV& u) {
  ScalarMatrix r(u.rank(), u.dim());
  for (int a = 0; a < u.rank(); ++a) {
    for (int b = 0; b < u.rank(); ++b) r.at(a, b) = u.at(a, b).scalar();
  }
  return r;
}

/// Factor c with lhs = c * rhs, if the pair determines one.
struct Proportion {
  bool consistent = true;
  std::optional<GaussRational> factor;
};

Proportion proportion(const MatrixField& lhs, const MatrixField& rhs) {
  Proportion p;
  for (std::size_t k = 0; k < rhs.size() && !p.factor; ++k) {
    for (std::size_t i = 0; i < rhs[k].e.size() && !p.factor; ++i) {
      const auto& terms = rhs[k].e[i].terms();
      if (terms.empty()) continue;
      p.factor = lhs[k].e[i].coefficient(terms.front().first) / terms.front().second;
    }
  }
  const GaussRational c = p.factor.value_or(GaussRational());
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    if (!(lhs[k] - rhs[k] * c).is_zero()) p.consistent = false;
  }
  return p;
}

bool merge_factor(std::optional<GaussRational>& acc, const Proportion& p) {
  if (!p.consistent) return false;
  if (!p.factor) return true;
  if (acc && !(*acc == *p.factor)) return false;
  acc = p.factor;
  return true;
}

}  // namespace

std::pair<MatrixField, MatrixField> ym_dictionary(const LieBV& psi, const Metric& eta,
                                                  const Rational& lambda) {
  auto [form, flat] = split_section(psi, eta);
  MatrixField ca, phi;
  for (std::size_t k = 0; k < form.size(); ++k) {
    ca.push_back((form[k] + flat[k]) * GaussRational(lambda));
    phi.push_back((form[k] - flat[k]) * GaussRational(lambda));
  }
  return {ca, phi};
}

nlohmann::json YmCalibration::to_json() const {
  return {{"lambda", rational_string(lambda)},
          {"kappa1", rational_string(kappa1)},
          {"kappa2", rational_string(kappa2)}};
}

LieBV eliminate_auxiliary(const LieBV& psi, const Metric& eta, bool symmetric) {
  LieBV p = psi;
  for (int a = 0; a < p.rank(); ++a) {
    for (int b = 0; b < p.rank(); ++b) p.at(a, b).scalar() = FourierScalar(p.dim());
  }
  const LieBV r = mc_residual(p, eta, symmetric);
  for (int a = 0; a < p.rank(); ++a) {
    for (int b = 0; b < p.rank(); ++b) p.at(a, b).scalar() = -r.at(a, b).scalar();
  }
  return p;
}

std::optional<YmCalibration> calibrate_ym(const std::vector<LieBV>& abelian_psi,
                                          const std::vector<LieBV>& abelian_u, const Metric& eta) {
  std::optional<GaussRational> lambda, k1, k2;
  for (std::size_t s = 0; s < abelian_psi.size() && s < abelian_u.size(); ++s) {
    const LieBV dpsi = gauge_variation(abelian_psi[s], abelian_u[s], eta);
    auto [form, flat] = split_section(dpsi, eta);
    const ScalarMatrix u = scalar_part(abelian_u[s]);
    MatrixField target, image;
    for (int k = 0; k < eta.dim(); ++k) {
      target.push_back(partial(u, k));
      image.push_back(form[k] + flat[k]);
    }
    if (!merge_factor(lambda, proportion(target, image))) return std::nullopt;
  }
  if (!lambda || !lambda->is_real()) return std::nullopt;
  for (const auto& psi : abelian_psi) {
    const LieBV p = eliminate_auxiliary(psi, eta);
    const LieBV r = mc_residual(p, eta);
    auto [form, flat] = split_section(r, eta);
    auto [ca, phi] = ym_dictionary(p, eta, lambda->re());
    const YmResidual f = ym_field_residual(ca, phi, eta);
    MatrixField c1, c2;
    for (std::size_t k = 0; k < form.size(); ++k) {
      c1.push_back(form[k] + flat[k]);
      c2.push_back(form[k] - flat[k]);
    }
    if (!merge_factor(k1, proportion(c1, f.e1))) return std::nullopt;
    if (!merge_factor(k2, proportion(c2, f.e2))) return std::nullopt;
  }
  if (!k1 || !k2 || !k1->is_real() || !k2->is_real()) return std::nullopt;
  return YmCalibration{lambda->re(), k1->re(), k2->re()};
}

nlohmann::json YmComparison::witness() const {
  return {{"mc", mc.to_json()},
          {"c1", to_json(c1)},
          {"c2", to_json(c2)},
          {"e1", to_json(field.e1)},
          {"e2", to_json(field.e2)}};
}

YmComparison mc_vs_ym_compare(const LieBV& psi, const Metric& eta, const YmCalibration& cal,
                              bool symmetric) {
  const LieBV p = eliminate_auxiliary(psi, eta, symmetric);
  YmComparison out{false, mc_residual(p, eta, symmetric), {}, {}, {}};
  auto [form, flat] = split_section(out.mc, eta);
  auto [ca, phi] = ym_dictionary(p, eta, cal.lambda);
  out.field = ym_field_residual(ca, phi, eta);
  bool ok = true;
  for (int a = 0; a < out.mc.rank(); ++a) {
    for (int b = 0; b < out.mc.rank(); ++b) ok = ok && out.mc.at(a, b).scalar().is_zero();
  }
  for (std::size_t k = 0; k < form.size(); ++k) {
    out.c1.push_back(form[k] + flat[k]);
    out.c2.push_back(form[k] - flat[k]);
    ok = ok && (out.c1[k] - out.field.e1[k] * GaussRational(cal.kappa1)).is_zero();
    ok = ok && (out.c2[k] - out.field.e2[k] * GaussRational(cal.kappa2)).is_zero();
  }
  out.match = ok;
  return out;
}

bool GaugeTransport::is_zero() const { return bvdouble::is_zero(d_ca) && bvdouble::is_zero(d_phi); }

GaugeTransport gauge_transport_residual(const LieBV& psi, const LieBV& u, const Metric& eta,
                                        const Rational& lambda) {
  const LieBV dpsi = gauge_variation(psi, u, eta);
  auto [ca, phi] = ym_dictionary(psi, eta, lambda);
  auto [dca, dphi] = ym_dictionary(dpsi, eta, lambda);
  const ScalarMatrix um = scalar_part(u);
  GaugeTransport t;
  for (int k = 0; k < eta.dim(); ++k) {
    t.d_ca.push_back(dca[k] - partial(um, k) - commutator(ca[k], um));
    t.d_phi.push_back(dphi[k] - commutator(phi[k], um));
  }
  return t;
}

namespace {

LieBV random_lie(int rank, int degree, int dim, int cutoff, Rng& rng, bool abelian, int terms) {
  LieBV x(rank, degree, dim);
  for (int a = 0; a < rank; ++a) {
    for (int b = 0; b < rank; ++b) {
      if (abelian && a != b) continue;
      if (abelian && a > 0) {
        x.at(a, b) = x.at(0, 0);
        continue;
      }
      x.at(a, b) = random_element(degree, dim, cutoff, rng, terms);
    }
  }
  return x;
}

}  // namespace

LieBV random_lie_psi(int rank, int dim, int cutoff, Rng& rng, bool abelian, int terms) {
  return random_lie(rank, 1, dim, cutoff, rng, abelian, terms);
}

LieBV random_lie_scalar(int rank, int dim, int cutoff, Rng& rng, bool abelian, int terms) {
  return random_lie(rank, 0, dim, cutoff, rng, abelian, terms);
}

}  // namespace bvdouble
