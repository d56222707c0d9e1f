#include "bvdouble/exterior.hpp"

#include <algorithm>

#include "bvdouble/relations.hpp"

namespace bvdouble {

int permutation_sign(const std::vector<int>& idx) {
  int s = 1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) s = -s;
    }
  }
  return s;
}

DifferentialForm::DifferentialForm(int degree, int dim) : degree_(degree), dim_(dim) {
  if (dim < 1 || dim > kMaxDim) throw Error("form dimension out of range");
  if (degree < 0) throw Error("negative form degree");
}

DifferentialForm DifferentialForm::scalar(const FourierScalar& f) {
  DifferentialForm a(0, f.dim());
  a.add_to({}, f);
  return a;
}

DifferentialForm DifferentialForm::basis(const Index& idx, const FourierScalar& f) {
  DifferentialForm a(static_cast<int>(idx.size()), f.dim());
  for (int i : idx) {
    if (i < 0 || i >= f.dim()) throw Error("form index out of range");
  }
  const int s = permutation_sign(idx);
  if (s == 0) return a;
  Index sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  a.add_to(sorted, f * GaussRational(s));
  return a;
}

FourierScalar DifferentialForm::component(const Index& idx) const {
  auto it = c_.find(idx);
  return it == c_.end() ? FourierScalar(dim_) : it->second;
}

void DifferentialForm::add_to(const Index& sorted_idx, const FourierScalar& f) {
  if (static_cast<int>(sorted_idx.size()) != degree_) throw Error("form index length mismatch");
  if (f.is_zero()) return;
  auto [it, fresh] = c_.emplace(sorted_idx, f);
  if (!fresh) {
    it->second += f;
    if (it->second.is_zero()) c_.erase(it);
  }
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& o) {
  if (dim_ != o.dim_) throw Error("form dimension mismatch");
  if (degree_ != o.degree_) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    throw Error("adding forms of different degrees");
  }
  for (const auto& [k, v] : o.c_) add_to(k, v);
  return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& o) { return *this += -o; }

DifferentialForm DifferentialForm::operator-() const { return *this * GaussRational(-1); }

DifferentialForm operator*(DifferentialForm a, const GaussRational& c) {
  if (c.is_zero()) return DifferentialForm(a.degree_, a.dim_);
  for (auto& [k, v] : a.c_) v *= c;
  return a;
}

nlohmann::json DifferentialForm::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& [k, v] : c_) comps.push_back({{"index", k}, {"value", v.to_json()}});
  return {{"degree", degree_}, {"components", comps}};
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.dim() != b.dim()) throw Error("form dimension mismatch");
  DifferentialForm r(a.degree() + b.degree(), a.dim());
  if (r.degree() > a.dim()) return r;
  for (const auto& [i, x] : a.components()) {
    for (const auto& [j, y] : b.components()) {
      std::vector<int> idx = i;
      idx.insert(idx.end(), j.begin(), j.end());
      const int s = permutation_sign(idx);
      if (s == 0) continue;
      std::sort(idx.begin(), idx.end());
      r.add_to(idx, x * y * GaussRational(s));
    }
  }
  return r;
}

DifferentialForm dform(const DifferentialForm& a) {
  DifferentialForm r(a.degree() + 1, a.dim());
  if (r.degree() > a.dim()) return r;
  for (const auto& [i, x] : a.components()) {
    for (int j = 0; j < a.dim(); ++j) {
      std::vector<int> idx{j};
      idx.insert(idx.end(), i.begin(), i.end());
      const int s = permutation_sign(idx);
      if (s == 0) continue;
      std::sort(idx.begin(), idx.end());
      r.add_to(idx, partial(x, j) * GaussRational(s));
    }
  }
  return r;
}

namespace {

/// Strictly increasing p-subsets of {0..n-1}.
std::vector<std::vector<int>> combinations(int n, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Rational metric_minor(const Metric& eta, const std::vector<int>& rows, const std::vector<int>& cols) {
  const int p = static_cast<int>(rows.size());
  if (p == 0) return 1;
  std::vector<Rational> m;
  for (int r : rows) {
    for (int c : cols) m.push_back(eta.up(r, c));
  }
  return determinant(std::move(m), p);
}

}  // namespace

DifferentialForm hodge(const DifferentialForm& a, const Metric& eta) {
  const int dim = eta.dim();
  if (a.dim() != dim) throw Error("hodge: dimension mismatch");
  if (!eta.invertible()) throw Error("hodge: metric is not invertible");
  if (!eta.sqrt_abs_det()) throw Error("hodge: |det eta| is not a rational square");
  const GaussRational root(*eta.sqrt_abs_det());
  const int p = a.degree();
  DifferentialForm r(dim - p, dim);
  const auto rows = combinations(dim, p);
  for (const auto& j : combinations(dim, dim - p)) {
    FourierScalar acc(dim);
    for (const auto& i : rows) {
      std::vector<int> ij = i;
      ij.insert(ij.end(), j.begin(), j.end());
      const int e = permutation_sign(ij);
      if (e == 0) continue;
      for (const auto& [k, x] : a.components()) {
        const Rational mm = metric_minor(eta, i, k);
        if (sgn(mm) != 0) acc += x * (GaussRational(mm * e) * root);
      }
    }
    r.add_to(j, acc);
  }
  return r;
}

GaussRational hodge_pairing(const DifferentialForm& a, const DifferentialForm& b, const Metric& eta) {
  const DifferentialForm top = wedge(a, hodge(b, eta));
  if (top.degree() != a.dim()) throw Error("hodge_pairing: degrees differ");
  std::vector<int> all(a.dim());
  for (int i = 0; i < a.dim(); ++i) all[i] = i;
  return integrate(top.component(all));
}

DifferentialForm random_form(int degree, int dim, int cutoff, Rng& rng, int terms) {
  DifferentialForm a(degree, dim);
  if (degree > dim) return a;
  for (const auto& i : combinations(dim, degree)) a.add_to(i, random_scalar(dim, cutoff, rng, terms));
  return a;
}

int YmElement::form_degree(int degree, int dim) {
  switch (degree) {
    case 0:
      return 0;
    case 1:
      return 1;
    case 2:
      return dim - 1;
    case 3:
      return dim;
    default:
      return 0;
  }
}

YmElement::YmElement(int degree, DifferentialForm form) : degree_(degree), form_(std::move(form)) {
  const bool in_range = degree >= 0 && degree <= 3;
  if (in_range && form_.degree() != form_degree(degree, form_.dim()) && !form_.is_zero()) {
    throw Error("form degree does not match ghost degree");
  }
  if (!in_range) form_ = DifferentialForm(0, form_.dim());
}

YmElement YmElement::zero(int degree, int dim) {
  return YmElement(degree, DifferentialForm(form_degree(degree, dim), dim));
}

YmElement& YmElement::operator+=(const YmElement& o) {
  if (degree_ != o.degree_) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    throw Error("adding elements of different degrees");
  }
  form_ += o.form_;
  return *this;
}

YmElement& YmElement::operator-=(const YmElement& o) { return *this += o * GaussRational(-1); }

YmElement operator*(YmElement a, const GaussRational& c) {
  a.form_ = a.form_ * c;
  return a;
}

nlohmann::json YmElement::to_json() const { return {{"degree", degree_}, {"form", form_.to_json()}}; }

YmElement random_ym_element(int degree, int dim, int cutoff, Rng& rng, int terms) {
  if (degree < 0 || degree > 3) throw Error("random_ym_element: degree out of range");
  return YmElement(degree, random_form(YmElement::form_degree(degree, dim), dim, cutoff, rng, terms));
}

YmElement ym_Q(const YmElement& x, const Metric& eta) {
  const int dim = x.dim();
  switch (x.degree()) {
    case 0:
    case 2:
      return YmElement(x.degree() + 1, dform(x.form()));
    case 1:
      return YmElement(2, dform(hodge(dform(x.form()), eta)));
    default:
      return YmElement::zero(x.degree() + 1, dim);
  }
}

YmElement ym_mu_sym(const YmElement& a1, const YmElement& a2, const Metric& eta) {
  const int d1 = a1.degree();
  const int d2 = a2.degree();
  const int dim = a1.dim();
  if (d1 + d2 > 3) return YmElement::zero(d1 + d2, dim);
  const DifferentialForm& a = a1.form();
  const DifferentialForm& b = a2.form();
  if (d1 == 0) return YmElement(d2, wedge(a, b));
  if (d2 == 0) return YmElement(d1, wedge(b, a));
  if (d1 == 1 && d2 == 1) {
    return YmElement(2, wedge(a, hodge(dform(b), eta)) - wedge(b, hodge(dform(a), eta)) +
                            dform(hodge(wedge(a, b), eta)));
  }
  if (d1 == 2 && d2 == 1) return YmElement(3, wedge(b, a));
  return YmElement(3, wedge(a, b));
}

YmElement ym_nu_sym(const YmElement& a1, const YmElement& a2, const YmElement& a3, const Metric& eta) {
  const int d = a1.degree() + a2.degree() + a3.degree() - 1;
  if (a1.degree() != 1 || a2.degree() != 1 || a3.degree() != 1) return YmElement::zero(d, a1.dim());
  const DifferentialForm& a = a1.form();
  const DifferentialForm& b = a2.form();
  const DifferentialForm& c = a3.form();
  return YmElement(2, wedge(a, hodge(wedge(b, c), eta)) - wedge(c, hodge(wedge(a, b), eta)));
}

BVElement ym_to_bv(const YmElement& x, const Metric& eta) {
  const int dim = x.dim();
  auto one_form = [&](const DifferentialForm& f) {
    OneForm b = zero_components(dim);
    for (int k = 0; k < dim; ++k) b[k] = f.component({k});
    return b;
  };
  switch (x.degree()) {
    case 0:
      return BVElement::deg0(x.form().component({}));
    case 1:
      return ym_embed(YmMap::f1, one_form(x.form()), eta);
    case 2:
      return ym_embed(YmMap::g1, one_form(hodge(x.form(), eta)), eta);
    case 3:
      return BVElement::deg3(-hodge(x.form(), eta).component({}));
    default:
      return BVElement::zero(x.degree(), dim);
  }
}

bool YmCinfResiduals::all_zero() const {
  return q_derivation.is_zero() && associativity.is_zero() && shuffle12.is_zero() &&
         shuffle21.is_zero();
}

nlohmann::json YmCinfResiduals::to_json() const {
  return {{"q_derivation", q_derivation.to_json()},
          {"associativity", associativity.to_json()},
          {"shuffle12", shuffle12.to_json()},
          {"shuffle21", shuffle21.to_json()}};
}

YmCinfResiduals ym_cinf_residuals(const YmElement& a1, const YmElement& a2, const YmElement& a3,
                                  const Metric& eta) {
  const YmOps o{eta};
  return {q_derivation_residual(o, a1, a2), homotopy_associativity_residual(o, a1, a2, a3),
          shuffle12_residual(o, a1, a2, a3), shuffle21_residual(o, a1, a2, a3)};
}

}  // namespace bvdouble
