#include "bvdouble/sections.hpp"

namespace bvdouble {

VectorField zero_components(int dim) { return VectorField(dim, FourierScalar(dim)); }

namespace {

void same_size(const VectorField& a, const VectorField& b) {
  if (a.size() != b.size()) throw Error("section dimension mismatch");
}

nlohmann::json components_json(const VectorField& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : a) out.push_back(x.to_json());
  return out;
}

}  // namespace

VectorField add(const VectorField& a, const VectorField& b) {
  same_size(a, b);
  VectorField r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

VectorField sub(const VectorField& a, const VectorField& b) {
  same_size(a, b);
  VectorField r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

VectorField scale(const VectorField& a, const GaussRational& c) {
  VectorField r = a;
  for (auto& x : r) x *= c;
  return r;
}

VectorField scale(const FourierScalar& u, const VectorField& a) {
  VectorField r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(u * x);
  return r;
}

bool is_zero(const VectorField& a) {
  for (const auto& x : a) {
    if (!x.is_zero()) return false;
  }
  return true;
}

GenSection::GenSection(VectorField v, OneForm f) : vec(std::move(v)), form(std::move(f)) {
  same_size(vec, form);
}

bool GenSection::is_zero() const { return bvdouble::is_zero(vec) && bvdouble::is_zero(form); }

GenSection& GenSection::operator+=(const GenSection& o) {
  same_size(vec, o.vec);
  for (std::size_t i = 0; i < vec.size(); ++i) {
    vec[i] += o.vec[i];
    form[i] += o.form[i];
  }
  return *this;
}

GenSection& GenSection::operator-=(const GenSection& o) {
  same_size(vec, o.vec);
  for (std::size_t i = 0; i < vec.size(); ++i) {
    vec[i] -= o.vec[i];
    form[i] -= o.form[i];
  }
  return *this;
}

GenSection GenSection::operator-() const { return {scale(vec, -1), scale(form, -1)}; }

GenSection operator*(GenSection a, const GaussRational& c) {
  for (auto& x : a.vec) x *= c;
  for (auto& x : a.form) x *= c;
  return a;
}

nlohmann::json GenSection::to_json() const {
  return {{"vec", components_json(vec)}, {"form", components_json(form)}};
}

GenSection random_section(int dim, int cutoff, Rng& rng, int terms) {
  GenSection s(dim);
  for (auto& x : s.vec) x = random_scalar(dim, cutoff, rng, terms);
  for (auto& x : s.form) x = random_scalar(dim, cutoff, rng, terms);
  return s;
}

FourierScalar pairing(const GenSection& a, const GenSection& b) {
  same_size(a.vec, b.vec);
  FourierScalar r(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    r += a.vec[i] * b.form[i];
    r += b.vec[i] * a.form[i];
  }
  return r;
}

FourierScalar anchor(const GenSection& a, const FourierScalar& u) {
  FourierScalar r(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    if (!a.vec[i].is_zero()) r += a.vec[i] * partial(u, i);
  }
  return r;
}

GenSection dorfman(const GenSection& a, const GenSection& b) {
  same_size(a.vec, b.vec);
  const int n = a.dim();
  GenSection r(n);
  for (int j = 0; j < n; ++j) {
    r.vec[j] = anchor(a, b.vec[j]) - anchor(b, a.vec[j]);
    FourierScalar x = anchor(a, b.form[j]);
    for (int i = 0; i < n; ++i) {
      if (!b.form[i].is_zero()) x += b.form[i] * partial(a.vec[i], j);
      if (!b.vec[i].is_zero()) x -= b.vec[i] * (partial(a.form[j], i) - partial(a.form[i], j));
    }
    r.form[j] = std::move(x);
  }
  return r;
}

GenSection exterior_d(const FourierScalar& u) {
  GenSection r(u.dim());
  for (int i = 0; i < u.dim(); ++i) r.form[i] = partial(u, i);
  return r;
}

FourierScalar divergence(const GenSection& a) {
  FourierScalar r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r += partial(a.vec[i], i);
  return r;
}

GenSection module_action(const FourierScalar& u, const GenSection& a) {
  return {scale(u, a.vec), scale(u, a.form)};
}

bool CourantResiduals::all_zero() const {
  return module_leibniz.is_zero() && invariance.is_zero() && symmetric_part.is_zero() &&
         leibniz.is_zero() && exact_left.is_zero() && exact_pairing.is_zero();
}

nlohmann::json CourantResiduals::to_json() const {
  return {{"module_leibniz", module_leibniz.to_json()}, {"invariance", invariance.to_json()},
          {"symmetric_part", symmetric_part.to_json()}, {"leibniz", leibniz.to_json()},
          {"exact_left", exact_left.to_json()},         {"exact_pairing", exact_pairing.to_json()}};
}

CourantResiduals courant_axiom_residuals(const GenSection& a1, const GenSection& a2,
                                         const GenSection& a3, const FourierScalar& u,
                                         const FourierScalar& u1, const FourierScalar& u2) {
  CourantResiduals r;
  const GenSection du = exterior_d(u);
  r.module_leibniz = dorfman(a1, module_action(u, a2)) - module_action(u, dorfman(a1, a2)) -
                     module_action(pairing(a1, du), a2);
  r.invariance = pairing(a1, exterior_d(pairing(a2, a3))) - pairing(dorfman(a1, a2), a3) -
                 pairing(a2, dorfman(a1, a3));
  r.symmetric_part = dorfman(a1, a2) + dorfman(a2, a1) - exterior_d(pairing(a1, a2));
  r.leibniz = dorfman(a1, dorfman(a2, a3)) - dorfman(dorfman(a1, a2), a3) -
              dorfman(a2, dorfman(a1, a3));
  r.exact_left = dorfman(du, a1);
  r.exact_pairing = pairing(exterior_d(u1), exterior_d(u2));
  return r;
}

bool CyResiduals::all_zero() const {
  return div_d.is_zero() && div_module.is_zero() && div_bracket.is_zero();
}

nlohmann::json CyResiduals::to_json() const {
  return {{"div_d", div_d.to_json()},
          {"div_module", div_module.to_json()},
          {"div_bracket", div_bracket.to_json()}};
}

CyResiduals cy_axiom_residuals(const FourierScalar& u, const GenSection& a1, const GenSection& a2) {
  CyResiduals r;
  r.div_d = divergence(exterior_d(u));
  r.div_module = divergence(module_action(u, a1)) - u * divergence(a1) - pairing(exterior_d(u), a1);
  r.div_bracket = divergence(dorfman(a1, a2)) - anchor(a1, divergence(a2)) + anchor(a2, divergence(a1));
  return r;
}

}  // namespace bvdouble
