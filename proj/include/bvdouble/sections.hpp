#pragma once

#include <vector>

#include "bvdouble/scalars.hpp"

namespace bvdouble {

/// Components X^i of a vector field.
using VectorField = std::vector<FourierScalar>;
/// Components xi_i of a one-form.
using OneForm = std::vector<FourierScalar>;

VectorField zero_components(int dim);
VectorField add(const VectorField& a, const VectorField& b);
VectorField sub(const VectorField& a, const VectorField& b);
VectorField scale(const VectorField& a, const GaussRational& c);
VectorField scale(const FourierScalar& u, const VectorField& a);
bool is_zero(const VectorField& a);

/// Section (X, xi) of TM + T*M.
struct GenSection {
  VectorField vec;
  OneForm form;

  GenSection() = default;
  explicit GenSection(int dim) : vec(zero_components(dim)), form(zero_components(dim)) {}
  GenSection(VectorField v, OneForm f);

  int dim() const { return static_cast<int>(vec.size()); }
  bool is_zero() const;

  GenSection& operator+=(const GenSection& o);
  GenSection& operator-=(const GenSection& o);
  GenSection operator-() const;
  friend GenSection operator+(GenSection a, const GenSection& b) { return a += b; }
  friend GenSection operator-(GenSection a, const GenSection& b) { return a -= b; }
  friend GenSection operator*(GenSection a, const GaussRational& c);
  friend bool operator==(const GenSection& a, const GenSection& b) {
    return a.vec == b.vec && a.form == b.form;
  }

  nlohmann::json to_json() const;
};

GenSection random_section(int dim, int cutoff, Rng& rng, int terms = 3);

FourierScalar pairing(const GenSection& a, const GenSection& b);
GenSection dorfman(const GenSection& a, const GenSection& b);
GenSection exterior_d(const FourierScalar& u);
FourierScalar divergence(const GenSection& a);
GenSection module_action(const FourierScalar& u, const GenSection& a);
/// [A, u] = <A, du> = X^i d_i u.
FourierScalar anchor(const GenSection& a, const FourierScalar& u);

struct CourantResiduals {
  GenSection module_leibniz;     // [A1,uA2] - u[A1,A2] - <A1,du>A2
  FourierScalar invariance;      // <A1,d<A2,A3>> - <[A1,A2],A3> - <A2,[A1,A3]>
  GenSection symmetric_part;     // [A1,A2] + [A2,A1] - d<A1,A2>
  GenSection leibniz;            // [A1,[A2,A3]] - [[A1,A2],A3] - [A2,[A1,A3]]
  GenSection exact_left;         // [du,A1]
  FourierScalar exact_pairing;   // <du1,du2>

  bool all_zero() const;
  nlohmann::json to_json() const;
};

CourantResiduals courant_axiom_residuals(const GenSection& a1, const GenSection& a2,
                                         const GenSection& a3, const FourierScalar& u,
                                         const FourierScalar& u1, const FourierScalar& u2);

struct CyResiduals {
  FourierScalar div_d;         // div du
  FourierScalar div_module;    // div(uA) - u divA - <du,A>
  FourierScalar div_bracket;   // div[A1,A2] - [A1,divA2] + [A2,divA1]

  bool all_zero() const;
  nlohmann::json to_json() const;
};

CyResiduals cy_axiom_residuals(const FourierScalar& u, const GenSection& a1, const GenSection& a2);

}  // namespace bvdouble
