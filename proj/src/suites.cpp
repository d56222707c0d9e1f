#include "bvdouble/suites.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>

#include "bvdouble/doublecopy.hpp"
#include "bvdouble/exterior.hpp"
#include "bvdouble/ym.hpp"

namespace bvdouble {

using nlohmann::json;

// ---------------------------------------------------------------- config

nlohmann::json Config::to_json() const {
  return {{"dimension", dim},
          {"metric", eta.to_json()},
          {"mode_cutoff", cutoff},
          {"matrix_rank", rank},
          {"samples", samples},
          {"seed", seed},
          {"terms", terms},
          {"ym",
           {{"samples", ym_samples},
            {"mode_cutoff", ym_cutoff},
            {"calibration_samples", ym_calibration_samples}}},
          {"exterior", {{"samples", exterior_samples}, {"mode_cutoff", exterior_cutoff}}}};
}

namespace {

void reject_unknown(const json& j, const std::vector<std::string>& known, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [k, v] : j.items()) {
    if (std::find(known.begin(), known.end(), k) == known.end()) {
      throw ConfigError("unknown key '" + k + "' in " + where);
    }
  }
}

int read_int(const json& j, const std::string& key, int fallback, int lo, int hi) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw ConfigError("'" + key + "' must be an integer");
  const long long x = v.get<long long>();
  if (x < lo || x > hi) {
    throw ConfigError("'" + key + "' = " + std::to_string(x) + " outside [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(x);
}

Rational read_rational(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  }
  throw ConfigError("metric entries must be integers or \"p/q\" strings");
}

Metric default_metric(int dim) {
  std::vector<long> d(dim, 1);
  if (dim >= 2) d.back() = -1;
  return Metric::diagonal(d);
}

}  // namespace

Config parse_config(const json& j) {
  reject_unknown(j, {"dimension", "metric", "mode_cutoff", "matrix_rank", "samples", "seed", "terms",
                     "ym", "exterior"},
                 "config");
  Config c;
  c.dim = read_int(j, "dimension", 3, 1, kMaxDim);
  if (j.contains("metric")) {
    const json& m = j.at("metric");
    if (!m.is_array() || static_cast<int>(m.size()) != c.dim) {
      throw ConfigError("metric must be a " + std::to_string(c.dim) + "x" + std::to_string(c.dim) +
                        " array");
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : m) {
      if (!r.is_array() || static_cast<int>(r.size()) != c.dim) throw ConfigError("metric is not square");
      std::vector<Rational> row;
      for (const auto& x : r) row.push_back(read_rational(x));
      rows.push_back(std::move(row));
    }
    try {
      c.eta = Metric(std::move(rows));
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  } else {
    c.eta = default_metric(c.dim);
  }
  if (!c.eta.invertible()) throw ConfigError("metric is not invertible");
  c.cutoff = read_int(j, "mode_cutoff", 2, 0, 16);
  c.rank = read_int(j, "matrix_rank", 2, 1, 8);
  c.samples = read_int(j, "samples", 25, 1, 100000);
  c.terms = read_int(j, "terms", 3, 1, 64);
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) throw ConfigError("'seed' must be a non-negative integer");
    c.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("ym")) {
    const json& y = j.at("ym");
    reject_unknown(y, {"samples", "mode_cutoff", "calibration_samples"}, "ym");
    c.ym_samples = read_int(y, "samples", c.ym_samples, 1, 100000);
    c.ym_cutoff = read_int(y, "mode_cutoff", c.ym_cutoff, 0, 16);
    c.ym_calibration_samples = read_int(y, "calibration_samples", c.ym_calibration_samples, 1, 1000);
  }
  if (j.contains("exterior")) {
    const json& x = j.at("exterior");
    reject_unknown(x, {"samples", "mode_cutoff"}, "exterior");
    c.exterior_samples = read_int(x, "samples", c.exterior_samples, 1, 100000);
    c.exterior_cutoff = read_int(x, "mode_cutoff", c.exterior_cutoff, 0, 16);
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

void override_samples(Config& c, int samples) {
  if (samples < 1) throw ConfigError("samples must be at least 1");
  c.samples = c.ym_samples = c.exterior_samples = samples;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"courant", "bvcomplex", "bvlz",     "cinf",
                                              "cyclic",  "linf",      "deform",   "ym",
                                              "exterior", "cbracket", "doublecopy"};
  return names;
}

void validate_for_suite(const Config& c, const std::string& suite) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw ConfigError("unknown suite '" + suite + "'");
  }
  if (suite == "exterior" && !c.eta.sqrt_abs_det()) {
    throw ConfigError("exterior suite needs |det eta| to be the square of a rational");
  }
  if (suite == "doublecopy" && 2 * c.dim > kMaxDim) {
    throw ConfigError("doublecopy suite needs dimension at most " + std::to_string(kMaxDim / 2));
  }
}

// ---------------------------------------------------------------- runner

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Rng sample_rng(std::uint64_t seed, const std::string& id, int index) {
  const std::uint64_t h = fnv1a(id);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(index)};
  return Rng(seq);
}

json run_identity(const Identity& identity, std::uint64_t seed, Schedule schedule) {
  std::vector<std::optional<json>> results(identity.samples);
  auto one = [&](int i) {
    Rng rng = sample_rng(seed, identity.id, i);
    try {
      results[i] = identity.check(i, rng);
    } catch (const std::exception& e) {
      results[i] = json{{"error", e.what()}};
    }
  };
  if (schedule == Schedule::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < identity.samples; ++i) one(i);
  } else {
    for (int i = 0; i < identity.samples; ++i) one(i);
  }
  json failures = json::array();
  for (int i = 0; i < identity.samples; ++i) {
    if (results[i]) failures.push_back({{"sample", i}, {"witness", *results[i]}});
  }
  return {{"id", identity.id},
          {"anchor", identity.anchor},
          {"samples", identity.samples},
          {"failures", failures},
          {"pass", failures.empty()}};
}

// ---------------------------------------------------------------- helpers

namespace {

using Check = std::function<std::optional<json>(int, Rng&)>;

/// Degree tuples with entries in 0..3 and sum at most max_sum; tuples without zeros first.
std::vector<std::vector<int>> degree_tuples(int arity, int max_sum, int min_sum = 0) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(arity, 0);
  while (true) {
    int s = 0;
    for (int d : cur) s += d;
    if (s <= max_sum && s >= min_sum) out.push_back(cur);
    int k = arity - 1;
    while (k >= 0 && cur[k] == 3) cur[k--] = 0;
    if (k < 0) break;
    ++cur[k];
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::count(a.begin(), a.end(), 0) < std::count(b.begin(), b.end(), 0);
  });
  return out;
}

json degrees_json(const std::vector<int>& d) { return json(d); }

template <class E>
std::optional<json> witness_if_nonzero(const E& residual, const std::vector<int>& degrees) {
  if (residual.is_zero()) return std::nullopt;
  return json{{"degrees", degrees_json(degrees)}, {"residual", residual.to_json()}};
}

std::optional<json> witness_if_nonzero(const GaussRational& residual, const std::vector<int>& degrees) {
  if (residual.is_zero()) return std::nullopt;
  return json{{"degrees", degrees_json(degrees)}, {"residual", residual.to_json()}};
}

std::optional<json> witness_if_nonzero(const FourierScalar& residual) {
  if (residual.is_zero()) return std::nullopt;
  return json{{"residual", residual.to_json()}};
}

std::optional<json> witness_if_nonzero(const VectorField& residual) {
  if (is_zero(residual)) return std::nullopt;
  json r = json::array();
  for (const auto& x : residual) r.push_back(x.to_json());
  return json{{"residual", r}};
}

std::optional<json> witness_if_nonzero(const GenSection& residual) {
  if (residual.is_zero()) return std::nullopt;
  return json{{"residual", residual.to_json()}};
}

struct Builder {
  const Config& cfg;
  std::vector<Identity> out;

  void add(std::string id, std::string anchor, int samples, Check check) {
    out.push_back({std::move(id), std::move(anchor), samples, std::move(check)});
  }

  BVElement elem(int degree, Rng& rng) const {
    return random_element(degree, cfg.dim, cfg.cutoff, rng, cfg.terms);
  }
  FourierScalar scalar(Rng& rng) const { return random_scalar(cfg.dim, cfg.cutoff, rng, cfg.terms); }
  GenSection section(Rng& rng) const { return random_section(cfg.dim, cfg.cutoff, rng, cfg.terms); }

  /// Relation on BV elements whose degrees cycle through the given tuples.
  template <class F>
  void relation(std::string id, std::string anchor, std::vector<std::vector<int>> tuples, F f,
                bool project = false) {
    add(std::move(id), std::move(anchor), cfg.samples,
        [this, tuples = std::move(tuples), f, project](int i, Rng& rng) -> std::optional<json> {
          const auto& d = tuples[i % tuples.size()];
          std::vector<BVElement> a;
          for (int k : d) a.push_back(project ? project_Fc(elem(k, rng)) : elem(k, rng));
          return witness_if_nonzero(f(a), d);
        });
  }
};

// ---------------------------------------------------------------- suites

void courant_suite(Builder& b) {
  using Field = std::function<std::optional<json>(const CourantResiduals&)>;
  const std::vector<std::pair<std::string, Field>> axioms{
      {"module_leibniz", [](const CourantResiduals& r) { return witness_if_nonzero(r.module_leibniz); }},
      {"invariance", [](const CourantResiduals& r) { return witness_if_nonzero(r.invariance); }},
      {"symmetric_part", [](const CourantResiduals& r) { return witness_if_nonzero(r.symmetric_part); }},
      {"leibniz", [](const CourantResiduals& r) { return witness_if_nonzero(r.leibniz); }},
      {"exact_left", [](const CourantResiduals& r) { return witness_if_nonzero(r.exact_left); }},
      {"exact_pairing", [](const CourantResiduals& r) { return witness_if_nonzero(r.exact_pairing); }}};
  const std::vector<std::string> anchors{
      "Courant axiom: [A1, uA2] = u[A1,A2] + (A1.u) A2",
      "Courant axiom: A1.<A2,A3> = <[A1,A2],A3> + <A2,[A1,A3]>",
      "Courant axiom: [A1,A2] + [A2,A1] = d<A1,A2>",
      "Courant axiom: Leibniz identity",
      "Courant axiom: [du, A] = 0",
      "Courant axiom: <du1, du2> = 0"};
  for (std::size_t k = 0; k < axioms.size(); ++k) {
    Field pick = axioms[k].second;
    b.add("courant." + axioms[k].first, anchors[k], b.cfg.samples, [&b, pick](int, Rng& rng) {
      GenSection a1 = b.section(rng), a2 = b.section(rng), a3 = b.section(rng);
      FourierScalar u = b.scalar(rng), u1 = b.scalar(rng), u2 = b.scalar(rng);
      return pick(courant_axiom_residuals(a1, a2, a3, u, u1, u2));
    });
  }
  b.add("cy.div_d", "Calabi-Yau: div du = 0", b.cfg.samples, [&b](int, Rng& rng) {
    FourierScalar u = b.scalar(rng);
    GenSection a1 = b.section(rng), a2 = b.section(rng);
    return witness_if_nonzero(cy_axiom_residuals(u, a1, a2).div_d);
  });
  b.add("cy.div_module", "Calabi-Yau: div(uA) = u divA + <du,A>", b.cfg.samples, [&b](int, Rng& rng) {
    FourierScalar u = b.scalar(rng);
    GenSection a1 = b.section(rng), a2 = b.section(rng);
    return witness_if_nonzero(cy_axiom_residuals(u, a1, a2).div_module);
  });
  b.add("cy.div_bracket", "Calabi-Yau: div[A1,A2] = A1.divA2 - A2.divA1", b.cfg.samples,
        [&b](int, Rng& rng) {
          FourierScalar u = b.scalar(rng);
          GenSection a1 = b.section(rng), a2 = b.section(rng);
          return witness_if_nonzero(cy_axiom_residuals(u, a1, a2).div_bracket);
        });
}

void bvcomplex_suite(Builder& b) {
  const auto singles = degree_tuples(1, 3);
  using V = std::vector<BVElement>;
  b.relation("bvcomplex.Q_squared", "Q^2 = 0", singles, [](const V& a) { return Q(Q(a[0])); });
  b.relation("bvcomplex.b_squared", "b^2 = 0", singles, [](const V& a) { return b_op(b_op(a[0])); });
  b.relation("bvcomplex.c_squared", "c^2 = 0", singles, [](const V& a) { return c_op(c_op(a[0])); });
  b.relation("bvcomplex.Qb_commutator", "[Q,b] = 0", singles,
             [](const V& a) { return Q(b_op(a[0])) + b_op(Q(a[0])); });
  b.relation("bvcomplex.bc_commutator", "[b,c] = 1", singles,
             [](const V& a) { return b_op(c_op(a[0])) + c_op(b_op(a[0])) - a[0]; });
  b.relation("bvcomplex.Q_decomposition", "Q = d + d* + Qt", singles, [](const V& a) {
    return Q(a[0]) - d_part(a[0]) - dstar_part(a[0]) - qtilde_part(a[0]);
  });
  const auto pairs3 = degree_tuples(2, 3, 3);
  const auto pairs2 = degree_tuples(2, 2, 2);
  const auto pairs4 = degree_tuples(2, 4, 4);
  auto scalar_relation = [&b](std::string id, std::string anchor, std::vector<std::vector<int>> tuples,
                              std::function<GaussRational(const V&)> f) {
    b.add(std::move(id), std::move(anchor), b.cfg.samples,
          [&b, tuples, f](int i, Rng& rng) -> std::optional<json> {
            const auto& d = tuples[i % tuples.size()];
            V a;
            for (int k : d) a.push_back(b.elem(k, rng));
            return witness_if_nonzero(f(a), d);
          });
  };
  scalar_relation("bvcomplex.pairing_Q", "(Qa1,a2) + (-1)^{|a1||a2|}(Qa2,a1) = 0", pairs2,
                  [](const V& a) { return pairing_q_condition(a[0], a[1]); });
  scalar_relation("bvcomplex.pairing_b", "(ba1,a2) - (-1)^{|a1||a2|}(ba2,a1) = 0", pairs4,
                  [](const V& a) { return pairing_b_condition(a[0], a[1]); });
  scalar_relation("bvcomplex.pairing_c", "(ca1,a2) + (-1)^{|a1||a2|}(ca2,a1) = 0", pairs2,
                  [](const V& a) { return pairing_c_condition(a[0], a[1]); });
  b.add("bvcomplex.orthogonality", "F = F_c + G orthogonal under the odd pairing", b.cfg.samples,
        [&b](int i, Rng& rng) -> std::optional<json> {
          const int d = 1 + i % 2;
          const BVElement x = project_Fc(b.elem(d, rng));
          const BVElement v = BVElement::vslot(b.scalar(rng));
          const BVElement y = d == 1 ? Q(v) : v;
          return witness_if_nonzero(odd_pairing(x, y), {d, 3 - d});
        });
  b.add("bvcomplex.Fc_projection", "F_c projection is idempotent and Q-stable", b.cfg.samples,
        [&b](int i, Rng& rng) -> std::optional<json> {
          const int d = i % 4;
          const BVElement p = project_Fc(b.elem(d, rng));
          const BVElement r = (project_Fc(p) - p) + (project_Fc(Q(p)) - Q(p));
          return witness_if_nonzero(r, {d});
        });
}

void bvlz_suite(Builder& b) {
  using V = std::vector<BVElement>;
  const BvOps o;
  b.relation("bvlz.q_derivation_mu", "Q is a derivation of mu", degree_tuples(2, 3),
             [o](const V& a) { return q_derivation_residual(o, a[0], a[1]); });
  b.relation("bvlz.homotopy_commutativity", "mu commutative up to Q-homotopy m", degree_tuples(2, 3),
             [o](const V& a) { return homotopy_commutativity_residual(o, a[0], a[1]); });
  b.relation("bvlz.homotopy_associativity", "mu associative up to Q-homotopy nu", degree_tuples(3, 3),
             [o](const V& a) { return homotopy_associativity_residual(o, a[0], a[1], a[2]); });
  b.relation("bvlz.pentagon", "A-infinity relation for mu and nu on four arguments",
             degree_tuples(4, 4), [o](const V& a) { return pentagon_residual(o, a[0], a[1], a[2], a[3]); });
  b.relation("bvlz.q_bracket", "Q is a derivation of the bracket", degree_tuples(2, 4),
             [](const V& a) { return q_bracket_residual(a[0], a[1]); });
  b.relation("bvlz.bracket_derivation", "{a1,.} is a derivation of mu", degree_tuples(3, 4),
             [](const V& a) { return bracket_derivation_residual(a[0], a[1], a[2]); });
  b.relation("bvlz.b_bracket", "b is a derivation of the bracket", degree_tuples(2, 5),
             [](const V& a) { return b_bracket_residual(a[0], a[1]); });
  b.relation("bvlz.homotopy_symmetry", "bracket symmetric up to Q-homotopy n", degree_tuples(2, 4),
             [](const V& a) { return homotopy_symmetry_residual(a[0], a[1]); });
  b.relation("bvlz.jacobi", "Jacobi identity of the bracket", degree_tuples(3, 5),
             [](const V& a) { return jacobi_residual(a[0], a[1], a[2]); });
  b.relation("bvlz.nprime", "bracket derivation of mu up to Q-homotopy n'", degree_tuples(3, 4),
             [](const V& a) { return nprime_residual(a[0], a[1], a[2]); });
  b.add("bvlz.bracket_dorfman", "bracket of degree-1 sections is the Dorfman bracket", b.cfg.samples,
        [&b](int, Rng& rng) {
          GenSection x1 = b.section(rng), x2 = b.section(rng);
          return witness_if_nonzero(bracket_dorfman_residual(x1, x2), {1, 1});
        });
  b.relation("bvlz.c_mu", "c mu(a1,a2) = (-1)^{|a1|} mu(a1, c a2)", degree_tuples(2, 4),
             [](const V& a) { return c_mu_residual(a[0], a[1]); });
  b.relation("bvlz.c_bracket", "c{a1,a2} = (-1)^{|a1|-1}{a1, c a2}", degree_tuples(2, 4),
             [](const V& a) { return c_bracket_compat_residual(a[0], a[1]); });
}

void cinf_suite(Builder& b) {
  using V = std::vector<BVElement>;
  const BvSymOps o;
  b.relation("cinf.graded_commutativity", "mu_sym graded commutative", degree_tuples(2, 3),
             [o](const V& a) { return o.mu(a[0], a[1]) - o.mu(a[1], a[0]) * sign(a[0].degree() * a[1].degree()); });
  b.relation("cinf.q_derivation", "Q is a derivation of mu_sym", degree_tuples(2, 3),
             [o](const V& a) { return q_derivation_residual(o, a[0], a[1]); });
  b.relation("cinf.homotopy_associativity", "mu_sym associative up to Q-homotopy nu_sym",
             degree_tuples(3, 3), [o](const V& a) { return homotopy_associativity_residual(o, a[0], a[1], a[2]); });
  b.relation("cinf.pentagon", "A-infinity relation for mu_sym and nu_sym on four arguments",
             degree_tuples(4, 4), [o](const V& a) { return pentagon_residual(o, a[0], a[1], a[2], a[3]); });
  b.relation("cinf.shuffle12", "nu_sym vanishes on (1,2)-shuffles", degree_tuples(3, 4),
             [o](const V& a) { return shuffle12_residual(o, a[0], a[1], a[2]); });
  b.relation("cinf.shuffle21", "nu_sym vanishes on (2,1)-shuffles", degree_tuples(3, 4),
             [o](const V& a) { return shuffle21_residual(o, a[0], a[1], a[2]); });
}

void cyclic_suite(Builder& b) {
  using V = std::vector<BVElement>;
  const BvSymOps o;
  b.relation("cyclic.closure_mu", "F_c closed under mu_sym", degree_tuples(2, 3),
             [o](const V& a) { auto x = o.mu(a[0], a[1]); return project_Fc(x) - x; }, true);
  b.relation("cyclic.closure_nu", "F_c closed under nu_sym", degree_tuples(3, 4),
             [o](const V& a) { auto x = o.nu(a[0], a[1], a[2]); return project_Fc(x) - x; }, true);
  for (int n = 2; n <= 4; ++n) {
    const int total = n == 2 ? 2 : (n == 3 ? 3 : 4);
    auto tuples = degree_tuples(n, total, total);
    b.add("cyclic.sign_" + std::to_string(n), "cyclic sign rule for the " + std::to_string(n) + "-form",
          b.cfg.samples, [&b, tuples](int i, Rng& rng) -> std::optional<json> {
            const auto& d = tuples[i % tuples.size()];
            V a;
            for (int k : d) a.push_back(project_Fc(b.elem(k, rng)));
            return witness_if_nonzero(cyclic_sign_residual(a), d);
          });
  }
}

void linf_suite(Builder& b) {
  using V = std::vector<BVElement>;
  b.add("linf.l3_jacobiator", "d[A1,A2,A3] is the Jacobiator of the antisymmetrized bracket",
        b.cfg.samples, [&b](int, Rng& rng) {
          GenSection x0 = b.section(rng), x1 = b.section(rng), x2 = b.section(rng);
          return witness_if_nonzero(l3_jacobiator_residual(x0, x1, x2), {1, 1, 1});
        });
  b.relation("linf.l3_b_derivation", "b is a derivation of the trilinear bracket", degree_tuples(3, 5),
             [](const V& a) { return l3_b_derivation_residual(a[0], a[1], a[2]); });
}

void deform_suite(Builder& b) {
  using V = std::vector<BVElement>;
  const Metric eta = b.cfg.eta;
  const FnOps o = deformed_ops(eta);
  auto R = [eta](const BVElement& x) { return R_eta(x, eta); };
  const auto singles = degree_tuples(1, 3);
  b.relation("deform.R_squared", "(R^eta)^2 = 0", singles, [R](const V& a) { return R(R(a[0])); });
  b.relation("deform.QR_commutator", "[Q, R^eta] = 0", singles,
             [R](const V& a) { return Q(R(a[0])) + R(Q(a[0])); });
  b.relation("deform.R_diagram", "R^eta equals its coordinate form", singles,
             [R, eta](const V& a) { return R(a[0]) - R_eta_diagram(a[0], eta); });
  b.relation("deform.mu_bar_table", "mu-bar equals its table", degree_tuples(2, 3), [eta](const V& a) {
    const BVElement g = mu_bar_eta(a[0], a[1], eta);
    return (g - mu_bar_eta_table(a[0], a[1], eta)) + (g - mu_bar_eta_explicit(a[0], a[1], eta));
  });
  b.relation("deform.mu_bar_R_mu", "[Q, mu-bar] + [R^eta, mu] = 0", degree_tuples(2, 3),
             [eta](const V& a) {
               const int d1 = a[0].degree();
               auto mb = [&](const BVElement& x, const BVElement& y) { return mu_bar_eta(x, y, eta); };
               auto R = [&](const BVElement& x) { return R_eta(x, eta); };
               return Q(mb(a[0], a[1])) - mb(Q(a[0]), a[1]) - mb(a[0], Q(a[1])) * sign(d1) +
                      R(mu(a[0], a[1])) - mu(R(a[0]), a[1]) - mu(a[0], R(a[1])) * sign(d1);
             });
  b.relation("deform.R_mu_bar", "[R^eta, mu-bar] = 0", degree_tuples(2, 3), [eta](const V& a) {
    const int d1 = a[0].degree();
    auto mb = [&](const BVElement& x, const BVElement& y) { return mu_bar_eta(x, y, eta); };
    auto R = [&](const BVElement& x) { return R_eta(x, eta); };
    return R(mb(a[0], a[1])) - mb(R(a[0]), a[1]) - mb(a[0], R(a[1])) * sign(d1);
  });
  b.relation("deform.q_derivation", "Q^eta is a derivation of mu^eta", degree_tuples(2, 3),
             [o](const V& a) { return q_derivation_residual(o, a[0], a[1]); });
  b.relation("deform.homotopy_commutativity", "mu^eta commutative up to Q^eta-homotopy m",
             degree_tuples(2, 3), [o](const V& a) { return homotopy_commutativity_residual(o, a[0], a[1]); });
  b.relation("deform.homotopy_associativity", "mu^eta associative up to Q^eta-homotopy nu",
             degree_tuples(3, 3), [o](const V& a) { return homotopy_associativity_residual(o, a[0], a[1], a[2]); });
  b.relation("deform.pentagon", "A-infinity relation for mu^eta and nu on four arguments",
             degree_tuples(4, 4), [o](const V& a) { return pentagon_residual(o, a[0], a[1], a[2], a[3]); });
}

void ym_suite(Builder& b, json& calibration) {
  const Config& c = b.cfg;
  const Metric eta = c.eta;
  std::vector<LieBV> psis, us;
  for (int i = 0; i < c.ym_calibration_samples; ++i) {
    Rng rng = sample_rng(c.seed, "ym.calibration", i);
    psis.push_back(random_lie_psi(1, c.dim, c.ym_cutoff, rng, true));
    us.push_back(random_lie_scalar(1, c.dim, c.ym_cutoff, rng, true));
  }
  const std::optional<YmCalibration> cal = calibrate_ym(psis, us, eta);
  calibration = cal ? cal->to_json() : json("undetermined");
  auto no_cal = [] { return json{{"error", "calibration undetermined"}}; };
  b.add("ym.mc_equivalence", "MC equation is the Yang-Mills system under the A/Phi dictionary",
        c.ym_samples, [&c, eta, cal, no_cal](int, Rng& rng) -> std::optional<json> {
          if (!cal) return no_cal();
          const LieBV psi = random_lie_psi(c.rank, c.dim, c.ym_cutoff, rng, false);
          const YmComparison r = mc_vs_ym_compare(psi, eta, *cal);
          if (r.match) return std::nullopt;
          return json{{"psi", psi.to_json()}, {"comparison", r.witness()}};
        });
  b.add("ym.gauge_transport", "gauge variation is the Yang-Mills gauge symmetry", c.ym_samples,
        [&c, eta, cal, no_cal](int, Rng& rng) -> std::optional<json> {
          if (!cal) return no_cal();
          const LieBV psi = random_lie_psi(c.rank, c.dim, c.ym_cutoff, rng, false);
          const LieBV u = random_lie_scalar(c.rank, c.dim, c.ym_cutoff, rng, false);
          const GaugeTransport t = gauge_transport_residual(psi, u, eta, cal->lambda);
          if (t.is_zero()) return std::nullopt;
          return json{{"d_ca", to_json(t.d_ca)}, {"d_phi", to_json(t.d_phi)}};
        });
  b.add("ym.chain_maps", "the three summands embed as subcomplexes of (F, Q^eta)", c.ym_samples,
        [&c, eta](int, Rng& rng) -> std::optional<json> {
          const int dim = c.dim;
          auto form = [&] {
            OneForm f = zero_components(dim);
            for (auto& x : f) x = random_scalar(dim, c.ym_cutoff, rng, 2);
            return f;
          };
          const FourierScalar u = random_scalar(dim, c.ym_cutoff, rng, 2);
          const OneForm b1 = form(), bt = form(), b2 = form(), bt2 = form();
          const FourierScalar v = random_scalar(dim, c.ym_cutoff, rng, 2);
          const FourierScalar vt = random_scalar(dim, c.ym_cutoff, rng, 2);
          std::vector<std::pair<std::string, BVElement>> r{
              {"u", Q_eta(BVElement::deg0(u), eta) - ym_embed(YmMap::f1, g1_d0(u), eta)},
              {"f1", Q_eta(ym_embed(YmMap::f1, b1, eta), eta) - ym_embed(YmMap::g1, g1_d1(b1, eta), eta)},
              {"g1", Q_eta(ym_embed(YmMap::g1, bt, eta), eta) - BVElement::deg3(g1_d2(bt, eta))},
              {"f2", Q_eta(ym_embed(YmMap::f2, b2, eta), eta) - ym_embed(YmMap::g2, g2_d(b2, eta), eta)},
              {"g2", Q_eta(ym_embed(YmMap::g2, bt2, eta), eta)},
              {"f3", Q_eta(ym_embed(YmMap::f3, v, eta), eta) - ym_embed(YmMap::g3, v, eta)},
              {"g3", Q_eta(ym_embed(YmMap::g3, vt, eta), eta)}};
          json w;
          for (const auto& [k, e] : r) {
            if (!e.is_zero()) w[k] = e.to_json();
          }
          if (w.is_null()) return std::nullopt;
          return w;
        });
}

void exterior_suite(Builder& b) {
  const Config& c = b.cfg;
  const Metric eta = c.eta;
  const int dim = c.dim;
  auto el = [&c](int d, Rng& rng) { return random_ym_element(d, c.dim, c.exterior_cutoff, rng); };
  const auto triples = degree_tuples(3, 3);
  using Pick = std::function<YmElement(const YmCinfResiduals&)>;
  const std::vector<std::tuple<std::string, std::string, Pick>> parts{
      {"q_derivation", "Q is a derivation of the form products",
       [](const YmCinfResiduals& r) { return r.q_derivation; }},
      {"associativity", "form product associative up to Q-homotopy nu",
       [](const YmCinfResiduals& r) { return r.associativity; }},
      {"shuffle12", "form nu vanishes on (1,2)-shuffles", [](const YmCinfResiduals& r) { return r.shuffle12; }},
      {"shuffle21", "form nu vanishes on (2,1)-shuffles", [](const YmCinfResiduals& r) { return r.shuffle21; }}};
  for (const auto& [name, anchor, pick] : parts) {
    b.add("exterior." + name, anchor, c.exterior_samples,
          [el, triples, eta, pick](int i, Rng& rng) {
            const auto& d = triples[i % triples.size()];
            const YmElement a1 = el(d[0], rng), a2 = el(d[1], rng), a3 = el(d[2], rng);
            return witness_if_nonzero(pick(ym_cinf_residuals(a1, a2, a3, eta)), d);
          });
  }
  b.add("exterior.transport", "form operations agree with Q^eta, mu^eta_sym, nu_sym through the embedding",
        c.exterior_samples, [el, eta](int i, Rng& rng) -> std::optional<json> {
          const auto pairs = degree_tuples(2, 3);
          const auto& d = pairs[i % pairs.size()];
          const YmElement a1 = el(d[0], rng), a2 = el(d[1], rng), a3 = el(1, rng), a4 = el(1, rng);
          const YmElement a5 = el(1, rng);
          json w;
          const BVElement q = Q_eta(ym_to_bv(a1, eta), eta) - ym_to_bv(ym_Q(a1, eta), eta);
          if (!q.is_zero()) w["Q"] = q.to_json();
          const BVElement m = mu_eta_sym(ym_to_bv(a1, eta), ym_to_bv(a2, eta), eta) -
                              ym_to_bv(ym_mu_sym(a1, a2, eta), eta);
          if (!m.is_zero()) w["mu"] = m.to_json();
          const BVElement nv = nu_sym(ym_to_bv(a3, eta), ym_to_bv(a4, eta), ym_to_bv(a5, eta)) -
                               ym_to_bv(ym_nu_sym(a3, a4, a5, eta), eta);
          if (!nv.is_zero()) w["nu"] = nv.to_json();
          if (w.is_null()) return std::nullopt;
          w["degrees"] = d;
          return w;
        });
  b.add("exterior.d_squared", "d^2 = 0 and d is a graded derivation of the wedge", c.exterior_samples,
        [&c, dim](int i, Rng& rng) -> std::optional<json> {
          const int p = i % (dim + 1);
          const int q = (i / (dim + 1)) % (dim + 1);
          const DifferentialForm a = random_form(p, dim, c.exterior_cutoff, rng);
          const DifferentialForm bb = random_form(q, dim, c.exterior_cutoff, rng);
          DifferentialForm r = dform(dform(a));
          DifferentialForm l = dform(wedge(a, bb)) - wedge(dform(a), bb) - wedge(a, dform(bb)) * sign(p);
          if (r.is_zero() && l.is_zero()) return std::nullopt;
          return json{{"d2", r.to_json()}, {"leibniz", l.to_json()}, {"degrees", {p, q}}};
        });
  b.add("exterior.hodge", "** = (-1)^{p(D-p)} sgn det eta and the Hodge pairing is symmetric",
        c.exterior_samples, [&c, dim, eta](int i, Rng& rng) -> std::optional<json> {
          const int p = i % (dim + 1);
          const DifferentialForm a = random_form(p, dim, c.exterior_cutoff, rng);
          const DifferentialForm bb = random_form(p, dim, c.exterior_cutoff, rng);
          const int s = (p * (dim - p)) + (sgn(eta.det()) < 0 ? 1 : 0);
          const DifferentialForm r = hodge(hodge(a, eta), eta) - a * sign(s);
          const GaussRational g = hodge_pairing(a, bb, eta) - hodge_pairing(bb, a, eta);
          if (r.is_zero() && g.is_zero()) return std::nullopt;
          return json{{"star_star", r.to_json()}, {"pairing", g.to_json()}, {"degree", p}};
        });
}

/// Smallest nonzero integer mode n with eta^{ij} n_i n_j = 0, or the zero vector if none is small.
std::vector<int> null_direction(const Metric& eta) {
  const int dim = eta.dim();
  std::vector<int> n(dim, -2);
  std::vector<int> best(dim, 0);
  int best_norm = -1;
  while (true) {
    Rational q = 0;
    int norm = 0;
    for (int i = 0; i < dim; ++i) {
      norm += n[i] * n[i];
      for (int j = 0; j < dim; ++j) q += eta.up(i, j) * n[i] * n[j];
    }
    if (norm > 0 && sgn(q) == 0 && (best_norm < 0 || norm < best_norm)) {
      best = n;
      best_norm = norm;
    }
    int k = dim - 1;
    while (k >= 0 && n[k] == 2) n[k--] = -2;
    if (k < 0) break;
    ++n[k];
  }
  return best;
}

/// Fixed unconstrained triple: A = e_0 dx^1-direction mode, B = C along axis 0.
std::array<VectorField, 3> stored_counterexample(int dim) {
  auto unit_mode = [dim](int axis, int comp, int coeff) {
    VectorField a = zero_components(dim);
    std::vector<int> k(dim, 0);
    k[axis] = 1;
    a[comp] = FourierScalar::mode(k, GaussRational(coeff));
    return a;
  };
  const int other = dim > 1 ? 1 : 0;
  return {unit_mode(0, other, 1), unit_mode(0, 0, 1), add(unit_mode(other, 0, 2), unit_mode(0, other, -1))};
}

void cbracket_suite(Builder& b) {
  const Config& c = b.cfg;
  const Metric eta = c.eta;
  const std::vector<int> dir = null_direction(eta);
  b.add("cbracket.constrained_jacobi", "C-bracket Jacobiator vanishes on strongly constrained fields",
        c.samples, [eta, dir, &c](int, Rng& rng) -> std::optional<json> {
          const VectorField a = random_directional_field(dir, c.cutoff, rng);
          const VectorField bb = random_directional_field(dir, c.cutoff, rng);
          const VectorField cc = random_directional_field(dir, c.cutoff, rng);
          json w;
          if (!(c_constraints(a, bb, eta).all_zero() && c_constraints(bb, cc, eta).all_zero() &&
                c_constraints(a, cc, eta).all_zero())) {
            w["constraints"] = "violated";
          }
          const VectorField j = c_jacobiator(a, bb, cc, eta);
          if (!is_zero(j)) w["jacobiator"] = *witness_if_nonzero(j);
          if (w.is_null()) return std::nullopt;
          return w;
        });
  b.add("cbracket.unconstrained_witness", "C-bracket Jacobiator is nonzero on a stored unconstrained triple",
        1, [eta](int, Rng&) -> std::optional<json> {
          const auto t = stored_counterexample(eta.dim());
          const bool violated = !c_constraints(t[0], t[1], eta).all_zero();
          const bool nonzero = !is_zero(c_jacobiator(t[0], t[1], t[2], eta));
          if (violated && nonzero) return std::nullopt;
          return json{{"constraints_violated", violated}, {"jacobiator_nonzero", nonzero}};
        });
  b.add("cbracket.antisymmetry", "skew C-bracket is antisymmetric", c.samples,
        [&b, eta](int, Rng& rng) -> std::optional<json> {
          VectorField a = b.section(rng).vec, bb = b.section(rng).vec;
          return witness_if_nonzero(add(c_bracket(a, bb, eta), c_bracket(bb, a, eta)));
        });
  b.add("cbracket.constant_left", "constant A gives A^i d_i B^j", c.samples,
        [&b, eta](int, Rng& rng) -> std::optional<json> {
          const int dim = b.cfg.dim;
          VectorField a = zero_components(dim);
          for (auto& x : a) x = FourierScalar::constant(dim, random_coefficient(rng));
          const VectorField bb = b.section(rng).vec;
          VectorField expect = zero_components(dim);
          for (int j = 0; j < dim; ++j) {
            for (int i = 0; i < dim; ++i) expect[j] += a[i] * partial(bb[j], i);
          }
          return witness_if_nonzero(sub(c_bracket_raw(a, bb, eta), expect));
        });
}

/// Random doubled scalar supported on one sector (0: x, 1: x-tilde).
FourierScalar sector_scalar(int half, int sector, int cutoff, Rng& rng, int terms) {
  std::vector<FourierScalar::Term> t;
  for (int n = 0; n < terms; ++n) {
    Mode k{};
    for (int i = 0; i < half; ++i) k[sector * half + i] = draw_int(rng, -cutoff, cutoff);
    t.push_back({k, random_coefficient(rng)});
  }
  return FourierScalar::from_terms(2 * half, std::move(t));
}

void doublecopy_suite(Builder& b) {
  const Config& c = b.cfg;
  const int half = c.dim;
  b.add("doublecopy.delta_minus_sectors", "Delta_- annihilates x-only and x-tilde-only fields", c.samples,
        [&c, half](int i, Rng& rng) -> std::optional<json> {
          const FourierScalar f = sector_scalar(half, i % 2, c.cutoff, rng, c.terms);
          return witness_if_nonzero(delta_minus(f));
        });
  b.add("doublecopy.delta_minus_modes", "Delta_- acts on modes by -2 k.ktilde", c.samples,
        [&c, half](int, Rng& rng) -> std::optional<json> {
          const FourierScalar f = random_scalar(2 * half, c.cutoff, rng, c.terms);
          FourierScalar expect(2 * half);
          for (const auto& [k, v] : f.terms()) {
            long dot = 0;
            for (int i = 0; i < half; ++i) dot += static_cast<long>(k[i]) * k[half + i];
            expect += FourierScalar::from_terms(2 * half, {{k, v * GaussRational(-2 * dot)}});
          }
          return witness_if_nonzero(delta_minus(f) - expect);
        });
  b.add("doublecopy.strong_cross", "strong-constraint cross term vanishes on one sector and is symmetric",
        c.samples, [&c, half](int i, Rng& rng) -> std::optional<json> {
          const int s = i % 2;
          const FourierScalar f = sector_scalar(half, s, c.cutoff, rng, c.terms);
          const FourierScalar g = sector_scalar(half, s, c.cutoff, rng, c.terms);
          const FourierScalar p = random_scalar(2 * half, c.cutoff, rng, c.terms);
          const FourierScalar q = random_scalar(2 * half, c.cutoff, rng, c.terms);
          return witness_if_nonzero(strong_cross_term(f, g) + strong_cross_term(p, q) - strong_cross_term(q, p));
        });
  b.add("doublecopy.bracket_symmetry", "[[g,h]] = [[h,g]]", c.samples,
        [&c, half](int, Rng& rng) -> std::optional<json> {
          const Bivector g = random_bivector(half, c.cutoff, rng), h = random_bivector(half, c.cutoff, rng);
          const Bivector r = double_bracket(g, h);
          if (r == double_bracket(h, g)) return std::nullopt;
          return json{{"gh", r.to_json()}, {"hg", double_bracket(h, g).to_json()}};
        });
  b.add("doublecopy.constant_bivector", "constant g with phi = 0 solves the bivector equations", c.samples,
        [half](int, Rng& rng) -> std::optional<json> {
          Bivector g(half);
          for (int k = 0; k < half; ++k) {
            for (int l = 0; l < half; ++l) g.at(k, l) = FourierScalar::constant(2 * half, random_coefficient(rng));
          }
          const BivectorResidual r = bivector_mc_residual(g, FourierScalar(2 * half));
          if (r.all_zero()) return std::nullopt;
          return r.to_json();
        });
  b.add("doublecopy.divergence_free", "x-only divergence-free g: residual is [[g,g]] alone", c.samples,
        [&c, half](int, Rng& rng) -> std::optional<json> {
          Bivector g(half);
          for (int l = 0; l < half; ++l) {
            for (int t = 0; t < c.terms; ++t) {
              std::vector<int> k(2 * half, 0);
              for (int i = 0; i < half; ++i) k[i] = draw_int(rng, -c.cutoff, c.cutoff);
              const int a = draw_int(rng, 0, half - 1);
              const int bb = draw_int(rng, 0, half - 1);
              const GaussRational coeff = random_coefficient(rng);
              // column (g^{a l}, g^{b l}) = coeff (k_b, -k_a) e_k is divergence free in x
              g.at(a, l) += FourierScalar::mode(k, coeff * GaussRational(k[bb]));
              g.at(bb, l) -= FourierScalar::mode(k, coeff * GaussRational(k[a]));
            }
          }
          const BivectorResidual r = bivector_mc_residual(g, FourierScalar(2 * half));
          const bool ok = r.scalar.is_zero() && r.bilinear == double_bracket(g, g) &&
                          std::all_of(r.holomorphic.begin(), r.holomorphic.end(),
                                      [](const FourierScalar& x) { return x.is_zero(); });
          if (ok) return std::nullopt;
          return json{{"g", g.to_json()}, {"residual", r.to_json()}};
        });
}

}  // namespace

json run_suite(const std::string& name, const Config& config, Schedule schedule, bool timing) {
  validate_for_suite(config, name);
  const auto start = std::chrono::steady_clock::now();
  Builder b{config, {}};
  json calibration;
  if (name == "courant") courant_suite(b);
  if (name == "bvcomplex") bvcomplex_suite(b);
  if (name == "bvlz") bvlz_suite(b);
  if (name == "cinf") cinf_suite(b);
  if (name == "cyclic") cyclic_suite(b);
  if (name == "linf") linf_suite(b);
  if (name == "deform") deform_suite(b);
  if (name == "ym") ym_suite(b, calibration);
  if (name == "exterior") exterior_suite(b);
  if (name == "cbracket") cbracket_suite(b);
  if (name == "doublecopy") doublecopy_suite(b);
  json ids = json::array();
  bool pass = true;
  for (const auto& id : b.out) {
    json r = run_identity(id, config.seed, schedule);
    pass = pass && r.at("pass").get<bool>();
    ids.push_back(std::move(r));
  }
  json report{{"suite", name}, {"config", config.to_json()}, {"identities", ids}, {"pass", pass}};
  if (!calibration.is_null()) report["calibration"] = calibration;
  if (timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    report["wall_clock_seconds"] = dt.count();
  }
  return report;
}

}  // namespace bvdouble
