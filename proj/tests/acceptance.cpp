#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bvdouble/suites.hpp"

using bvdouble::Config;
using bvdouble::run_suite;

namespace {

struct Criterion {
  std::string name;
  std::vector<std::string> suites;
};

bool suites_pass(const Config& c, const std::vector<std::string>& suites, std::string& detail) {
  bool ok = true;
  for (const auto& s : suites) {
    const auto r = run_suite(s, c);
    for (const auto& id : r.at("identities")) {
      if (!id.at("pass").get<bool>()) {
        detail += " " + id.at("id").get<std::string>();
        ok = false;
      }
    }
  }
  return ok;
}

}  // namespace

int main() {
  const Config c;  // D = 3, eta = diag(1,1,-1), cutoff 2, rank 2, 25 samples, seed 42
  const std::vector<Criterion> criteria{
      {"Courant axioms and Calabi-Yau conditions", {"courant"}},
      {"complex: Q^2 = b^2 = c^2 = 0, [Q,b] = 0, [b,c] = 1, F_c + G orthogonality", {"bvcomplex"}},
      {"BV-LZ relations and bracket = Dorfman on sections", {"bvlz"}},
      {"C-infinity relations, shuffles and cyclic signs on F_c", {"cinf", "cyclic"}},
      {"L-infinity: Jacobiator = d of the trilinear bracket, b-derivation", {"linf"}},
      {"flat metric deformation", {"deform"}},
      {"Yang-Mills equivalence after calibration, gauge transport", {"ym"}},
      {"exterior form table cross-check", {"exterior"}},
      {"double copy: C-bracket, Delta_-, double bracket", {"cbracket", "doublecopy"}},
  };
  int failed = 0;
  int index = 1;
  for (const auto& cr : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = suites_pass(c, cr.suites, detail);
    } catch (const std::exception& e) {
      detail = std::string(" error: ") + e.what();
    }
    std::printf("criterion %2d %s: %s%s\n", index++, ok ? "PASS" : "FAIL", cr.name.c_str(),
                ok ? "" : (" [" + detail + " ]").c_str());
    failed += ok ? 0 : 1;
  }
  {
    bool ok = true;
    for (const std::string s : {"courant", "ym", "cbracket"}) {
      ok = ok && run_suite(s, c).dump() == run_suite(s, c).dump();
    }
    std::printf("criterion %2d %s: identical config gives byte-identical reports\n", index, ok ? "PASS" : "FAIL");
    failed += ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
