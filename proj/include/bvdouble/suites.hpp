#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bvdouble/scalars.hpp"

namespace bvdouble {

/// Invalid or inconsistent configuration; the CLI maps it to exit status 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct Config {
  int dim = 3;
  Metric eta = Metric::diagonal({1, 1, -1});
  int cutoff = 2;
  int rank = 2;
  int samples = 25;
  std::uint64_t seed = 42;
  int terms = 3;
  int ym_samples = 10;
  int ym_cutoff = 1;
  int ym_calibration_samples = 3;
  int exterior_samples = 10;
  int exterior_cutoff = 1;

  nlohmann::json to_json() const;
};

/// Strict: unknown keys, wrong types and out-of-range values throw ConfigError.
Config parse_config(const nlohmann::json& j);
Config load_config(const std::string& path);
/// Replaces every per-suite sample count.
void override_samples(Config& c, int samples);
/// Suite-specific checks (metric signature, rational sqrt|det|, doubled dimension).
void validate_for_suite(const Config& c, const std::string& suite);

const std::vector<std::string>& suite_names();

enum class Schedule { serial, parallel };

/// One randomized identity; check returns a witness on failure.
struct Identity {
  std::string id;
  std::string anchor;
  int samples = 0;
  std::function<std::optional<nlohmann::json>(int index, Rng& rng)> check;
};

/// Independent stream per (seed, identity id, sample index).
Rng sample_rng(std::uint64_t seed, const std::string& id, int index);

nlohmann::json run_identity(const Identity& identity, std::uint64_t seed, Schedule schedule);

/// Report with sorted keys; byte-identical for identical config unless timing is requested.
nlohmann::json run_suite(const std::string& name, const Config& config,
                         Schedule schedule = Schedule::parallel, bool timing = false);

}  // namespace bvdouble
