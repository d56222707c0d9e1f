#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "bvdouble/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact randomized checks of the BV double identities"};
  app.require_subcommand(1);
  CLI::App* verify = app.add_subcommand("verify", "run one identity suite");
  std::string suite, config_path, out_path;
  std::uint64_t seed = 0;
  int samples = 0;
  bool serial = false;
  bool timing = false;
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--config", config_path, "config JSON")->required();
  auto* seed_opt = verify->add_option("--seed", seed, "master seed");
  auto* samples_opt = verify->add_option("--samples", samples, "samples per identity (all suites)");
  verify->add_option("--out", out_path, "report path (default stdout)");
  verify->add_flag("--serial", serial, "evaluate samples on one thread");
  verify->add_flag("--timing", timing, "record wall-clock time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  nlohmann::json report;
  try {
    bvdouble::Config cfg = bvdouble::load_config(config_path);
    if (*seed_opt) cfg.seed = seed;
    if (*samples_opt) bvdouble::override_samples(cfg, samples);
    bvdouble::validate_for_suite(cfg, suite);
    report = bvdouble::run_suite(suite, cfg,
                                 serial ? bvdouble::Schedule::serial : bvdouble::Schedule::parallel, timing);
  } catch (const bvdouble::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write report '" << out_path << "'\n";
      return 2;
    }
    out << text;
  }
  const bool pass = report.at("pass").get<bool>();
  std::cerr << report.at("suite").get<std::string>() << ": " << (pass ? "pass" : "FAIL") << "\n";
  return pass ? 0 : 1;
}
