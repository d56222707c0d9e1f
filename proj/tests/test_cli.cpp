#include "bvdouble/suites.hpp"
#include "support.hpp"

using namespace bvdouble;
using nlohmann::json;

TEST_CASE("default config") {
  const Config c = parse_config(json::object());
  CHECK(c.dim == 3);
  CHECK(c.eta.up(2, 2) == -1);
  CHECK(c.cutoff == 2);
  CHECK(c.rank == 2);
  CHECK(c.samples == 25);
  CHECK(c.seed == 42);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config(json{{"samples", 0}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"sample", 3}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"dimension", 0}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"dimension", 2}, {"metric", {{1, 1}, {1, 1}}}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"dimension", 2}, {"metric", {{1, 2}, {0, 1}}}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"metric", {{1, 0}, {0, 1}}}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"seed", -1}}), ConfigError);
  CHECK_THROWS_AS(parse_config(json{{"ym", {{"rank", 2}}}}), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
  const Config c = parse_config(json{{"dimension", 2}, {"metric", json::array({json::array({"2", "0"}), json::array({"0", "1/2"})})}});
  CHECK(c.eta.down(1, 1) == 2);
  CHECK_THROWS_AS(validate_for_suite(parse_config(json{{"dimension", 2}, {"metric", {{2, 0}, {0, 1}}}}), "exterior"),
                  ConfigError);
  CHECK_THROWS_AS(validate_for_suite(c, "nosuch"), ConfigError);
  CHECK_THROWS_AS(validate_for_suite(parse_config(json{{"dimension", 5}}), "doublecopy"), ConfigError);
  Config d;
  CHECK_THROWS_AS(override_samples(d, 0), ConfigError);
}

TEST_CASE("per-sample streams depend on seed, identity and index only") {
  auto draw = [](std::uint64_t s, const std::string& id, int i) { return sample_rng(s, id, i)(); };
  CHECK(draw(1, "a", 0) == draw(1, "a", 0));
  CHECK(draw(1, "a", 0) != draw(2, "a", 0));
  CHECK(draw(1, "a", 0) != draw(1, "b", 0));
  CHECK(draw(1, "a", 0) != draw(1, "a", 1));
}

TEST_CASE("serial and parallel reports are identical and reruns are byte-identical") {
  Config c;
  override_samples(c, 4);
  for (const std::string s : {"bvcomplex", "exterior", "cbracket"}) {
    const std::string a = run_suite(s, c, Schedule::parallel).dump();
    CHECK(a == run_suite(s, c, Schedule::serial).dump());
    CHECK(a == run_suite(s, c, Schedule::parallel).dump());
  }
}

TEST_CASE("a failing identity is reported with its witness") {
  Identity bad{"test.bad", "always fails on odd samples", 4, [](int i, Rng&) -> std::optional<json> {
                 if (i % 2 == 0) return std::nullopt;
                 return json{{"index", i}};
               }};
  const json r = run_identity(bad, 1, Schedule::parallel);
  CHECK_FALSE(r.at("pass").get<bool>());
  REQUIRE(r.at("failures").size() == 2);
  CHECK(r.at("failures")[0].at("sample") == 1);
  Identity throws{"test.throw", "throws", 1, [](int, Rng&) -> std::optional<json> { throw Error("boom"); }};
  CHECK(run_identity(throws, 1, Schedule::serial).at("failures")[0].at("witness").at("error") == "boom");
}

TEST_CASE("report layout") {
  Config c;
  override_samples(c, 2);
  const json r = run_suite("ym", c);
  CHECK(r.at("suite") == "ym");
  CHECK(r.at("pass").get<bool>());
  CHECK(r.at("calibration").at("lambda") == "1/2");
  CHECK_FALSE(r.contains("wall_clock_seconds"));
  CHECK(run_suite("doublecopy", c, Schedule::serial, true).contains("wall_clock_seconds"));
  for (const auto& id : r.at("identities")) {
    CHECK(id.contains("anchor"));
    CHECK(id.at("samples") == 2);
  }
}
