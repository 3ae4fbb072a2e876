#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nblow/analysis.hpp"
#include "nblow/catalog.hpp"
#include "nblow/toml_lite.hpp"

using namespace nblow;

TEST_CASE("toml subset parsing") {
  toml::Value v = toml::parse(R"(
# comment
vars = 2
saturating = true
name = "demo"

[sequence]
kind = "naive"
t = 1

[[orbit]]
id = "a"
slots."0" = ["x", "y"]
slots."1" = ["x^2", "y^2"]

[[orbit]]
id = "b"
slots."2" = ["x^3"]
)");
  CHECK(v.at("vars").as_integer() == 2);
  CHECK(v.at("saturating").as_boolean());
  CHECK(v.at("name").as_string() == "demo");
  CHECK(v.at("sequence").at("kind").as_string() == "naive");
  const auto& orbits = v.at("orbit").as_array();
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0].at("id").as_string() == "a");
  CHECK(orbits[0].at("slots").at("1").as_array()[0].as_string() == "x^2");
  CHECK(orbits[1].at("slots").at("2").as_array().size() == 1);
}

TEST_CASE("toml errors carry line numbers") {
  try {
    toml::parse("vars = 2\noops");
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(toml::parse("a = [1, 2"), InputError);
  CHECK_THROWS_AS(toml::parse("x = 1\nx = 2"), InputError);
  CHECK_THROWS_AS(toml::parse_file("/nonexistent/path.toml"), InputError);
}

TEST_CASE("fixture files parse into sequences") {
  FixtureFile f = parse_fixture_text(R"(
vars = 2
saturating = true

[sequence]
kind = "naive"
t = 1
horizon = 8

[[orbit]]
id = "a"
slots."0" = ["x", "y"]
slots."1" = ["x^2", "y^2"]
)");
  CHECK(f.vars == 2);
  CHECK(f.kind == "naive");
  CHECK(f.horizon == 8);
  IdealSequence seq = build_sequence(f, std::nullopt);
  CHECK(seq.horizon() == 8);
  Fixture eg1 = make_fixture("eg1", 8);
  for (int n = 0; n <= 8; ++n) CHECK(seq.at(n) == eg1.seq.at(n));
  IdealSequence longer = build_sequence(f, 11);
  CHECK(longer.horizon() == 11);
}

TEST_CASE("fixture slots normalize to minimum 0 with recorded shift") {
  FixtureFile f = parse_fixture_text(R"(
vars = 2

[sequence]
kind = "naive"

[[orbit]]
id = "a"
slots."3" = ["x", "y"]
slots."4" = ["x^2", "y^2"]
)");
  CHECK(f.normalization_shifts.at("a") == -3);
  CHECK(f.seed.slot("a", 0) == parse_ideal("x, y", 2));
}

TEST_CASE("table fixtures and their entries") {
  FixtureFile f = parse_fixture_text(R"(
vars = 2

[sequence]
kind = "table"
t = 1

[[entry]]
n = 0

[[entry]]
n = 1
[[entry.orbit]]
id = "a"
slots."0" = ["x", "y"]

[[entry]]
n = 2
[[entry.orbit]]
id = "a"
slots."0" = ["x", "y"]
slots."1" = ["x", "y"]
)");
  IdealSequence seq = build_sequence(f, std::nullopt);
  CHECK(seq.horizon() == 2);
  CHECK(seq.at(0).is_unit());
  CHECK(validate_gen_naive(seq).ok);
}

TEST_CASE("fixture input errors") {
  CHECK_THROWS_AS(parse_fixture_text("vars = 1"), InputError);
  CHECK_THROWS_AS(parse_fixture_text("[sequence]\nkind = \"mystery\""), InputError);
  CHECK_THROWS_AS(parse_fixture_text(R"(
vars = 2
[sequence]
kind = "naive"
[[orbit]]
slots."zero" = ["x"]
)"),
                  InputError);
  // unit slot ideals are dropped; a slot holding the zero ideal is rejected
  CHECK_THROWS_AS(parse_fixture_text(R"(
vars = 2
[sequence]
kind = "naive"
[[orbit]]
slots."0" = ["x^2", "x y"]
)"),
                  InputError);  // not Artinian
}

TEST_CASE("ideal and data json round-trips") {
  MonomialIdeal ideal = parse_ideal("x^2, x y^3, y^4", 2);
  CHECK(ideal_from_json(ideal_to_json(ideal), 2) == ideal);
  CHECK(ideal_to_json(parse_ideal("x^2, y^2", 2)).dump() == "[[2,0],[0,2]]");

  Fixture eg2 = make_fixture("eg2", 6);
  OrbitIdealData d = eg2.seq.at(3);
  CHECK(data_from_json(data_to_json(d), 2) == d);
}

TEST_CASE("analysis report json round-trips its input and is deterministic") {
  Fixture f = make_fixture("eg1", 10);
  AnalysisReport report = analyze_sequence(f.seq, "eg1");
  json j = report_to_json(report);
  CHECK(j.at("input").at("vars") == 2);
  OrbitIdealData seed = data_from_json(j.at("input").at("seed"), 2);
  CHECK(seed == f.seq.seed());
  for (const auto& entry : j.at("entries")) {
    int n = entry.at("n").get<int>();
    CHECK(data_from_json(entry.at("data"), 2) == f.seq.at(n));
  }
  AnalysisReport again = analyze_sequence(f.seq, "eg1");
  CHECK(report_to_json(again).dump(2) == j.dump(2));
  CHECK(!report_to_table(report).empty());
}
