#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "plectic/expression.hpp"
#include "plectic/scenario.hpp"

using namespace plectic;

namespace {

RunOptions quiet() {
  RunOptions o;
  o.timing = false;
  return o;
}

}  // namespace

class Builtin : public ::testing::TestWithParam<std::string> {};

TEST_P(Builtin, EveryCheckPasses) {
  Scenario s = builtin_scenario(GetParam());
  ASSERT_FALSE(s.checks.empty());
  ScenarioReport r = run_scenario(s, quiet());
  EXPECT_TRUE(r.ok()) << report_text({r}, false);
  EXPECT_EQ(r.checks.size(), s.checks.size());
}

TEST_P(Builtin, JsonRoundTripKeepsTheReport) {
  Scenario s = builtin_scenario(GetParam());
  std::string text = scenario_to_json(s);
  Scenario back = scenario_from_json(text);
  EXPECT_EQ(scenario_to_json(back), text);
  if (GetParam() == "property-suite") return;  // already covered by EveryCheckPasses
  EXPECT_EQ(report_json({run_scenario(back, quiet())}, false), report_json({run_scenario(s, quiet())}, false));
}

TEST_P(Builtin, ShippedFileMatches) {
  const auto path = std::filesystem::path(PLECTIC_SCENARIO_DIR) / (GetParam() + ".json");
  std::ifstream in(path);
  ASSERT_TRUE(in) << path;
  std::ostringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), scenario_to_json(builtin_scenario(GetParam()))) << "regenerate with: plectic export scenarios";
}

INSTANTIATE_TEST_SUITE_P(Registry, Builtin, ::testing::ValuesIn(list_builtins()),
                         [](const auto& info) {
                           std::string n = info.param;
                           for (auto& c : n)
                             if (c == '-') c = '_';
                           return n;
                         });

TEST(Registry, ContainsTheNamedExamples) {
  auto names = list_builtins();
  EXPECT_GE(names.size(), 12u);
  for (const char* n : {"sorn-2", "sorn-3", "sorn-4", "linear-action", "sphere-2", "sphere-5", "product-2step",
                        "cartan3form-su2", "string-su2", "heisenberg", "translations-obstructed", "noteq-torus",
                        "sutraces"})
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  EXPECT_THROW(builtin_scenario("sorn-9"), Error);
}

TEST(Scenario, ClassicalHeight) {
  auto r = run_scenario(builtin_scenario("sorn-2"), quiet());
  const CheckOutcome* c = r.find("expected-values");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->detail, "f_1(e12) = -1/2 x1^2 - 1/2 x2^2");
}

TEST(Scenario, NoteqIsFlagged) {
  auto r = run_scenario(builtin_scenario("noteq-torus"), quiet());
  ASSERT_TRUE(r.ok()) << report_text({r}, false);
  EXPECT_EQ(r.flags, std::vector<std::string>{"NonCocycleMomentMap"});
  const CheckOutcome* c = r.find("extension");
  ASSERT_NE(c, nullptr);
  EXPECT_NE(c->detail.find("fails at iota_x mu(x) = 0"), std::string::npos) << c->detail;
  EXPECT_NE(c->detail.find("iota_{v_e1} f_1(e1) = 1"), std::string::npos) << c->detail;
}

TEST(Scenario, BrokenExpectationFails) {
  Scenario s = builtin_scenario("sorn-2");
  s.expected[0].value = -s.expected[0].value;
  auto r = run_scenario(s, quiet());
  const CheckOutcome* c = r.find("expected-values");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->ok);
  EXPECT_NE(c->witness.find("f_1(e12)"), std::string::npos);
}

TEST(Scenario, WrongObstructionExpectationFails) {
  Scenario s = builtin_scenario("translations-obstructed");
  s.obstruction->cocycle[0].value = Rational(1);
  auto r = run_scenario(s, quiet());
  EXPECT_FALSE(r.find("obstruction")->ok);
  s.obstruction->trivial = true;
  r = run_scenario(s, quiet());
  EXPECT_FALSE(r.find("obstruction")->ok);
  // Claiming triviality also makes the construction attempt fail loudly.
  EXPECT_FALSE(r.find("unobstructed-construct")->ok);
}

TEST(Scenario, ErrorsBecomeFailures) {
  Scenario s = builtin_scenario("sutraces");
  s.checks = {"verify-moment", "no-such-check"};
  auto r = run_scenario(s, quiet());
  ASSERT_EQ(r.checks.size(), 2u);
  EXPECT_FALSE(r.checks[0].ok);
  EXPECT_FALSE(r.checks[1].ok);
  EXPECT_EQ(r.checks[1].witness, "unknown check");
}

TEST(Scenario, ReportsAreDeterministic) {
  Scenario s = builtin_scenario("heisenberg");
  EXPECT_EQ(report_json({run_scenario(s, quiet())}, false), report_json({run_scenario(s, quiet())}, false));
  EXPECT_EQ(report_text({run_scenario(s, quiet())}, false), report_text({run_scenario(s, quiet())}, false));
}

TEST(ScenarioJson, HandWrittenFile) {
  const char* src = R"({
    "name": "so2-plane",
    "algebra": {"dim": 1, "names": ["r"]},
    "manifold": {"type": "chart", "coordinates": ["x", "y"]},
    "action": {"type": "fields", "fields": ["y @x - x @y"]},
    "omega": "dx^dy",
    "phi": ["-1/2 x^2 - 1/2 y^2"],
    "base_points": [[0, 0], [1, 2], ["1/2", "-3"]],
    "expect": {"obstruction": {"trivial": true}},
    "checks": ["extension", "verify-moment", "obstruction", "unobstructed-construct"]
  })";
  Scenario s = scenario_from_json(src);
  EXPECT_EQ(s.algebra.name(0), "r");
  auto r = run_scenario(s, quiet());
  EXPECT_TRUE(r.ok()) << report_text({r}, false);
}

TEST(ScenarioJson, LevelSetBySampleCount) {
  const char* src = R"({
    "name": "circle",
    "algebra": {"builtin": "so2"},
    "manifold": {"type": "levelset", "coordinates": ["x1", "x2"], "constraint": "x1^2 + x2^2 - 1", "samples": 20},
    "action": {"type": "linear", "matrices": [[["0", "-1"], ["1", "0"]]]},
    "omega": "x1 dx2 - x2 dx1",
    "checks": ["jacobi"]
  })";
  Scenario s = scenario_from_json(src);
  ASSERT_TRUE(s.geometry->domain.is_level_set());
  EXPECT_EQ(s.geometry->domain.level()->sample_points.size(), 20u);
}

TEST(ScenarioJson, Rejections) {
  auto kind_of = [](const std::string& src) -> std::optional<ErrorKind> {
    try {
      scenario_from_json(src);
    } catch (const Error& e) {
      return e.kind();
    }
    return std::nullopt;
  };
  EXPECT_EQ(kind_of("{\"name\": "), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(R"({"name": "x", "algebra": {"dim": 1}, "checks": [], "extra": 1})"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"name": "x", "algebra": {"dim": 1}, "checks": ["fly"]})"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"name": "x", "algebra": {"dim": 2, "brackets": [[1, 3, ["0", "1"]]]}, "checks": []})"),
            ErrorKind::InvalidInput);
  // [e1,e2] = e3 + e1, [e2,e3] = e1, [e3,e1] = e2 fails Jacobi.
  EXPECT_EQ(kind_of(R"({"name": "x", "algebra": {"dim": 3, "brackets": [[1, 2, [1, 0, 1]], [2, 3, [1, 0, 0]],
                        [3, 1, [0, 1, 0]]]}, "checks": []})"),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"name": "x", "algebra": {"dim": 1},
                        "manifold": {"type": "chart", "coordinates": ["x", "y"]},
                        "action": {"type": "fields", "fields": ["y @x - x @y"]},
                        "omega": "dx^dy", "phi": ["dx"], "checks": []})"),
            ErrorKind::DegreeError);
  EXPECT_EQ(kind_of(R"({"name": "x", "algebra": {"dim": 1},
                        "manifold": {"type": "chart", "coordinates": ["x"]},
                        "action": {"type": "fields", "fields": ["@q"]}, "omega": "dx", "checks": []})"),
            ErrorKind::UnknownCoordinate);
}

TEST(Report, JsonShape) {
  auto r = run_scenario(builtin_scenario("translations-obstructed"), quiet());
  std::string j = report_json({r}, false);
  EXPECT_NE(j.find("\"scenario\": \"translations-obstructed\""), std::string::npos);
  EXPECT_NE(j.find("\"status\": \"pass\""), std::string::npos);
  EXPECT_NE(j.find("\"millis\": 0.0"), std::string::npos);
  EXPECT_EQ(j.find("witness"), std::string::npos);
}
