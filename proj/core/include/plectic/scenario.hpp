#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plectic/cartan_model.hpp"
#include "plectic/moment_map.hpp"

namespace plectic {

// Basis tuples are 0-based in memory and 1-based in scenario files.
struct ExpectedForm {
  int k = 1;
  std::vector<int> tuple;
  PolyForm value;
};

struct ExpectedScalar {
  std::vector<int> tuple;
  Rational value;
};

struct ObstructionExpectation {
  bool trivial = true;
  std::vector<ExpectedScalar> cocycle;  // checked at every base point
};

// The central n-extension of g by a scalar (n+1)-cocycle.
struct CentralData {
  int n = 1;
  ScalarCochain cocycle;
  bool nontrivial = true;
};

struct TraceValue {
  int k = 2;
  std::vector<int> tuple;
  Rational value;
};

// Symmetrized trace polynomials on su(N).
struct TraceSpec {
  int n = 2;
  std::vector<int> zero;
  std::vector<int> nondegenerate;
  std::vector<int> degenerate;
  std::vector<TraceValue> values;
};

struct Geometry {
  ActionData action;
  std::optional<std::vector<Matrix>> matrices;  // set for linear actions
  Domain domain;
  PolyForm omega;
};

struct Scenario {
  std::string name;
  std::string summary;
  LieAlgebra algebra;
  std::optional<Geometry> geometry;
  std::optional<CartanCochain> cartan;
  std::optional<std::vector<FormCochain>> moment;  // f_1..f_n
  std::optional<std::vector<PolyForm>> phi;
  // Invariant primitive of omega and invariant functions, for random 1-step data.
  std::optional<PolyForm> primitive;
  std::vector<MultiPoly> invariants;
  std::vector<Point> base_points;
  std::vector<ExpectedForm> expected;
  std::optional<ObstructionExpectation> obstruction;
  std::optional<std::string> extension_fails_at;
  std::optional<CentralData> central;
  std::optional<TraceSpec> traces;
  std::vector<std::string> properties;
  int property_instances = 200;
  std::vector<std::string> checks;
};

const std::vector<std::string>& check_names();

struct CheckOutcome {
  std::string name;
  bool ok = true;
  std::string witness;
  std::string detail;
  double millis = 0;
};

struct ScenarioReport {
  std::string scenario;
  std::vector<CheckOutcome> checks;
  std::vector<std::string> flags;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  const CheckOutcome* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

struct RunOptions {
  std::uint64_t seed = 0x706c6563;
  bool timing = true;
  int random_instances = 10;
};

// Runs the listed checks in order; failures and thrown errors become report entries.
ScenarioReport run_scenario(const Scenario& s, const RunOptions& options = {});

// The moment map the checks verify: explicit components, else the Cartan
// formula, else the star-shaped construction from phi at the first base point.
MomentMap scenario_moment(const Scenario& s);

std::vector<std::string> list_builtins();
// Throws InvalidInput for an unknown name.
Scenario builtin_scenario(const std::string& name);

// Throws ParseError, InvalidInput and the construction errors of the parts.
Scenario scenario_from_json(const std::string& text);
std::string scenario_to_json(const Scenario& s);

std::string report_json(const std::vector<ScenarioReport>& reports, bool timing);
std::string report_text(const std::vector<ScenarioReport>& reports, bool timing);

}  // namespace plectic
