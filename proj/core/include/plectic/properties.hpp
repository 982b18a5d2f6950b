#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "plectic/random.hpp"

namespace plectic {

// One randomized exact invariant: each call draws fresh data from the Rng and
// returns a witness when the invariant fails on it.
struct Property {
  std::string name;
  std::function<std::optional<std::string>(Rng&)> instance;
};

struct PropertyResult {
  std::string name;
  int instances = 0;
  int failures = 0;
  std::string first_witness;

  bool ok() const { return failures == 0; }
};

// Names, in catalog order:
//   koszul-composition, unshuffle-count, alt-idempotent, solve-linear,
//   d-squared, leibniz, commutator, homotopy-formula, iota-iota, ce-squared,
//   perfect-decomposition, bracket-identity, big-identity, parse-roundtrip.
const std::vector<Property>& property_catalog();
const Property& find_property(const std::string& name);

// The Rng is seeded with seed ^ hash(name), so results do not depend on which
// other properties run.
PropertyResult run_property(const Property& p, std::uint64_t seed, int instances);
std::vector<PropertyResult> run_properties(const std::vector<std::string>& names, std::uint64_t seed, int instances);

}  // namespace plectic
