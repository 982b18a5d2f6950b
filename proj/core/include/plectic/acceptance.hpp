#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace plectic {

struct CriterionResult {
  int id = 0;
  std::string title;
  double limit_seconds = 0;
  bool ok = false;  // the computation itself
  double seconds = 0;
  std::string detail;  // summary on success, first failure otherwise

  bool passed() const { return ok && seconds <= limit_seconds; }
};

// The twelve acceptance criteria, in order, each with its wall-clock limit.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);
CriterionResult run_criterion(int id, std::uint64_t seed);
int criterion_count();

// "criterion  3 PASS  coefficient audit (0.91 s, limit 30 s): ..."; timing off
// drops the measured time so output is reproducible.
std::string format_criterion(const CriterionResult& r, bool timing);

}  // namespace plectic
