#include "plectic/random.hpp"

#include <cstdlib>
#include <string>

namespace plectic {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("PLECTIC_SEED");
  if (!s || !*s) return fallback;
  try {
    return std::stoull(s, nullptr, 0);
  } catch (const std::exception&) {
    return fallback;
  }
}

}  // namespace plectic
