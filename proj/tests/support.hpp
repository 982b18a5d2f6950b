#pragma once

#include <vector>

#include "plectic/cochain.hpp"
#include "plectic/samplers.hpp"

namespace plectic::testing {

inline Rng test_rng(std::uint64_t salt) { return Rng(seed_from_env() ^ salt); }

using plectic::random_cochain;
using plectic::random_divergence_free;
using plectic::random_field;
using plectic::random_form;
using plectic::random_poly;

}  // namespace plectic::testing
