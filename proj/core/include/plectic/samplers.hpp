#pragma once

#include <vector>

#include "plectic/cochain.hpp"
#include "plectic/combinatorics.hpp"
#include "plectic/forms.hpp"
#include "plectic/linear_solve.hpp"
#include "plectic/random.hpp"

namespace plectic {

// Random exact data for property suites. Every draw goes through the given Rng,
// so a fixed seed reproduces the whole sequence.
MultiPoly random_poly(int nvars, int max_degree, int terms, Rng& rng);
PolyForm random_form(const Chart& chart, int degree, int max_coeff_degree, Rng& rng, int terms = 3);
PolyMultiVec random_field(const Chart& chart, int degree, int max_coeff_degree, Rng& rng, int terms = 3);
// v_i = sum_j d_j A_ij with A skew: divergence free, so it preserves the volume form.
PolyMultiVec random_divergence_free(const Chart& chart, int max_degree, Rng& rng);
ScalarCochain random_cochain(int dim, int k, Rng& rng);
Permutation random_permutation(int n, Rng& rng);
MultilinearTable random_table(int dim, int arity, Rng& rng);
// Entries are zero with probability about 1/2.
Matrix random_matrix(int rows, int cols, Rng& rng);

}  // namespace plectic
