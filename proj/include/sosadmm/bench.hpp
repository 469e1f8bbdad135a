#pragma once

#include <cstdint>
#include <vector>

#include "sosadmm/poly.hpp"

namespace sosadmm::bench {

// p0 + sum_i x_i^{2d}, where p0 draws i.i.d. uniform [-1,1] coefficients for
// every monomial of degree <= 2d-1. The x_i^{2d} terms keep p bounded below.
// Deterministic in seed.
Polynomial gen_random_polymin(int n, int d, std::uint64_t seed);

// f(x) = A x + g(x) with A = B - (lambda_max((B+B')/2) + 0.5) I for B with
// uniform [-1,1] entries, so the symmetric part of A is negative definite and
// the origin is locally asymptotically stable. g holds ~3n sparse cubic and
// quadratic terms with uniform [-0.1, 0.1] coefficients; f(0) = 0 and
// deg f = 3 by construction. Deterministic in seed.
std::vector<Polynomial> gen_random_stable_system(int n, std::uint64_t seed);

}  // namespace sosadmm::bench
