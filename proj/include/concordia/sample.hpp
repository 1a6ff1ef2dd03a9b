#pragma once

#include "concordia/expr.hpp"
#include "concordia/rng.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace concordia {

/// Draws `count` pairs from the copula, deterministically for a fixed seed.
///
/// Sample i consumes counters [64*i, 64*(i+1)) of the CounterRng stream for
/// `seed` (see rng.hpp for the seed-to-stream map), so chunks of the index
/// range can be produced independently and concatenated in index order.
/// Shuffle leaves return (U, h(U)) exactly; the independence copula draws V
/// fresh; ordinal sums route U through their blocks; reflections flip the
/// corresponding coordinate; convex combinations pick a part by weight.
std::vector<std::pair<double, double>> sample(const CopulaExpr& e, std::uint64_t seed,
                                              long long count);

/// V drawn from the conditional law given U = u, consuming draws from rng.
double conditional_v(const CopulaExpr& e, double u, CounterRng& rng);

}  // namespace concordia
