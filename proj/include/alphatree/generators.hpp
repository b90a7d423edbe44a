// Seeded input generators shared by the property tests and the CLI batch
// commands. No ambient randomness; callers pass the engine.
#pragma once

#include <random>

#include "alphatree/core.hpp"

namespace alphatree {

using RandomEngine = std::mt19937_64;

/// n integer weights in [1, max_w], denominator 1.
WeightList random_integer_weights(RandomEngine& rng, int n, long long max_w = 1000000);

/// Normalized distribution with integer numerators in [1, max_w].
WeightList random_distribution(RandomEngine& rng, int n, long long max_w = 1000000);

/// Normalized distribution with every probability a negative power of two,
/// produced by repeatedly halving a random part.
WeightList random_dyadic_distribution(RandomEngine& rng, int n);

WeightList random_monotone_distribution(RandomEngine& rng, int n, bool ascending);

/// Strictly decreasing prefix followed by a non-decreasing tail.
WeightList random_valley_distribution(RandomEngine& rng, int n);

LengthProfile random_length_profile(RandomEngine& rng, int n, int max_len);

}  // namespace alphatree
