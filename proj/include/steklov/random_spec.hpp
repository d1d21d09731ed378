#pragma once

#include <cstddef>
#include <cstdint>

#include "steklov/polygon.hpp"

namespace steklov {

struct RandomSpecOpts {
  double min_length = 0.5;
  double max_length = 2.0;
  // Reject length draws whose min |eta . l| falls below this fraction of L.
  double min_separation = 0.01;
  // |c_j| is drawn from this band, which keeps every amplitude and every
  // adjacency ratio well away from the recovery thresholds.
  double min_abs_cos = 0.5;
  double max_abs_cos = 0.9;
  // Number of vertices forced to be exceptional (|c| = 1, random parity).
  std::size_t exceptional = 0;
};

// Deterministic in (n, seed): portable bit-to-double mapping over mt19937_64.
// Angles are chosen so that cos(pi^2 / (2 alpha)) hits the drawn cosine.
PolygonSpec random_admissible_spec(std::size_t n, std::uint64_t seed, const RandomSpecOpts& opts = {});

// Uniform double in [0, 1) from the top 53 bits.
double unit_from_bits(std::uint64_t bits);

}  // namespace steklov
