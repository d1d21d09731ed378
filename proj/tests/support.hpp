#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "steklov/json_io.hpp"
#include "steklov/random_spec.hpp"

namespace support {

inline nlohmann::json corpus(const std::string& name) {
  return steklov::io::read_json_file(std::string(STEKLOV_TEST_CORPUS) + "/" + name + ".json");
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Six or more random lengths rarely keep every signed combination 1% of L
// apart, so the separation is relaxed there.
inline steklov::PolygonSpec random_spec(std::size_t n, std::uint64_t seed, steklov::RandomSpecOpts opts = {}) {
  if (n >= 6) opts.min_separation = 1e-3;
  return steklov::random_admissible_spec(n, seed, opts);
}

}  // namespace support
