#include "steklov/random_spec.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "steklov/error.hpp"

namespace steklov {

double unit_from_bits(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

PolygonSpec random_admissible_spec(std::size_t n, std::uint64_t seed, const RandomSpecOpts& opts) {
  if (n == 0 || n > kMaxSides) fail(ErrorCode::InvalidInput, "random spec needs 1 <= n <= 20");
  if (opts.exceptional > n) fail(ErrorCode::InvalidInput, "more exceptional vertices than sides");
  const double pi = std::numbers::pi;
  std::mt19937_64 rng(seed);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit_from_bits(rng()); };

  std::vector<double> lengths(n);
  for (int attempt = 0;; ++attempt) {
    if (attempt > 10000) fail(ErrorCode::InvalidInput, "could not draw well-separated lengths");
    for (double& l : lengths) l = uniform(opts.min_length, opts.max_length);
    auto probe = PolygonSpec::from_cosines(std::vector<double>(n, 0.5), lengths);
    auto rep = check_admissible(probe);
    if (rep.min_combination >= opts.min_separation * probe.perimeter()) break;
  }

  std::vector<bool> exceptional(n, false);
  for (std::size_t placed = 0; placed < opts.exceptional;) {
    std::size_t j = static_cast<std::size_t>(unit_from_bits(rng()) * static_cast<double>(n));
    if (!exceptional[j]) exceptional[j] = true, ++placed;
  }

  std::vector<double> angles(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (exceptional[j]) {
      int k = 1 + static_cast<int>(unit_from_bits(rng()) * 3.0);
      angles[j] = pi / (2.0 * k);
      continue;
    }
    double c = uniform(opts.min_abs_cos, opts.max_abs_cos);
    if (rng() & 1u) c = -c;
    double s = std::sqrt(1.0 - c * c);
    if (rng() & 1u) s = -s;
    double x = std::atan2(s, c);
    while (x <= pi / 2.0) x += 2.0 * pi;
    angles[j] = pi * pi / (2.0 * x);
  }
  return PolygonSpec::from_angles(std::move(angles), std::move(lengths));
}

}  // namespace steklov
