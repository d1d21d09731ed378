#include <algorithm>
#include <cmath>
#include <random>

#include "steklov/error.hpp"
#include "steklov/random_spec.hpp"
#include "steklov/spectra.hpp"

namespace steklov {

PerturbedSpectrum perturb_spectrum(const QuasiSpectrum& S, double A, double eps, std::uint64_t seed,
                                   const PerturbOpts& opts) {
  if (!(A >= 0.0) || !(eps > 0.0)) fail(ErrorCode::InvalidInput, "perturbation needs A >= 0 and eps > 0");
  PerturbedSpectrum P;
  P.sigma_max = S.sigma_max;
  P.values.resize(S.values.size());
  std::mt19937_64 rng(seed);
  for (std::size_t m = 0; m < S.values.size(); ++m) {
    const double u = 2.0 * unit_from_bits(rng()) - 1.0;
    const double shift = u * A * std::pow(static_cast<double>(m + 1), -eps);
    P.values[m] = std::max(0.0, S.values[m] + shift);
  }
  if (opts.force_zero_first && !P.values.empty()) P.values[0] = 0.0;
  std::sort(P.values.begin(), P.values.end());
  P.zero_count = static_cast<int>(std::count(P.values.begin(), P.values.end(), 0.0));
  return P;
}

}  // namespace steklov
