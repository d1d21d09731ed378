#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "steklov/error.hpp"
#include "steklov/reconstruct.hpp"

namespace steklov {
namespace {

// Main-lobe half-width of the taper, in resolution cells 2 pi / T.
double lobe_cells(Taper taper) {
  switch (taper) {
    case Taper::Rectangular: return 1.0;
    case Taper::BlackmanHarris: return 4.0;
  }
  return 4.0;
}

bool is_pow2(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

void check_linear_growth(std::span<const double> values) {
  const std::size_t n = values.size();
  const double a = perimeter_estimate(values.subspan(n / 4, n / 4));
  const double b = perimeter_estimate(values.subspan(n / 2));
  if (std::abs(a - b) > 0.05 * std::abs(b))
    fail(ErrorCode::NotAsymptoticallyLinear,
         "counting slope drifts: " + std::to_string(a / std::numbers::pi) + " vs " + std::to_string(b / std::numbers::pi));
}

}  // namespace

double RecoveryReport::suggested_tol_one() const {
  double min_amp = 1.0;
  for (double a : poly.amps) min_amp = std::min(min_amp, std::abs(a));
  return std::clamp(3.0 * noise_floor / min_amp, 1e-6, 0.1);
}

RecoveryReport recover_charpoly_detailed(std::span<const double> values, const RecoveryOpts& opts) {
  std::size_t positive = 0;
  for (double v : values) positive += v > 0.0;
  if (positive < 16) fail(ErrorCode::InsufficientSpectrum, "need at least 16 positive entries");
  if (!(opts.theta > 0.0 && opts.theta < 1.0)) fail(ErrorCode::InvalidInput, "theta must lie in (0, 1)");
  check_linear_growth(values);

  RecoveryReport rep;
  ProductOpts popts;
  popts.margin = opts.margin;
  popts.window = opts.window;
  popts.tail_model = opts.tail_model;
  ProductEvaluator P(values, popts);
  rep.perimeter_estimate = P.perimeter();
  rep.zero_count = P.zero_count();
  rep.window = P.window();
  rep.T = opts.T > 0.0 ? opts.T : P.window();
  rep.resolution = 2.0 * std::numbers::pi / rep.T;
  rep.dz = opts.dz > 0.0 ? opts.dz : rep.resolution / 2.0;
  const double z_max = opts.z_max_factor * rep.perimeter_estimate;

  TransformOpts topts;
  topts.taper = opts.taper;
  auto grid = mean_transform(P, 0.0, z_max, rep.dz, rep.T, topts);

  // Rebuild the same samples for exact evaluation at refined frequencies.
  const double step = std::numbers::pi / (8.0 * std::max(z_max, 1.0 / rep.T));
  const std::size_t cells = static_cast<std::size_t>(std::ceil(rep.T / step));
  const double ds = rep.T / static_cast<double>(cells);
  std::vector<double> s(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) s[i] = static_cast<double>(i) * ds;
  s[cells] = rep.T;
  const auto q = P.values_at(s);

  const std::size_t nz = grid.z.size();
  std::vector<double> mag(nz);
  double max_mag = 0.0;
  for (std::size_t j = 0; j < nz; ++j) {
    mag[j] = std::abs(grid.values[j]);
    max_mag = std::max(max_mag, mag[j]);
  }
  const double lobe = lobe_cells(opts.taper) * rep.resolution;
  std::vector<double> peaks;
  for (std::size_t j = 1; j + 1 < nz; ++j) {
    if (grid.z[j] <= lobe || mag[j] <= opts.theta * max_mag) continue;
    if (!(mag[j] > mag[j - 1] && mag[j] >= mag[j + 1])) continue;
    const double den = mag[j - 1] - 2.0 * mag[j] + mag[j + 1];
    const double shift = den != 0.0 ? 0.5 * (mag[j - 1] - mag[j + 1]) / den : 0.0;
    peaks.push_back(grid.z[j] + std::clamp(shift, -0.5, 0.5) * rep.dz);
  }
  if (peaks.empty()) fail(ErrorCode::FrequencyCountNotPow2, "no frequency peaks above threshold");
  for (std::size_t k = 1; k < peaks.size(); ++k)
    if (peaks[k] - peaks[k - 1] < lobe)
      fail(ErrorCode::ThresholdAmbiguous, "peaks at " + std::to_string(peaks[k - 1]) + " and " +
                                              std::to_string(peaks[k]) + " share one main lobe");
  if (!is_pow2(peaks.size()))
    fail(ErrorCode::FrequencyCountNotPow2, std::to_string(peaks.size()) + " frequencies detected");

  auto exact = mean_transform_samples(q, ds, peaks, opts.taper);
  std::vector<double> amp(peaks.size());
  for (std::size_t k = 0; k < peaks.size(); ++k)
    amp[k] = std::abs(exact.values[k]) * (exact.values[k].real() < 0.0 ? -1.0 : 1.0);

  rep.c1 = 1.0 / (2.0 * amp.back());
  rep.poly.freqs = peaks;
  rep.poly.amps.resize(peaks.size());
  for (std::size_t k = 0; k < peaks.size(); ++k) rep.poly.amps[k] = 2.0 * rep.c1 * amp[k];
  rep.poly.const_term = -rep.c1 * grid.values[0].real();

  double noise = 0.0;
  for (std::size_t j = 0; j < nz; ++j) {
    if (grid.z[j] <= 2.0 * lobe) continue;
    bool near = false;
    for (double p : peaks) near = near || std::abs(grid.z[j] - p) <= 2.0 * lobe;
    if (!near) noise = std::max(noise, mag[j]);
  }
  rep.noise_floor = 2.0 * std::abs(rep.c1) * noise;
  if (opts.keep_transform) rep.transform = std::move(grid);
  return rep;
}

CharPoly recover_charpoly(std::span<const double> values, const RecoveryOpts& opts) {
  return recover_charpoly_detailed(values, opts).poly;
}

}  // namespace steklov
