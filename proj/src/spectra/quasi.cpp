#include <algorithm>
#include <cmath>
#include <numbers>

#include "steklov/error.hpp"
#include "steklov/kernels.hpp"
#include "steklov/spectra.hpp"

namespace steklov {
namespace {

class CharPolyProblem final : public RootProblem {
 public:
  explicit CharPolyProblem(const CharPoly& F) : F_(F) {}
  double value(double x) const override { return char_poly_derivative(F_, x, 0); }
  double deriv(double x) const override { return char_poly_derivative(F_, x, 1); }
  double second(double x) const override { return char_poly_derivative(F_, x, 2); }
  void sample(double x0, double h, std::size_t count, double* v, double* d) const override {
    kernels::trig_sum_grid({F_.freqs.data(), F_.amps.data(), F_.size(), F_.const_term, x0, h, count, v, d});
  }

 private:
  const CharPoly& F_;
};

}  // namespace

int zero_half_multiplicity(const CharPoly& F, double touch_rel) {
  const int max_j = static_cast<int>(F.size()) + 1;
  for (int j = 0; j <= max_j; ++j) {
    double value = j == 0 ? -F.const_term : 0.0;
    double scale = j == 0 ? std::abs(F.const_term) : 0.0;
    const double sgn = j % 2 == 0 ? 1.0 : -1.0;
    for (std::size_t k = 0; k < F.size(); ++k) {
      const double p = std::pow(F.freqs[k], 2 * j);
      value += sgn * F.amps[k] * p;
      scale += std::abs(F.amps[k]) * p;
    }
    if (std::abs(value) > touch_rel * scale) return j;
  }
  fail(ErrorCode::MultiplicityOverflow, "F vanishes to every computed order at 0");
}

QuasiSpectrum find_quasi_eigenvalues(const CharPoly& F, double sigma_max, const RootOpts& opts) {
  F.validate();
  if (F.size() == 0) fail(ErrorCode::InvalidInput, "characteristic polynomial has no frequencies");
  if (!(sigma_max > 0.0)) fail(ErrorCode::InvalidInput, "sigma_max must be positive");
  if (opts.oversample < 1) fail(ErrorCode::InvalidInput, "oversample must be >= 1");

  const double t_max = F.max_freq();
  ScanOpts scan;
  scan.h = std::numbers::pi / (opts.oversample * t_max);
  scan.touch_tol = opts.touch_rel * F.abs_sum();
  scan.second_tol = scan.touch_tol * std::max(1.0, t_max * t_max);
  scan.rel_tol = opts.rel_tol;

  QuasiSpectrum S;
  S.sigma_max = sigma_max;
  S.zero_half_mult = zero_half_multiplicity(F, opts.touch_rel);
  S.values.assign(static_cast<std::size_t>(S.zero_half_mult), 0.0);

  CharPolyProblem problem(F);
  for (const Root& r : scan_roots(problem, 0.0, sigma_max, scan)) {
    // The zero root already accounted for reappears as a touch or crossing in the first cell.
    if (S.zero_half_mult > 0 && r.x < 0.5 * scan.h) continue;
    for (int k = 0; k < r.multiplicity; ++k) S.values.push_back(r.x);
  }
  return S;
}

WeylReport weyl_check(std::span<const double> values, double L, double window) {
  if (values.empty()) fail(ErrorCode::EmptyWindow, "spectrum is empty");
  if (!std::is_sorted(values.begin(), values.end())) fail(ErrorCode::InvalidInput, "spectrum must be sorted");
  WeylReport rep;
  rep.window = window > 0.0 ? window : values.back();
  const double slope = L / std::numbers::pi;
  double dev = 0.0;
  std::size_t i = 0;
  while (i < values.size() && values[i] <= rep.window) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    const double w = slope * values[i];
    dev = std::max(dev, std::abs(static_cast<double>(i) - w));
    dev = std::max(dev, std::abs(static_cast<double>(j) - w));
    i = j;
  }
  dev = std::max(dev, std::abs(static_cast<double>(i) - slope * rep.window));
  rep.max_deviation = dev;

  std::size_t hi = 0;
  for (std::size_t lo = 0; lo < values.size(); ++lo) {
    hi = std::max(hi, lo);
    while (hi < values.size() && values[hi] < values[lo] + 1.0) ++hi;
    rep.max_unit_count = std::max(rep.max_unit_count, static_cast<int>(hi - lo));
  }
  return rep;
}

WeylReport weyl_check(const QuasiSpectrum& S, double L) { return weyl_check(S.values, L, S.sigma_max); }

}  // namespace steklov
