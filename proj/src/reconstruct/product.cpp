#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "steklov/error.hpp"
#include "steklov/kernels.hpp"
#include "steklov/parallel.hpp"
#include "steklov/reconstruct.hpp"

namespace steklov {
namespace {

constexpr std::size_t kBatch = 256;

void check_sorted_nonnegative(std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0) fail(ErrorCode::InvalidInput, "spectrum entries must be >= 0");
    if (i > 0 && values[i] < values[i - 1]) fail(ErrorCode::InvalidInput, "spectrum must be sorted");
  }
}

}  // namespace

double perimeter_estimate(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) fail(ErrorCode::InsufficientSpectrum, "need at least two entries for a slope");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += values[i];
    my += static_cast<double>(i + 1);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = values[i] - mx;
    sxy += dx * (static_cast<double>(i + 1) - my);
    sxx += dx * dx;
  }
  if (!(sxx > 0.0)) fail(ErrorCode::InsufficientSpectrum, "spectrum has no spread");
  return std::numbers::pi * sxy / sxx;
}

ProductEvaluator::ProductEvaluator(std::span<const double> values, const ProductOpts& opts) {
  check_sorted_nonnegative(values);
  cutoff_ = opts.cutoff == 0 ? values.size() : opts.cutoff;
  if (cutoff_ > values.size()) fail(ErrorCode::InsufficientSpectrum, "cutoff beyond the spectrum");
  auto used = values.first(cutoff_);
  for (double v : used) {
    if (v == 0.0) {
      ++zero_count_;
    } else {
      roots_.push_back(v);
      inv_sq_.push_back(1.0 / (v * v));
    }
  }
  if (roots_.size() < 2) fail(ErrorCode::InsufficientSpectrum, "need at least two positive entries");
  if (!(opts.margin >= 1.0)) fail(ErrorCode::InvalidInput, "margin must be >= 1");

  const double top = roots_.back();
  window_ = opts.window > 0.0 ? opts.window : top / opts.margin;
  if (window_ * opts.margin > top * (1.0 + 1e-12))
    fail(ErrorCode::InsufficientSpectrum,
         "spectrum ends at " + std::to_string(top) + ", below margin * window");
  perimeter_ = opts.perimeter > 0.0 ? opts.perimeter : perimeter_estimate(used);
  if (!(perimeter_ > 0.0)) fail(ErrorCode::NotAsymptoticallyLinear, "non-positive counting slope");
  const double spacing = std::numbers::pi / perimeter_;
  near_tol_ = spacing / 4.0;
  tail_start_ = top + spacing / 2.0;
  tail_model_ = opts.tail_model;
}

void ProductEvaluator::check_window(double sigma) const {
  if (!(std::abs(sigma) <= window_ * (1.0 + 1e-12)))
    fail(ErrorCode::WindowExceeded, "sigma = " + std::to_string(sigma) + " beyond window " + std::to_string(window_));
}

double ProductEvaluator::tail(double sigma) const {
  if (!tail_model_) return 0.0;
  // (L/pi) * integral_a^inf log(1 - sigma^2 / x^2) dx, a = tail_start.
  const double a = tail_start_;
  const double u = std::abs(sigma) / a;
  const double integral = -a * std::log1p(-u * u) + std::abs(sigma) * (std::log1p(-u) - std::log1p(u));
  return perimeter_ / std::numbers::pi * integral;
}

double ProductEvaluator::log_abs(double sigma, double* sign) const {
  check_window(sigma);
  double la = 0.0, sg = 1.0;
  kernels::scalar::log_product({inv_sq_.data(), roots_.data(), roots_.size(), near_tol_, &sigma, 1, &la, &sg});
  if (zero_count_ > 0) {
    if (sigma == 0.0) {
      if (sign) *sign = 0.0;
      return -std::numeric_limits<double>::infinity();
    }
    la += 2.0 * zero_count_ * std::log(std::abs(sigma));
  }
  if (sign) *sign = sg;
  return la + tail(sigma);
}

void ProductEvaluator::log_abs_batch(std::span<const double> sigma, std::span<double> log_abs,
                                     std::span<double> sign) const {
  if (log_abs.size() < sigma.size() || sign.size() < sigma.size())
    fail(ErrorCode::InvalidInput, "output spans too short");
  for (double s : sigma) check_window(s);
  parallel_for((sigma.size() + kBatch - 1) / kBatch, [&](std::size_t b) {
    const std::size_t i0 = b * kBatch;
    const std::size_t n = std::min(kBatch, sigma.size() - i0);
    kernels::log_product({inv_sq_.data(), roots_.data(), roots_.size(), near_tol_, sigma.data() + i0, n,
                          log_abs.data() + i0, sign.data() + i0});
    for (std::size_t i = i0; i < i0 + n; ++i) {
      if (zero_count_ > 0) {
        if (sigma[i] == 0.0) {
          log_abs[i] = -std::numeric_limits<double>::infinity();
          sign[i] = 0.0;
          continue;
        }
        log_abs[i] += 2.0 * zero_count_ * std::log(std::abs(sigma[i]));
      }
      log_abs[i] += tail(sigma[i]);
    }
  });
}

std::vector<double> ProductEvaluator::values_at(std::span<const double> sigma) const {
  std::vector<double> la(sigma.size()), sg(sigma.size());
  log_abs_batch(sigma, la, sg);
  for (std::size_t i = 0; i < la.size(); ++i) la[i] = sg[i] == 0.0 ? 0.0 : sg[i] * std::exp(la[i]);
  return la;
}

double eval_product(const ProductEvaluator& P, double sigma) {
  double sign = 0.0;
  const double la = P.log_abs(sigma, &sign);
  return sign == 0.0 ? 0.0 : sign * std::exp(la);
}

C0Result compute_C0(std::span<const double> sigma, int m0, std::span<const double> lambda, int n0, std::size_t M,
                    double c0_tol) {
  const std::size_t lead = static_cast<std::size_t>(std::max(m0, n0));
  if (m0 < 0 || n0 < 0 || M > sigma.size() || M > lambda.size() || M < 2 * lead + 2)
    fail(ErrorCode::InvalidInput, "cutoff M incompatible with the spectra");
  // log|C0| from the partial products up to Mx (1-based, inclusive).
  auto partial = [&](std::size_t Mx) {
    double lc = 0.0;
    if (n0 > m0)
      for (int m = m0 + 1; m <= n0; ++m) lc += 2.0 * std::log(sigma[m - 1]);
    if (n0 < m0)
      for (int m = n0 + 1; m <= m0; ++m) lc -= 2.0 * std::log(lambda[m - 1]);
    for (std::size_t m = lead + 1; m <= Mx; ++m) lc += 2.0 * (std::log(sigma[m - 1]) - std::log(lambda[m - 1]));
    return lc;
  };
  const double sgn = (std::abs(n0 - m0) % 2 == 0) ? 1.0 : -1.0;
  C0Result r;
  r.value = sgn * std::exp(partial(M));
  const double half = sgn * std::exp(partial(std::max(lead + 1, M / 2)));
  r.tail_bound = std::abs(r.value - half);
  if (!std::isfinite(r.value) || r.tail_bound > c0_tol * std::abs(r.value))
    fail(ErrorCode::DivergenceSuspected, "C0 partial products at M/2 and M differ by " + std::to_string(r.tail_bound));
  return r;
}

C0Result compute_C0(const QuasiSpectrum& S, const PerturbedSpectrum& P, std::size_t M, double c0_tol) {
  return compute_C0(S.values, S.zero_half_mult, P.values, P.zero_count, M, c0_tol);
}

}  // namespace steklov
