#include <cmath>
#include <numbers>
#include <string>

#include "steklov/error.hpp"
#include "steklov/kernels.hpp"
#include "steklov/parallel.hpp"
#include "steklov/reconstruct.hpp"

namespace steklov {
namespace {

constexpr std::size_t kZBatch = 64;

double taper_weight(Taper taper, double x) {
  if (taper == Taper::Rectangular) return 1.0;
  // Four-term Blackman-Harris on [0, 1], divided by its mean a0.
  constexpr double a0 = 0.35875, a1 = 0.48829, a2 = 0.14128, a3 = 0.01168;
  const double w = 2.0 * std::numbers::pi * x;
  return (a0 - a1 * std::cos(w) + a2 * std::cos(2.0 * w) - a3 * std::cos(3.0 * w)) / a0;
}

}  // namespace

MeanTransform mean_transform_samples(std::span<const double> q, double ds, std::span<const double> z, Taper taper) {
  if (q.size() < 2 || !(ds > 0.0)) fail(ErrorCode::InvalidInput, "need at least two samples and ds > 0");
  const std::size_t last = q.size() - 1;
  const double T = static_cast<double>(last) * ds;
  std::vector<double> weighted(q.size());
  for (std::size_t i = 0; i <= last; ++i) {
    const double trap = (i == 0 || i == last) ? 0.5 : 1.0;
    weighted[i] = trap * taper_weight(taper, static_cast<double>(i) / static_cast<double>(last)) * q[i];
  }

  MeanTransform out;
  out.z.assign(z.begin(), z.end());
  out.T = T;
  out.taper = taper;
  std::vector<double> re(z.size()), im(z.size());
  parallel_for((z.size() + kZBatch - 1) / kZBatch, [&](std::size_t b) {
    const std::size_t j0 = b * kZBatch;
    const std::size_t n = std::min(kZBatch, z.size() - j0);
    kernels::exp_transform({weighted.data(), weighted.size(), ds, z.data() + j0, n, re.data() + j0, im.data() + j0});
  });
  out.values.resize(z.size());
  const double scale = ds / T;
  for (std::size_t j = 0; j < z.size(); ++j) out.values[j] = {re[j] * scale, im[j] * scale};
  return out;
}

MeanTransform mean_transform(const ProductEvaluator& P, double z_min, double z_max, double dz, double T,
                             const TransformOpts& opts) {
  if (!(T > 0.0) || !(dz > 0.0) || !(z_max >= z_min) || z_min < 0.0)
    fail(ErrorCode::InvalidInput, "transform needs T > 0, dz > 0 and 0 <= z_min <= z_max");
  if (T > P.window() * (1.0 + 1e-12))
    fail(ErrorCode::WindowExceeded, "T = " + std::to_string(T) + " beyond window " + std::to_string(P.window()));
  if (2.0 * std::numbers::pi / T > 4.0 * dz)
    fail(ErrorCode::ResolutionTooCoarse, "2 pi / T exceeds 4 dz; raise T or the spectrum length");

  const double max_step = std::numbers::pi / (8.0 * std::max(z_max, 1.0 / T));
  const double step = opts.ds > 0.0 ? std::min(opts.ds, max_step) : max_step;
  const std::size_t cells = static_cast<std::size_t>(std::ceil(T / step));
  const double ds = T / static_cast<double>(cells);
  std::vector<double> s(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) s[i] = static_cast<double>(i) * ds;
  s[cells] = T;
  auto q = P.values_at(s);

  std::vector<double> z;
  for (std::size_t j = 0;; ++j) {
    const double zj = z_min + static_cast<double>(j) * dz;
    if (zj > z_max * (1.0 + 1e-12)) break;
    z.push_back(zj);
  }
  return mean_transform_samples(q, ds, z, opts.taper);
}

}  // namespace steklov
