#include "steklov/roots.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "steklov/error.hpp"
#include "steklov/parallel.hpp"

namespace steklov {
namespace {

constexpr std::size_t kSampleBlock = 4096;
constexpr std::size_t kScanChunk = 4096;

inline bool neg(double v) { return v < 0.0; }

}  // namespace

void RootProblem::sample(double x0, double h, std::size_t count, double* v, double* d) const {
  for (std::size_t i = 0; i < count; ++i) {
    const double x = x0 + static_cast<double>(i) * h;
    v[i] = value(x);
    d[i] = deriv(x);
  }
}

std::vector<Root> scan_roots(const RootProblem& p, double lo, double hi, const ScanOpts& opts) {
  if (!(opts.h > 0.0) || !(hi > lo)) fail(ErrorCode::InvalidInput, "scan needs h > 0 and hi > lo");
  const std::size_t cells = static_cast<std::size_t>(std::ceil((hi - lo) / opts.h));
  const double h = (hi - lo) / static_cast<double>(cells);
  const std::size_t points = cells + 1;

  std::vector<double> v(points), d(points);
  parallel_for((points + kSampleBlock - 1) / kSampleBlock, [&](std::size_t b) {
    const std::size_t i0 = b * kSampleBlock;
    const std::size_t n = std::min(kSampleBlock, points - i0);
    p.sample(lo + static_cast<double>(i0) * h, h, n, v.data() + i0, d.data() + i0);
  });
  // The last point is pinned to hi exactly.
  v[cells] = p.value(hi);
  d[cells] = p.deriv(hi);

  auto f = [&](double x) { return p.value(x); };
  auto df = [&](double x) { return p.deriv(x); };
  auto d2f = [&](double x) { return p.second(x); };

  const std::size_t chunks = (cells + kScanChunk - 1) / kScanChunk;
  std::vector<std::vector<Root>> found(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    auto& out = found[c];
    const std::size_t i_end = std::min(cells, (c + 1) * kScanChunk);
    for (std::size_t i = c * kScanChunk; i < i_end; ++i) {
      const double a = lo + static_cast<double>(i) * h;
      const double b = i + 1 == cells ? hi : lo + static_cast<double>(i + 1) * h;
      const double fa = v[i], fb = v[i + 1], da = d[i], db = d[i + 1];
      if (neg(da) != neg(db)) {
        const double xc = bracketed_newton(df, d2f, a, b, da, opts.rel_tol);
        const double fc = f(xc);
        if (std::abs(fc) <= opts.touch_tol) {
          if (std::abs(d2f(xc)) <= opts.second_tol)
            fail(ErrorCode::MultiplicityOverflow, "root of multiplicity > 2 suspected near " + std::to_string(xc));
          if (neg(fa) == neg(fb))
            out.push_back({xc, 2});
          else
            out.push_back({bracketed_newton(f, df, a, b, fa, opts.rel_tol), 1});
          continue;
        }
        if (neg(fa) != neg(fc)) out.push_back({bracketed_newton(f, df, a, xc, fa, opts.rel_tol), 1});
        if (neg(fc) != neg(fb)) out.push_back({bracketed_newton(f, df, xc, b, fc, opts.rel_tol), 1});
      } else if (neg(fa) != neg(fb)) {
        out.push_back({bracketed_newton(f, df, a, b, fa, opts.rel_tol), 1});
      }
    }
  });

  std::vector<Root> roots;
  for (auto& chunk : found) roots.insert(roots.end(), chunk.begin(), chunk.end());
  std::stable_sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) { return x.x < y.x; });
  return roots;
}

}  // namespace steklov
