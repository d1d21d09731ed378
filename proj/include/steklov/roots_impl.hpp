#pragma once

#include <cmath>
#include <limits>

namespace steklov {

template <class F, class DF>
double bracketed_newton(F&& f, DF&& df, double a, double b, double fa, double rel_tol) {
  // Keep lo on the side where f has the sign of f(a).
  const bool a_neg = fa < 0.0;
  double lo = a, hi = b;
  double x = 0.5 * (a + b);
  double dx_old = b - a, dx = dx_old;
  for (int it = 0; it < 200; ++it) {
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == a_neg) lo = x; else hi = x;
    const double d = df(x);
    const double tol = rel_tol * std::abs(x) + 4.0 * std::numeric_limits<double>::denorm_min();
    double next = x - fx / d;
    const bool inside = d != 0.0 && std::isfinite(next) && (next - lo) * (next - hi) < 0.0;
    const bool newton = inside && std::abs(2.0 * fx) < std::abs(dx_old * d);
    if (newton) {
      dx_old = dx;
      dx = next - x;
    } else {
      dx_old = dx;
      next = 0.5 * (lo + hi);
      dx = next - x;
    }
    x = next;
    // A converged Newton step leaves an error far below tol; a bisection step
    // only bounds it by the bracket, so those continue down to rounding level.
    if (newton && std::abs(dx) <= tol) return x;
    if (std::abs(hi - lo) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) return x;
  }
  return x;
}

}  // namespace steklov
