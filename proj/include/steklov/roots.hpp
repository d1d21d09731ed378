#pragma once

#include <cstddef>
#include <vector>

namespace steklov {

// A smooth real function scanned for roots on a uniform grid.
class RootProblem {
 public:
  virtual ~RootProblem() = default;
  virtual double value(double x) const = 0;
  virtual double deriv(double x) const = 0;
  virtual double second(double x) const = 0;
  // Value and first derivative at x0 + i h, i < count.
  virtual void sample(double x0, double h, std::size_t count, double* v, double* d) const;
};

struct ScanOpts {
  double h = 0.0;           // grid spacing
  double touch_tol = 0.0;   // |F| below this at a critical point counts as a double root
  double second_tol = 0.0;  // |F''| below this there as well means multiplicity > 2
  double rel_tol = 1e-12;
};

struct Root {
  double x;
  int multiplicity;  // 1 or 2
};

// Roots in (lo, hi]. Each grid cell is split at any critical point (sign change
// of F') so close pairs and tangential touches are not lost between samples.
// Throws MultiplicityOverflow if F, F' and F'' all vanish numerically.
std::vector<Root> scan_roots(const RootProblem& p, double lo, double hi, const ScanOpts& opts);

// Safeguarded Newton on [a, b] where f(a) and f(b) differ in sign.
template <class F, class DF>
double bracketed_newton(F&& f, DF&& df, double a, double b, double fa, double rel_tol);

}  // namespace steklov

#include "steklov/roots_impl.hpp"
