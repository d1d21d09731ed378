#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "steklov/charpoly.hpp"
#include "steklov/roots.hpp"

namespace steklov {

// Sorted non-negative roots with multiplicity; the first zero_half_mult entries are 0.
struct QuasiSpectrum {
  std::vector<double> values;
  int zero_half_mult = 0;
  double sigma_max = 0.0;  // end of the computed window, 0 if unknown
};

struct PerturbedSpectrum {
  std::vector<double> values;
  int zero_count = 0;
  double sigma_max = 0.0;
};

struct RootOpts {
  int oversample = 8;
  double rel_tol = 1e-12;
  double touch_rel = 1e-8;
};

QuasiSpectrum find_quasi_eigenvalues(const CharPoly& F, double sigma_max, const RootOpts& opts = {});

// Multiplicity of sigma = 0 as a root of F, halved, from even-order derivatives.
int zero_half_multiplicity(const CharPoly& F, double touch_rel = 1e-8);

struct WeylReport {
  double max_deviation = 0.0;  // sup |N(sigma) - L sigma / pi| over the window
  int max_unit_count = 0;      // most entries in any half-open unit interval
  double window = 0.0;
};

WeylReport weyl_check(std::span<const double> values, double L, double window = 0.0);
WeylReport weyl_check(const QuasiSpectrum& S, double L);

struct PerturbOpts {
  bool force_zero_first = false;  // set lambda_1 = 0, as for a true Steklov spectrum
};

PerturbedSpectrum perturb_spectrum(const QuasiSpectrum& S, double A, double eps, std::uint64_t seed,
                                   const PerturbOpts& opts = {});

}  // namespace steklov
