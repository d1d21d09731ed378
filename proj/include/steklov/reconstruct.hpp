#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "steklov/charpoly.hpp"
#include "steklov/spectra.hpp"

namespace steklov {

struct ProductOpts {
  std::size_t cutoff = 0;  // M, number of leading entries used; 0 means all
  double window = 0.0;     // sigma_win; 0 means lambda_M / margin
  double margin = 4.0;
  // Continue the truncated product past lambda_M with the smooth Weyl density.
  // Without it log|Q| drifts like sigma^2 L / (pi lambda_M) across the window.
  bool tail_model = true;
  double perimeter = 0.0;  // for the tail model; 0 means least-squares estimate
};

// sigma^(2 n0) prod_{m <= M, lambda_m > 0} (1 - sigma^2 / lambda_m^2), optionally
// times the smooth tail factor.
class ProductEvaluator {
 public:
  ProductEvaluator(std::span<const double> values, const ProductOpts& opts = {});

  int zero_count() const { return zero_count_; }
  std::size_t cutoff() const { return cutoff_; }
  double window() const { return window_; }
  double perimeter() const { return perimeter_; }
  double near_tol() const { return near_tol_; }
  bool tail_model() const { return tail_model_; }
  const std::vector<double>& roots() const { return roots_; }

  // Scalar reference path: log|Q| and sign (0 on an exact root).
  double log_abs(double sigma, double* sign) const;
  // Dispatched kernel path over many points.
  void log_abs_batch(std::span<const double> sigma, std::span<double> log_abs, std::span<double> sign) const;
  std::vector<double> values_at(std::span<const double> sigma) const;

 private:
  double tail(double sigma) const;
  void check_window(double sigma) const;

  std::vector<double> roots_;
  std::vector<double> inv_sq_;
  int zero_count_ = 0;
  std::size_t cutoff_ = 0;
  double window_ = 0.0;
  double perimeter_ = 0.0;
  double near_tol_ = 0.0;
  double tail_start_ = 0.0;
  bool tail_model_ = true;
};

// Q(sigma) from the scalar reference path. Throws WindowExceeded past sigma_win.
double eval_product(const ProductEvaluator& P, double sigma);

// pi * slope of the least-squares line m ~ lambda_m (m 1-based).
double perimeter_estimate(std::span<const double> values);

struct C0Result {
  double value = 1.0;
  double tail_bound = 0.0;  // |C0(M) - C0(M/2)|
};

C0Result compute_C0(std::span<const double> sigma, int m0, std::span<const double> lambda, int n0,
                    std::size_t M, double c0_tol = 1e-2);
C0Result compute_C0(const QuasiSpectrum& S, const PerturbedSpectrum& P, std::size_t M, double c0_tol = 1e-2);

enum class Taper { Rectangular, BlackmanHarris };

struct MeanTransform {
  std::vector<double> z;
  std::vector<std::complex<double>> values;
  double T = 0.0;
  Taper taper = Taper::Rectangular;
};

// A(z) = (1/T) * trapezoid sum over s_i = i ds in [0, T] of w(s) q(s) e^{-i z s}.
// w is 1 (Rectangular) or a four-term Blackman-Harris window scaled to mean 1.
MeanTransform mean_transform_samples(std::span<const double> q, double ds, std::span<const double> z,
                                     Taper taper = Taper::Rectangular);

struct TransformOpts {
  Taper taper = Taper::Rectangular;
  double ds = 0.0;  // 0 means the largest step <= pi / (8 z_max) that divides T
};

MeanTransform mean_transform(const ProductEvaluator& P, double z_min, double z_max, double dz, double T,
                             const TransformOpts& opts = {});

struct RecoveryOpts {
  double margin = 4.0;
  double window = 0.0;  // 0 means lambda_max / margin
  double T = 0.0;       // 0 means the window
  double dz = 0.0;      // 0 means half a resolution cell
  double theta = 0.01;
  double z_max_factor = 1.25;
  Taper taper = Taper::BlackmanHarris;
  bool tail_model = true;
  bool keep_transform = false;
};

struct RecoveryReport {
  CharPoly poly;
  double perimeter_estimate = 0.0;
  double window = 0.0;
  double T = 0.0;
  double resolution = 0.0;   // 2 pi / T
  double dz = 0.0;
  double noise_floor = 0.0;  // largest off-peak amplitude, in units of the recovered r_k
  double c1 = 0.0;
  int zero_count = 0;
  std::optional<MeanTransform> transform;

  // Tolerances for handing poly to the geometry stage.
  double suggested_tol_freq() const { return 2.0 * resolution; }
  double suggested_tol_one() const;
};

RecoveryReport recover_charpoly_detailed(std::span<const double> values, const RecoveryOpts& opts = {});
CharPoly recover_charpoly(std::span<const double> values, const RecoveryOpts& opts = {});

}  // namespace steklov
