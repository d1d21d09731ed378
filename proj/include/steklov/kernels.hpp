#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

// Data-parallel inner loops. Each kernel has a scalar reference and an AVX2/FMA
// variant chosen at runtime; STEKLOV_KERNELS=scalar forces the reference.
namespace steklov::kernels {

enum class Isa { Scalar, Avx2 };

bool cpu_has_avx2();
Isa active_isa();
std::string_view isa_name(Isa isa);
// Test hook; nullopt restores automatic selection.
void force_isa(std::optional<Isa> isa);

// value[i] = sum_k amps[k] cos(freqs[k] s_i) - const_term,
// deriv[i] = -sum_k amps[k] freqs[k] sin(freqs[k] s_i), s_i = s0 + i h.
struct TrigSumArgs {
  const double* freqs;
  const double* amps;
  std::size_t terms;
  double const_term;
  double s0;
  double h;
  std::size_t count;
  double* value;
  double* deriv;
};

// log|prod_m (roots[m] - s_i)(roots[m] + s_i) inv_sq[m]| and its sign (+1, -1, or 0
// on an exact root), with inv_sq[m] = 1 / roots[m]^2.
// The scalar path multiplies factors with |s_i - roots[m]| < near_tol directly
// rather than through their logarithm.
struct LogProductArgs {
  const double* inv_sq;
  const double* roots;
  std::size_t factors;
  double near_tol;
  const double* s;
  std::size_t count;
  double* log_abs;
  double* sign;
};

// re[j] + i im[j] = sum_i q[i] exp(-i z_j s_i), s_i = i ds.
struct ExpTransformArgs {
  const double* q;
  std::size_t samples;
  double ds;
  const double* z;
  std::size_t count;
  double* re;
  double* im;
};

void trig_sum_grid(const TrigSumArgs& a, Isa isa);
void log_product(const LogProductArgs& a, Isa isa);
void exp_transform(const ExpTransformArgs& a, Isa isa);

inline void trig_sum_grid(const TrigSumArgs& a) { trig_sum_grid(a, active_isa()); }
inline void log_product(const LogProductArgs& a) { log_product(a, active_isa()); }
inline void exp_transform(const ExpTransformArgs& a) { exp_transform(a, active_isa()); }

namespace scalar {
void trig_sum_grid(const TrigSumArgs& a);
void log_product(const LogProductArgs& a);
void exp_transform(const ExpTransformArgs& a);
}  // namespace scalar

namespace avx2 {
void trig_sum_grid(const TrigSumArgs& a);
void log_product(const LogProductArgs& a);
void exp_transform(const ExpTransformArgs& a);
}  // namespace avx2

}  // namespace steklov::kernels
