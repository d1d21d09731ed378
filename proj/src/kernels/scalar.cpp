#include <cmath>
#include <limits>

#include "steklov/kernels.hpp"

namespace steklov::kernels::scalar {

void trig_sum_grid(const TrigSumArgs& a) {
  for (std::size_t i = 0; i < a.count; ++i) {
    const double s = a.s0 + static_cast<double>(i) * a.h;
    double v = 0.0, d = 0.0;
    for (std::size_t k = 0; k < a.terms; ++k) {
      const double x = a.freqs[k] * s;
      v += a.amps[k] * std::cos(x);
      d -= a.amps[k] * a.freqs[k] * std::sin(x);
    }
    a.value[i] = v - a.const_term;
    a.deriv[i] = d;
  }
}

void log_product(const LogProductArgs& a) {
  for (std::size_t i = 0; i < a.count; ++i) {
    const double s = a.s[i];
    double logsum = 0.0, direct = 1.0, sign = 1.0;
    for (std::size_t m = 0; m < a.factors; ++m) {
      const double r = a.roots[m];
      const double f = (r - s) * (r + s) * a.inv_sq[m];
      if (std::abs(s - a.roots[m]) < a.near_tol) {
        direct *= f;
      } else {
        logsum += std::log(std::abs(f));
        if (f < 0.0) sign = -sign;
      }
    }
    if (direct == 0.0) {
      a.log_abs[i] = -std::numeric_limits<double>::infinity();
      a.sign[i] = 0.0;
    } else {
      a.log_abs[i] = logsum + std::log(std::abs(direct));
      a.sign[i] = direct < 0.0 ? -sign : sign;
    }
  }
}

void exp_transform(const ExpTransformArgs& a) {
  for (std::size_t j = 0; j < a.count; ++j) {
    const double z = a.z[j];
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < a.samples; ++i) {
      const double x = z * (static_cast<double>(i) * a.ds);
      re += a.q[i] * std::cos(x);
      im -= a.q[i] * std::sin(x);
    }
    a.re[j] = re;
    a.im[j] = im;
  }
}

}  // namespace steklov::kernels::scalar
