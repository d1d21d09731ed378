#include <immintrin.h>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>

#include "steklov/kernels.hpp"

#define STEKLOV_AVX2 __attribute__((target("avx2,fma")))

namespace steklov::kernels::avx2 {
namespace {

constexpr std::size_t kTrigBlock = 256;   // grid points per phasor anchor
constexpr std::size_t kExpBlock = 512;    // samples per phasor anchor
constexpr std::size_t kRenormEvery = 8;

STEKLOV_AVX2 inline void rotate(__m256d& pr, __m256d& pi, __m256d rr, __m256d ri) {
  __m256d nr = _mm256_fmsub_pd(pr, rr, _mm256_mul_pd(pi, ri));
  __m256d ni = _mm256_fmadd_pd(pr, ri, _mm256_mul_pd(pi, rr));
  pr = nr;
  pi = ni;
}

// Split x into mantissa in [1, 2) (sign kept) and accumulate the exponent.
STEKLOV_AVX2 inline __m256d renormalize(__m256d x, __m256i& exponent) {
  const __m256i exp_mask = _mm256_set1_epi64x(0x7ff0000000000000LL);
  const __m256i bias = _mm256_set1_epi64x(0x3ff0000000000000LL);
  __m256i bits = _mm256_castpd_si256(x);
  __m256i e = _mm256_srli_epi64(_mm256_and_si256(bits, exp_mask), 52);
  exponent = _mm256_add_epi64(exponent, _mm256_sub_epi64(e, _mm256_set1_epi64x(1023)));
  bits = _mm256_or_si256(_mm256_andnot_si256(exp_mask, bits), bias);
  return _mm256_castsi256_pd(bits);
}

}  // namespace

STEKLOV_AVX2 void trig_sum_grid(const TrigSumArgs& a) {
  const std::size_t vec_count = a.count & ~std::size_t{3};
  for (std::size_t b = 0; b < vec_count; b += kTrigBlock) {
    const std::size_t end = b + kTrigBlock < vec_count ? b + kTrigBlock : vec_count;
    const __m256d c0 = _mm256_set1_pd(-a.const_term);
    for (std::size_t i = b; i < end; i += 4) {
      _mm256_storeu_pd(a.value + i, c0);
      _mm256_storeu_pd(a.deriv + i, _mm256_setzero_pd());
    }
    for (std::size_t k = 0; k < a.terms; ++k) {
      const double t = a.freqs[k];
      alignas(32) double r[4], im[4];
      for (int l = 0; l < 4; ++l) {
        const double x = t * (a.s0 + static_cast<double>(b + l) * a.h);
        r[l] = std::cos(x);
        im[l] = std::sin(x);
      }
      __m256d pr = _mm256_load_pd(r), pi = _mm256_load_pd(im);
      const double step = 4.0 * t * a.h;
      const __m256d rr = _mm256_set1_pd(std::cos(step));
      const __m256d ri = _mm256_set1_pd(std::sin(step));
      const __m256d amp = _mm256_set1_pd(a.amps[k]);
      const __m256d damp = _mm256_set1_pd(-a.amps[k] * t);
      for (std::size_t i = b; i < end; i += 4) {
        _mm256_storeu_pd(a.value + i, _mm256_fmadd_pd(amp, pr, _mm256_loadu_pd(a.value + i)));
        _mm256_storeu_pd(a.deriv + i, _mm256_fmadd_pd(damp, pi, _mm256_loadu_pd(a.deriv + i)));
        rotate(pr, pi, rr, ri);
      }
    }
  }
  if (vec_count < a.count) {
    TrigSumArgs tail = a;
    tail.s0 = a.s0 + static_cast<double>(vec_count) * a.h;
    tail.count = a.count - vec_count;
    tail.value = a.value + vec_count;
    tail.deriv = a.deriv + vec_count;
    scalar::trig_sum_grid(tail);
  }
}

STEKLOV_AVX2 void log_product(const LogProductArgs& a) {
  const std::size_t vec_count = a.count & ~std::size_t{3};
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  for (std::size_t i = 0; i < vec_count; i += 4) {
    const __m256d s = _mm256_loadu_pd(a.s + i);
    __m256d acc = one;
    __m256d hit_zero = zero;
    __m256i exponent = _mm256_setzero_si256();
    for (std::size_t m = 0; m < a.factors; ++m) {
      // Same operation order as the scalar path so each factor rounds identically.
      const __m256d r = _mm256_set1_pd(a.roots[m]);
      const __m256d f =
          _mm256_mul_pd(_mm256_mul_pd(_mm256_sub_pd(r, s), _mm256_add_pd(r, s)), _mm256_set1_pd(a.inv_sq[m]));
      acc = _mm256_mul_pd(acc, f);
      if ((m + 1) % kRenormEvery == 0) {
        hit_zero = _mm256_or_pd(hit_zero, _mm256_cmp_pd(acc, zero, _CMP_EQ_OQ));
        acc = renormalize(acc, exponent);
      }
    }
    hit_zero = _mm256_or_pd(hit_zero, _mm256_cmp_pd(acc, zero, _CMP_EQ_OQ));
    acc = renormalize(acc, exponent);

    alignas(32) double mant[4], zmask[4];
    alignas(32) std::int64_t ex[4];
    _mm256_store_pd(mant, acc);
    _mm256_store_pd(zmask, hit_zero);
    _mm256_store_si256(reinterpret_cast<__m256i*>(ex), exponent);
    for (int l = 0; l < 4; ++l) {
      std::uint64_t zbits;
      std::memcpy(&zbits, &zmask[l], sizeof zbits);
      if (zbits != 0) {
        a.log_abs[i + l] = -std::numeric_limits<double>::infinity();
        a.sign[i + l] = 0.0;
      } else {
        a.log_abs[i + l] = std::log(std::abs(mant[l])) + static_cast<double>(ex[l]) * std::log(2.0);
        a.sign[i + l] = mant[l] < 0.0 ? -1.0 : 1.0;
      }
    }
  }
  if (vec_count < a.count) {
    LogProductArgs tail = a;
    tail.s = a.s + vec_count;
    tail.count = a.count - vec_count;
    tail.log_abs = a.log_abs + vec_count;
    tail.sign = a.sign + vec_count;
    scalar::log_product(tail);
  }
}

STEKLOV_AVX2 void exp_transform(const ExpTransformArgs& a) {
  const std::size_t vec_count = a.count & ~std::size_t{3};
  for (std::size_t j = 0; j < vec_count; j += 4) {
    const __m256d z = _mm256_loadu_pd(a.z + j);
    alignas(32) double zl[4];
    _mm256_store_pd(zl, z);
    alignas(32) double rot_r[4], rot_i[4];
    for (int l = 0; l < 4; ++l) {
      rot_r[l] = std::cos(zl[l] * a.ds);
      rot_i[l] = -std::sin(zl[l] * a.ds);
    }
    const __m256d rr = _mm256_load_pd(rot_r), ri = _mm256_load_pd(rot_i);
    __m256d re = _mm256_setzero_pd(), im = _mm256_setzero_pd();
    for (std::size_t b = 0; b < a.samples; b += kExpBlock) {
      const std::size_t end = b + kExpBlock < a.samples ? b + kExpBlock : a.samples;
      alignas(32) double r0[4], i0[4];
      for (int l = 0; l < 4; ++l) {
        const double x = zl[l] * (static_cast<double>(b) * a.ds);
        r0[l] = std::cos(x);
        i0[l] = -std::sin(x);
      }
      __m256d pr = _mm256_load_pd(r0), pi = _mm256_load_pd(i0);
      for (std::size_t i = b; i < end; ++i) {
        const __m256d q = _mm256_set1_pd(a.q[i]);
        re = _mm256_fmadd_pd(q, pr, re);
        im = _mm256_fmadd_pd(q, pi, im);
        rotate(pr, pi, rr, ri);
      }
    }
    _mm256_storeu_pd(a.re + j, re);
    _mm256_storeu_pd(a.im + j, im);
  }
  if (vec_count < a.count) {
    ExpTransformArgs tail = a;
    tail.z = a.z + vec_count;
    tail.count = a.count - vec_count;
    tail.re = a.re + vec_count;
    tail.im = a.im + vec_count;
    scalar::exp_transform(tail);
  }
}

}  // namespace steklov::kernels::avx2
