#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "steklov/charpoly.hpp"
#include "steklov/kernels.hpp"
#include "steklov/random_spec.hpp"
#include "steklov/reconstruct.hpp"
#include "steklov/spectra.hpp"
#include "support.hpp"

using namespace steklov;
using namespace steklov::kernels;

namespace {

struct IsaGuard {
  explicit IsaGuard(Isa isa) { force_isa(isa); }
  ~IsaGuard() { force_isa(std::nullopt); }
};

}  // namespace

TEST_CASE("trig sum: scalar matches the definition and AVX2 matches scalar") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t terms = 1 + rng() % 40;
    std::vector<double> f(terms), a(terms);
    double scale = 0.0;
    for (std::size_t k = 0; k < terms; ++k) {
      f[k] = support::uniform(rng, 0.1, 20.0);
      a[k] = support::uniform(rng, -1.0, 1.0);
      scale += std::abs(a[k]) * (1.0 + f[k]);
    }
    const std::size_t count = 1 + rng() % 3000;
    const double s0 = support::uniform(rng, 0.0, 500.0), h = support::uniform(rng, 1e-3, 0.05);
    std::vector<double> v1(count), d1(count), v2(count), d2(count);
    TrigSumArgs args{f.data(), a.data(), terms, 0.3, s0, h, count, v1.data(), d1.data()};
    scalar::trig_sum_grid(args);
    for (std::size_t i = 0; i < count; i += 97) {
      const double s = s0 + h * static_cast<double>(i);
      double v = -0.3, d = 0.0;
      for (std::size_t k = 0; k < terms; ++k) {
        v += a[k] * std::cos(f[k] * s);
        d -= a[k] * f[k] * std::sin(f[k] * s);
      }
      REQUIRE(std::abs(v1[i] - v) <= 1e-11 * scale);
      REQUIRE(std::abs(d1[i] - d) <= 1e-11 * scale);
    }
    if (!cpu_has_avx2()) continue;
    args.value = v2.data();
    args.deriv = d2.data();
    avx2::trig_sum_grid(args);
    for (std::size_t i = 0; i < count; ++i) {
      REQUIRE(std::abs(v1[i] - v2[i]) <= 1e-11 * scale);
      REQUIRE(std::abs(d1[i] - d2[i]) <= 1e-11 * scale);
    }
  }
}

TEST_CASE("log product: scalar matches plain products and AVX2 matches scalar") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t factors = 1 + rng() % 3000;
    std::vector<double> roots(factors), inv(factors);
    double x = 0.0;
    for (std::size_t m = 0; m < factors; ++m) {
      x += support::uniform(rng, 0.2, 1.5);
      roots[m] = x;
      inv[m] = 1.0 / (x * x);
    }
    const std::size_t count = 1 + rng() % 700;
    std::vector<double> s(count);
    for (auto& v : s) v = support::uniform(rng, 0.0, roots.back() / 4.0);
    s[0] = roots[0];  // exact root
    std::vector<double> la1(count), sg1(count), la2(count), sg2(count);
    LogProductArgs args{inv.data(), roots.data(), factors, 0.05, s.data(), count, la1.data(), sg1.data()};
    scalar::log_product(args);
    CHECK(sg1[0] == 0.0);
    for (std::size_t i = 1; i < count; i += 13) {
      long double p = 1.0L;
      for (double r : roots) p *= 1.0L - static_cast<long double>(s[i]) * s[i] / (static_cast<long double>(r) * r);
      if (p == 0.0L) continue;
      REQUIRE(sg1[i] == (p > 0 ? 1.0 : -1.0));
      REQUIRE(std::abs(la1[i] - static_cast<double>(std::log(std::abs(p)))) <= 1e-9 * (1.0 + std::abs(la1[i])));
    }
    if (!cpu_has_avx2()) continue;
    args.log_abs = la2.data();
    args.sign = sg2.data();
    avx2::log_product(args);
    for (std::size_t i = 0; i < count; ++i) {
      REQUIRE(sg1[i] == sg2[i]);
      if (sg1[i] != 0.0) REQUIRE(std::abs(la1[i] - la2[i]) <= 1e-10 * (1.0 + std::abs(la1[i])));
    }
  }
}

TEST_CASE("exp transform: scalar matches the definition and AVX2 matches scalar") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t samples = 2 + rng() % 20000;
    std::vector<double> q(samples);
    double scale = 0.0;
    for (auto& v : q) {
      v = support::uniform(rng, -1.0, 1.0);
      scale += std::abs(v);
    }
    const double ds = support::uniform(rng, 1e-3, 0.1);
    const std::size_t count = 1 + rng() % 50;
    std::vector<double> z(count);
    for (auto& v : z) v = support::uniform(rng, 0.0, 10.0);
    std::vector<double> re1(count), im1(count), re2(count), im2(count);
    ExpTransformArgs args{q.data(), samples, ds, z.data(), count, re1.data(), im1.data()};
    scalar::exp_transform(args);
    for (std::size_t j = 0; j < count; ++j) {
      long double re = 0.0L, im = 0.0L;
      for (std::size_t i = 0; i < samples; ++i) {
        const long double arg = static_cast<long double>(z[j]) * ds * static_cast<long double>(i);
        re += q[i] * std::cos(arg);
        im -= q[i] * std::sin(arg);
      }
      REQUIRE(std::abs(re1[j] - static_cast<double>(re)) <= 1e-12 * scale);
      REQUIRE(std::abs(im1[j] - static_cast<double>(im)) <= 1e-12 * scale);
    }
    if (!cpu_has_avx2()) continue;
    args.re = re2.data();
    args.im = im2.data();
    avx2::exp_transform(args);
    for (std::size_t j = 0; j < count; ++j) {
      REQUIRE(std::abs(re1[j] - re2[j]) <= 1e-12 * scale);
      REQUIRE(std::abs(im1[j] - im2[j]) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("dispatch honours the forced ISA") {
  {
    IsaGuard g(Isa::Scalar);
    CHECK(active_isa() == Isa::Scalar);
  }
  if (cpu_has_avx2()) {
    IsaGuard g(Isa::Avx2);
    CHECK(active_isa() == Isa::Avx2);
  }
  CHECK(isa_name(Isa::Scalar) == "scalar");
}

TEST_CASE("pipeline results do not depend on the ISA") {
  if (!cpu_has_avx2()) return;
  auto spec = random_admissible_spec(4, 21);
  auto F = build_char_poly(spec);
  const double sigma_max = 4000.5 * std::numbers::pi / spec.perimeter();
  QuasiSpectrum a, b;
  CharPoly ra, rb;
  {
    IsaGuard g(Isa::Scalar);
    a = find_quasi_eigenvalues(F, sigma_max);
    ra = recover_charpoly(a.values);
  }
  {
    IsaGuard g(Isa::Avx2);
    b = find_quasi_eigenvalues(F, sigma_max);
    rb = recover_charpoly(b.values);
  }
  REQUIRE(a.values.size() == b.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) REQUIRE(std::abs(a.values[i] - b.values[i]) <= 1e-10);
  CHECK(charpoly_close(ra, rb, 1e-8));
}
