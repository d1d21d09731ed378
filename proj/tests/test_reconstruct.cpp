#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "steklov/charpoly.hpp"
#include "steklov/error.hpp"
#include "steklov/json_io.hpp"
#include "steklov/random_spec.hpp"
#include "steklov/reconstruct.hpp"
#include "support.hpp"

using namespace steklov;
using std::numbers::pi;

namespace {

// Exact roots (2m - 1) pi / 2 of cos(sigma), m = 1..count.
std::vector<double> cos_roots(std::size_t count) {
  std::vector<double> r(count);
  for (std::size_t m = 0; m < count; ++m) r[m] = (2.0 * static_cast<double>(m) + 1.0) * pi / 2.0;
  return r;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("product evaluator basics") {
  const auto roots = cos_roots(400);
  ProductEvaluator P(roots);
  double sign = 0.0;
  CHECK(P.log_abs(0.0, &sign) == doctest::Approx(0.0));
  CHECK(sign == 1.0);
  CHECK(eval_product(P, roots[0]) == 0.0);
  CHECK(P.perimeter() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(P.window() == doctest::Approx(roots.back() / 4.0));
  CHECK(code_of([&] { eval_product(P, P.window() * 1.01); }) == ErrorCode::WindowExceeded);

  // Truncated product against plain multiplication, no tail factor.
  ProductOpts plain;
  plain.tail_model = false;
  ProductEvaluator Q(roots, plain);
  std::mt19937_64 rng(4);
  std::vector<double> s(200);
  for (auto& x : s) x = support::uniform(rng, 0.0, Q.window());
  auto batch = Q.values_at(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double want = static_cast<double>(oracle::plain_product(roots, s[i]));
    CHECK(eval_product(Q, s[i]) == doctest::Approx(want).epsilon(1e-10));
    CHECK(batch[i] == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("truncated product reproduces cosine ratios") {
  ProductEvaluator P(cos_roots(130));  // roots up to about 200
  const double ratio = eval_product(P, 1.0) / eval_product(P, 2.0);
  CHECK(std::abs(ratio - std::cos(1.0) / std::cos(2.0)) <= 1e-3 * std::abs(std::cos(1.0) / std::cos(2.0)));
}

TEST_CASE("zero entries contribute sigma^2 factors") {
  auto roots = cos_roots(200);
  std::vector<double> with_zero = roots;
  with_zero.insert(with_zero.begin(), 0.0);
  ProductOpts o;
  o.tail_model = false;
  ProductEvaluator P(roots, o), Z(with_zero, o);
  CHECK(Z.zero_count() == 1);
  for (double s : {0.3, 1.7, 9.0})
    CHECK(eval_product(Z, s) == doctest::Approx(s * s * eval_product(P, s)).epsilon(1e-12));
}

TEST_CASE("perimeter estimate") {
  CHECK(perimeter_estimate(cos_roots(1000)) == doctest::Approx(1.0).epsilon(1e-12));
  std::vector<double> scaled = cos_roots(1000);
  for (auto& x : scaled) x /= 3.0;
  CHECK(perimeter_estimate(scaled) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(code_of([] { perimeter_estimate(std::vector<double>{1.0}); }) == ErrorCode::InsufficientSpectrum);
}

TEST_CASE("normalising constant") {
  QuasiSpectrum S;
  S.values = cos_roots(10000);
  PerturbedSpectrum same;
  same.values = S.values;
  CHECK(compute_C0(S, same, 10000).value == doctest::Approx(1.0).epsilon(1e-14));

  QuasiSpectrum S2;
  S2.values = cos_roots(20000);
  PerturbedSpectrum P;
  P.values.resize(S2.values.size());
  std::mt19937_64 rng(6);
  for (std::size_t m = 0; m < P.values.size(); ++m)
    P.values[m] = S2.values[m] + 0.1 * (2.0 * support::uniform(rng, 0.0, 1.0) - 1.0) * std::pow(m + 1.0, -1.5);
  auto c = compute_C0(S2, P, 10000);
  CHECK(std::isfinite(c.value));
  CHECK(c.tail_bound < 1e-3);
  // Independent: the full partial product in long double.
  long double lc = 0.0L;
  for (std::size_t m = 0; m < 10000; ++m) lc += 2.0L * (std::log((long double)S2.values[m]) - std::log((long double)P.values[m]));
  CHECK(c.value == doctest::Approx(static_cast<double>(std::exp(lc))).epsilon(1e-10));

  // One extra zero in Lambda: C0 = -sigma_1^2 times the shifted partial product.
  PerturbedSpectrum Z;
  Z.values = S.values;
  Z.values[0] = 0.0;
  Z.zero_count = 1;
  CHECK(compute_C0(S, Z, 10000).value == doctest::Approx(-S.values[0] * S.values[0]).epsilon(1e-12));
  // Divergent ratios trip the tail check.
  PerturbedSpectrum far;
  far.values = S.values;
  for (auto& x : far.values) x *= 1.001;
  CHECK(code_of([&] { compute_C0(S, far, 10000); }) == ErrorCode::DivergenceSuspected);
}

TEST_CASE("mean transform against direct sums") {
  std::mt19937_64 rng(8);
  const double ds = 0.01;
  std::vector<double> q(5001);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double s = ds * static_cast<double>(i);
    q[i] = 0.7 + std::cos(3.0 * s) - 0.4 * std::cos(5.5 * s) + 0.1 * support::uniform(rng, -1.0, 1.0);
  }
  std::vector<double> z = {0.0, 1.0, 3.0, 4.2, 5.5};
  auto A = mean_transform_samples(q, ds, z);
  CHECK(A.T == doctest::Approx(50.0));
  for (std::size_t j = 0; j < z.size(); ++j) {
    auto want = oracle::mean_transform(q, ds, z[j]);
    CHECK(std::abs(A.values[j] - want) <= 1e-12);
  }
  CHECK(A.values[0].real() == doctest::Approx(0.7).epsilon(0.01));

  // Isolation of a pure cosine, and linearity.
  std::vector<double> c(100001), k(100001), mix(100001);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double s = ds * static_cast<double>(i);
    c[i] = std::cos(2.0 * s);
    k[i] = 0.3;
    mix[i] = 2.0 * c[i] - 5.0 * k[i];
  }
  auto Ac = mean_transform_samples(c, ds, std::vector<double>{2.0, 7.0}, Taper::BlackmanHarris);
  CHECK(std::abs(Ac.values[0] - 0.5) <= 1e-3);
  CHECK(std::abs(Ac.values[1]) <= 1e-3);
  auto Ak = mean_transform_samples(k, ds, std::vector<double>{0.0, 2.0}, Taper::BlackmanHarris);
  CHECK(Ak.values[0].real() == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(std::abs(Ak.values[1]) <= 1e-6);
  const std::vector<double> zz = {0.0, 0.5, 2.0, 3.3};
  auto Am = mean_transform_samples(mix, ds, zz, Taper::BlackmanHarris);
  auto A1 = mean_transform_samples(c, ds, zz, Taper::BlackmanHarris);
  auto A2 = mean_transform_samples(k, ds, zz, Taper::BlackmanHarris);
  for (std::size_t j = 0; j < zz.size(); ++j) CHECK(std::abs(Am.values[j] - (2.0 * A1.values[j] - 5.0 * A2.values[j])) <= 1e-12);
}

TEST_CASE("recovery from the exact roots of cos(sigma)") {
  const auto roots = cos_roots(256);  // up to about 400
  auto rep = recover_charpoly_detailed(roots);
  REQUIRE(rep.poly.size() == 1);
  CHECK(std::abs(rep.poly.freqs[0] - 1.0) <= rep.resolution);
  CHECK(std::abs(rep.poly.amps[0] - 1.0) <= 0.05);
  CHECK(std::abs(rep.poly.const_term) <= 0.05);

  QuasiSpectrum S;
  S.values = cos_roots(4000);
  auto P = perturb_spectrum(S, 0.2, 1.0, 3);
  auto rp = recover_charpoly(P.values);
  REQUIRE(rp.size() == 1);
  CHECK(std::abs(rp.amps[0] - 1.0) <= 0.04);
  CHECK(std::abs(rp.const_term) <= 0.04);
}

TEST_CASE("recovery roundtrip for random specs") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t n = 1 + seed % 4;
    auto spec = random_admissible_spec(n, seed + 100);
    auto F = build_char_poly(spec);
    auto S = find_quasi_eigenvalues(F, 2000.5 * pi / spec.perimeter());
    auto rep = recover_charpoly_detailed(S.values);
    REQUIRE(rep.poly.size() == F.size());
    for (std::size_t k = 0; k < F.size(); ++k) {
      CHECK(std::abs(rep.poly.freqs[k] - F.freqs[k]) <= rep.resolution);
      CHECK(std::abs(rep.poly.amps[k] - F.amps[k]) <= 0.02);
    }
    CHECK(std::abs(rep.poly.const_term - F.const_term) <= 0.02);
    CHECK(rep.perimeter_estimate == doctest::Approx(spec.perimeter()).epsilon(1e-3));

  }
}

TEST_CASE("doubling the averaging length moves frequencies by less than one coarse cell") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto spec = random_admissible_spec(1 + seed % 3, seed + 200);
    auto F = build_char_poly(spec);
    auto S = find_quasi_eigenvalues(F, 4000.5 * pi / spec.perimeter());
    auto fine = recover_charpoly_detailed(S.values);
    RecoveryOpts half;
    half.T = fine.T / 2.0;
    half.dz = fine.dz;
    auto coarse = recover_charpoly_detailed(S.values, half);
    REQUIRE(coarse.poly.size() == fine.poly.size());
    for (std::size_t k = 0; k < F.size(); ++k)
      CHECK(std::abs(coarse.poly.freqs[k] - fine.poly.freqs[k]) < coarse.resolution);
  }
}

TEST_CASE("recovery refusals") {
  CHECK(code_of([] { recover_charpoly(cos_roots(10)); }) == ErrorCode::InsufficientSpectrum);
  RecoveryOpts bad;
  bad.theta = 1.5;
  CHECK(code_of([&] { recover_charpoly(cos_roots(400), bad); }) == ErrorCode::InvalidInput);

  // Three frequencies: not a power of two.
  auto ex35 = support::corpus("ex3.5-commensurable");
  auto F = build_char_poly(io::polygon_from_json(ex35.at("specs")[0]));
  auto S = find_quasi_eigenvalues(F, 2000.0 * pi / 5.0);
  CHECK(code_of([&] { recover_charpoly(S.values); }) == ErrorCode::FrequencyCountNotPow2);

  // Quadratic growth is not a Weyl-type counting function.
  std::vector<double> quad(500);
  for (std::size_t m = 0; m < quad.size(); ++m) quad[m] = std::sqrt(static_cast<double>(m + 1));
  CHECK(code_of([&] { recover_charpoly(quad); }) == ErrorCode::NotAsymptoticallyLinear);

  ProductEvaluator P(cos_roots(400));
  CHECK(code_of([&] { mean_transform(P, 0.0, 2.0, 1e-4, P.window()); }) == ErrorCode::ResolutionTooCoarse);
  CHECK(code_of([&] { mean_transform(P, 0.0, 2.0, 0.01, 2.0 * P.window()); }) == ErrorCode::WindowExceeded);
}
