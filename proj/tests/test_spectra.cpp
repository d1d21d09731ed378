#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "steklov/charpoly.hpp"
#include "steklov/error.hpp"
#include "steklov/json_io.hpp"
#include "steklov/random_spec.hpp"
#include "steklov/spectra.hpp"
#include "support.hpp"

using namespace steklov;
using std::numbers::pi;

namespace {

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

TEST_CASE("roots of cos(sigma)") {
  auto S = find_quasi_eigenvalues(CharPoly{{1.0}, {1.0}, 0.0}, 10.0);
  CHECK(S.zero_half_mult == 0);
  REQUIRE(S.values.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(S.values[k] == doctest::Approx((2 * k + 1) * pi / 2).epsilon(1e-14));
}

TEST_CASE("roots of cos(2 sigma) - 1/sqrt 2") {
  auto S = find_quasi_eigenvalues(CharPoly{{2.0}, {1.0}, 1.0 / std::numbers::sqrt2}, pi);
  REQUIRE(S.values.size() == 2);
  CHECK(S.values[0] == doctest::Approx(pi / 8).epsilon(1e-14));
  CHECK(S.values[1] == doctest::Approx(7 * pi / 8).epsilon(1e-14));
}

TEST_CASE("double roots and zero multiplicity") {
  // cos(sigma) + 1 touches zero at odd multiples of pi.
  auto S = find_quasi_eigenvalues(CharPoly{{1.0}, {1.0}, -1.0}, 20.0);
  REQUIRE(S.values.size() == 6);
  for (int k = 0; k < 3; ++k) {
    CHECK(S.values[2 * k] == doctest::Approx((2 * k + 1) * pi).epsilon(1e-7));
    CHECK(S.values[2 * k + 1] == S.values[2 * k]);
  }
  // cos(sigma) - 1: half multiplicity 1 at 0, double roots at 2 pi k.
  auto Z = find_quasi_eigenvalues(CharPoly{{1.0}, {1.0}, 1.0}, 13.0);
  CHECK(Z.zero_half_mult == 1);
  REQUIRE(Z.values.size() == 5);
  CHECK(Z.values[0] == 0.0);
  CHECK(Z.values[1] == doctest::Approx(2 * pi).epsilon(1e-7));
  CHECK(Z.values[4] == doctest::Approx(4 * pi).epsilon(1e-7));
  // 4 cos(sigma) - cos(2 sigma) - 3 = -sigma^4 / 2 + ...
  CHECK(zero_half_multiplicity(CharPoly{{1.0, 2.0}, {4.0, -1.0}, 3.0}) == 2);
  CHECK(zero_half_multiplicity(CharPoly{{1.0}, {1.0}, 0.0}) == 0);
}

TEST_CASE("fourfold root is refused") {
  // (cos sigma + 1)^2 = 2 cos sigma + cos(2 sigma) / 2 + 3 / 2.
  CharPoly F{{1.0, 2.0}, {2.0, 0.5}, -1.5};
  CHECK(code_of([&] { find_quasi_eigenvalues(F, 5.0); }) == ErrorCode::MultiplicityOverflow);
}

TEST_CASE("input validation") {
  CHECK(code_of([] { find_quasi_eigenvalues(CharPoly{}, 5.0); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { find_quasi_eigenvalues(CharPoly{{1.0}, {1.0}, 0.0}, -1.0); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { weyl_check(std::vector<double>{}, 1.0); }) == ErrorCode::EmptyWindow);
}

TEST_CASE("roots agree with a bisection scan and have small residuals") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t n = 1 + seed % 5;
    auto spec = random_admissible_spec(n, seed);
    auto F = build_char_poly(spec);
    const double sigma_max = 60.0;
    auto S = find_quasi_eigenvalues(F, sigma_max);
    const double scale = F.abs_sum();
    for (double x : S.values) REQUIRE(std::abs(eval_char_poly(F, x)) <= 1e-9 * scale);
    auto ref = oracle::bisect_roots([&](double s) { return oracle::direct_F(spec, s); }, 0.0, sigma_max, 400000);
    // Random specs have simple roots only, so the plain scan sees them all.
    REQUIRE(ref.size() == S.values.size());
    for (std::size_t i = 0; i < ref.size(); ++i) REQUIRE(std::abs(ref[i] - S.values[i]) <= 1e-10);
  }
}

TEST_CASE("grid independence") {
  auto F = build_char_poly(random_admissible_spec(4, 8));
  RootOpts fine;
  fine.oversample = 16;
  auto a = find_quasi_eigenvalues(F, 300.0);
  auto b = find_quasi_eigenvalues(F, 300.0, fine);
  REQUIRE(a.values.size() == b.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) REQUIRE(std::abs(a.values[i] - b.values[i]) <= 1e-10);
}

TEST_CASE("Weyl counting") {
  auto cosS = find_quasi_eigenvalues(CharPoly{{1.0}, {1.0}, 0.0}, 200.0);
  auto w = weyl_check(cosS, 1.0);
  CHECK(w.max_unit_count == 1);
  CHECK(w.max_deviation <= 1.0);

  auto spec = PolygonSpec::from_cosines({0.5, -2.0 / 3.0, 0.25, 0.2},
                                        {std::numbers::e, pi, 1.0 + std::numbers::sqrt2, std::numbers::sqrt2 - 1.0});
  auto F = build_char_poly(spec);
  const double L = spec.perimeter();
  auto S50 = find_quasi_eigenvalues(F, 50.0);
  CHECK(weyl_check(S50, L).max_deviation <= 8.0);
  // No drift as the window doubles.
  double prev = weyl_check(S50, L).max_deviation;
  for (double sm : {100.0, 200.0, 400.0}) {
    auto S = find_quasi_eigenvalues(F, sm);
    const double dev = weyl_check(S, L).max_deviation;
    CHECK(dev <= prev + 1.0);
    prev = dev;
  }
}

TEST_CASE("triangle pair spectra coincide") {
  auto entry = support::corpus("ex3.4-triangles");
  auto a = find_quasi_eigenvalues(build_char_poly(io::polygon_from_json(entry.at("specs")[0])), 100.0);
  auto b = find_quasi_eigenvalues(build_char_poly(io::polygon_from_json(entry.at("specs")[1])), 100.0);
  REQUIRE(a.values.size() == b.values.size());
  CHECK(a.values.size() > 10);
  for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(std::abs(a.values[i] - b.values[i]) <= 1e-9);
}

TEST_CASE("perturbation") {
  auto S = find_quasi_eigenvalues(build_char_poly(random_admissible_spec(3, 4)), 200.0);
  auto same = perturb_spectrum(S, 0.0, 1.0, 7);
  CHECK(same.values == S.values);
  auto P = perturb_spectrum(S, 0.1, 1.0, 7);
  REQUIRE(P.values.size() == S.values.size());
  for (std::size_t m = 0; m < S.values.size(); ++m)
    CHECK(std::abs(P.values[m] - S.values[m]) <= 0.1 / static_cast<double>(m + 1) + 1e-15);
  CHECK(std::is_sorted(P.values.begin(), P.values.end()));
  auto Q = perturb_spectrum(S, 0.1, 1.0, 7);
  CHECK(Q.values == P.values);
  auto R = perturb_spectrum(S, 0.1, 1.0, 8);
  CHECK(R.values != P.values);
  PerturbOpts z;
  z.force_zero_first = true;
  auto Z = perturb_spectrum(S, 0.1, 1.0, 7, z);
  CHECK(Z.values.front() == 0.0);
  CHECK(Z.zero_count == 1);
  CHECK(code_of([&] { perturb_spectrum(S, -1.0, 1.0, 1); }) == ErrorCode::InvalidInput);
}
