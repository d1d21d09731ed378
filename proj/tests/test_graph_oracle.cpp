#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "steklov/charpoly.hpp"
#include "steklov/error.hpp"
#include "steklov/graph_oracle.hpp"
#include "steklov/random_spec.hpp"

using namespace steklov;
using std::numbers::pi;

namespace {

PolygonSpec ex31() {
  return PolygonSpec::from_cosines({0.5, -2.0 / 3.0, 0.25, 0.2},
                                   {std::numbers::e, pi, 1.0 + std::numbers::sqrt2, std::numbers::sqrt2 - 1.0});
}

void check_agreement(const PolygonSpec& spec, double sigma_max) {
  auto A = find_quasi_eigenvalues(build_char_poly(spec), sigma_max);
  auto B = graph_eigenvalues(make_circle_graph(spec), sigma_max);
  CHECK(A.zero_half_mult == B.zero_half_mult);
  REQUIRE(A.values.size() == B.values.size());
  for (std::size_t i = 0; i < A.values.size(); ++i) REQUIRE(std::abs(A.values[i] - B.values[i]) <= 1e-8);
}

}  // namespace

TEST_CASE("exceptional vertices are excluded") {
  try {
    make_circle_graph(PolygonSpec::from_angles({pi / 2}, {1.0}));
    FAIL("expected ExceptionalAngle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ExceptionalAngle);
  }
}

TEST_CASE("secular function vanishes exactly where F does") {
  auto spec = ex31();
  auto G = make_circle_graph(spec);
  auto S = find_quasi_eigenvalues(build_char_poly(spec), 30.0);
  double scale = 0.0;
  for (double s = 0.0; s <= 30.0; s += 0.01) scale = std::max(scale, std::abs(secular_value(G, s)));
  CHECK(std::isfinite(scale));
  CHECK(scale <= 10.0);  // bounded: no poles
  for (double x : S.values) CHECK(std::abs(secular_value(G, x)) <= 1e-9 * scale);
}

TEST_CASE("jets and complex evaluation are consistent") {
  auto G = make_circle_graph(random_admissible_spec(3, 2));
  for (double s : {0.4, 2.0, 11.3}) {
    const auto j = secular_jet(G, s);
    CHECK(j.value == doctest::Approx(secular_value(G, s)).epsilon(1e-14));
    // Complex step gives the first derivative independently of the jet arithmetic.
    const double h = 1e-20;
    CHECK(j.deriv == doctest::Approx(secular_value(G, std::complex<double>(s, h)).imag() / h).epsilon(1e-12));
    const double e = 1e-4;
    const double d2 = (secular_value(G, s + e) - 2 * secular_value(G, s) + secular_value(G, s - e)) / (e * e);
    CHECK(j.second == doctest::Approx(d2).epsilon(1e-5));
    CHECK(secular_value(G, std::complex<double>(s, 0.0)).real() == doctest::Approx(j.value).epsilon(1e-14));
  }
}

TEST_CASE("graph spectrum matches the polynomial roots") {
  check_agreement(ex31(), 30.0);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) check_agreement(random_admissible_spec(1 + seed % 4, seed), 30.0);
}

TEST_CASE("zero multiplicity agrees") {
  // Equal-sided two-gon with phases summing to pi: F = cos(2 sigma) - 1 has a double zero at 0.
  auto spec = PolygonSpec::from_cosines({0.6, -0.6}, {0.8, 0.8}, {1.0, 1.0});
  auto F = build_char_poly(spec);
  CHECK(zero_half_multiplicity(F) == 1);
  CHECK(graph_zero_half_multiplicity(make_circle_graph(spec)) == 1);
  check_agreement(spec, 20.0);
}
