#include "steklov/graph_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>

#include "steklov/error.hpp"

namespace steklov {
namespace {

// Second-order forward-mode jet.
struct Jet {
  double v = 0.0, d = 0.0, dd = 0.0;
};
Jet operator+(Jet a, Jet b) { return {a.v + b.v, a.d + b.d, a.dd + b.dd}; }
Jet operator-(Jet a, Jet b) { return {a.v - b.v, a.d - b.d, a.dd - b.dd}; }
Jet operator*(Jet a, Jet b) { return {a.v * b.v, a.d * b.v + a.v * b.d, a.dd * b.v + 2.0 * a.d * b.d + a.v * b.dd}; }
Jet operator*(double c, Jet a) { return {c * a.v, c * a.d, c * a.dd}; }
Jet cos(Jet a) {
  const double c = std::cos(a.v), s = std::sin(a.v);
  return {c, -s * a.d, -c * a.d * a.d - s * a.dd};
}
Jet sin(Jet a) {
  const double c = std::cos(a.v), s = std::sin(a.v);
  return {s, c * a.d, -s * a.d * a.d + c * a.dd};
}
template <class T>
T lift(double x) {
  if constexpr (std::is_same_v<T, Jet>) return Jet{x, 0.0, 0.0};
  else return T(x);
}

template <class T>
T secular(const CircleGraph& G, T sigma) {
  using std::cos;
  using std::sin;
  using Mat = std::array<T, 4>;  // row-major 2x2
  Mat M{lift<T>(1.0), lift<T>(0.0), lift<T>(0.0), lift<T>(1.0)};
  double pole_free = 2.0;
  for (std::size_t j = 0; j < G.lengths.size(); ++j) {
    const T th = G.lengths[j] * sigma;
    const T c = cos(th), s = sin(th);
    // R = [[c, s], [-s, c]]; then D = diag(sin^2 beta, cos^2 beta).
    const Mat R{c, s, lift<T>(0.0) - s, c};
    const Mat P{R[0] * M[0] + R[1] * M[2], R[0] * M[1] + R[1] * M[3], R[2] * M[0] + R[3] * M[2],
                R[2] * M[1] + R[3] * M[3]};
    const double sb = std::sin(G.betas[j]), cb = std::cos(G.betas[j]);
    M = {sb * sb * P[0], sb * sb * P[1], cb * cb * P[2], cb * cb * P[3]};
    pole_free *= sb * cb;
  }
  return lift<T>(pole_free) - (M[0] + M[3]);
}

}  // namespace

CircleGraph make_circle_graph(const PolygonSpec& spec, double guard) {
  CircleGraph G;
  G.lengths = spec.lengths();
  for (std::size_t j = 0; j < spec.size(); ++j) {
    const double beta = spec.phase(j) / 2.0;
    if (std::abs(std::sin(beta) * std::cos(beta)) < guard)
      fail(ErrorCode::ExceptionalAngle, "vertex " + std::to_string(j + 1) + " is exceptional; graph oracle excluded");
    G.betas.push_back(beta);
  }
  return G;
}

double secular_value(const CircleGraph& G, double sigma) { return secular(G, sigma); }

std::complex<double> secular_value(const CircleGraph& G, std::complex<double> sigma) { return secular(G, sigma); }

SecularJet secular_jet(const CircleGraph& G, double sigma) {
  const Jet j = secular(G, Jet{sigma, 1.0, 0.0});
  return {j.v, j.d, j.dd};
}

int graph_zero_half_multiplicity(const CircleGraph& G, double touch_rel) {
  double L = 0.0;
  for (double l : G.lengths) L += l;
  constexpr int N = 64;
  const double r = 1.0 / L;
  std::array<std::complex<double>, N> g;
  double scale = 0.0;
  for (int k = 0; k < N; ++k) {
    g[k] = secular_value(G, std::polar(r, 2.0 * std::numbers::pi * k / N));
    scale = std::max(scale, std::abs(g[k]));
  }
  for (int j = 0; 2 * j < N / 2; ++j) {
    // Taylor coefficient a_{2j} times r^{2j}.
    std::complex<double> a = 0.0;
    for (int k = 0; k < N; ++k) a += g[k] * std::polar(1.0, -2.0 * std::numbers::pi * (2 * j) * k / N);
    if (std::abs(a) / N > touch_rel * scale) return j;
  }
  fail(ErrorCode::MultiplicityOverflow, "secular function vanishes to high order at 0");
}

namespace {

class GraphProblem final : public RootProblem {
 public:
  explicit GraphProblem(const CircleGraph& G) : G_(G) {}
  double value(double x) const override { return secular_value(G_, x); }
  double deriv(double x) const override { return secular_jet(G_, x).deriv; }
  double second(double x) const override { return secular_jet(G_, x).second; }

 private:
  const CircleGraph& G_;
};

}  // namespace

QuasiSpectrum graph_eigenvalues(const CircleGraph& G, double sigma_max, const RootOpts& opts) {
  if (G.lengths.empty() || G.lengths.size() != G.betas.size()) fail(ErrorCode::InvalidInput, "malformed graph");
  if (!(sigma_max > 0.0)) fail(ErrorCode::InvalidInput, "sigma_max must be positive");
  double L = 0.0, bound = 2.0, pole_free = 2.0;
  for (std::size_t j = 0; j < G.lengths.size(); ++j) {
    L += G.lengths[j];
    const double sb = std::sin(G.betas[j]), cb = std::cos(G.betas[j]);
    bound *= std::max(sb * sb, cb * cb);
    pole_free *= std::abs(sb * cb);
  }
  ScanOpts scan;
  scan.h = std::numbers::pi / (opts.oversample * L);
  scan.touch_tol = opts.touch_rel * (bound + pole_free);
  scan.second_tol = scan.touch_tol * std::max(1.0, L * L);
  scan.rel_tol = opts.rel_tol;

  QuasiSpectrum S;
  S.sigma_max = sigma_max;
  S.zero_half_mult = graph_zero_half_multiplicity(G, opts.touch_rel);
  S.values.assign(static_cast<std::size_t>(S.zero_half_mult), 0.0);
  GraphProblem problem(G);
  for (const Root& r : scan_roots(problem, 0.0, sigma_max, scan)) {
    if (S.zero_half_mult > 0 && r.x < 0.5 * scan.h) continue;
    for (int k = 0; k < r.multiplicity; ++k) S.values.push_back(r.x);
  }
  return S;
}

}  // namespace steklov
