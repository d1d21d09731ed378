#include <string>

#include "common.hpp"

namespace steklov {

using detail::Terms;

AdjacencyData build_adjacency(const CharPoly& F, const SortedLengths& SL, const GeometryOpts& opts) {
  const Terms t = Terms::from(F, opts);
  const std::size_t n = SL.values.size();
  if (n < 3) fail(ErrorCode::InvalidInput, "adjacency matrices need n >= 3");
  const double L = SL.total;

  // r(J) for zeta(J) = +1 on J, -1 elsewhere: t(J) = |2 sum_J l' - L|.
  auto amplitude = [&](double sumJ, const std::string& what) {
    const double v = std::abs(2.0 * sumJ - L);
    const std::size_t idx = t.find(v);
    if (idx == detail::kNone)
      fail(ErrorCode::FrequencyNotFound, "no frequency matches t(" + what + ") = " + std::to_string(v));
    const double r = t.amps[idx];
    if (std::abs(r) <= 1e-14) fail(ErrorCode::ZeroAmplitude, "amplitude of t(" + what + ") vanishes");
    return r;
  };

  AdjacencyData D;
  D.Rp = SquareMatrix(n);
  D.Dp = SquareMatrix(n);
  D.tol_one = opts.tol_one;
  D.strict = opts.strict;
  for (std::size_t k = 0; k < n; ++k)
    D.Rp(k, k) = amplitude(SL.values[k], "{" + std::to_string(k + 1) + "}");
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      const double r = amplitude(SL.values[j] + SL.values[k],
                                 "{" + std::to_string(j + 1) + "," + std::to_string(k + 1) + "}");
      D.Rp(j, k) = D.Rp(k, j) = r;
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      D.Dp(j, k) = j == k ? D.Rp(k, k) : D.Rp(j, j) * D.Rp(k, k) / D.Rp(j, k);

  // Sub-unit off-diagonal entries mark adjacent sides.
  std::vector<std::vector<std::size_t>> below(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k)
      if (j != k && D.Dp(j, k) < 1.0 - D.tol_one) below[j].push_back(k);
    if (below[j].size() > 2) {
      if (D.strict)
        fail(ErrorCode::AmbiguousAdjacency, "row " + std::to_string(j + 1) + " of D' has " +
                                                std::to_string(below[j].size()) + " sub-unit entries");
      std::stable_sort(below[j].begin(), below[j].end(),
                       [&](std::size_t a, std::size_t b) { return D.Dp(j, a) < D.Dp(j, b); });
      below[j].resize(2);
      std::sort(below[j].begin(), below[j].end());
      D.warnings.push_back("row " + std::to_string(j + 1) + " of D' has more than two sub-unit entries; kept the two smallest");
    }
  }
  D.neighbours.assign(n, {});
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k : below[j])
      if (std::find(below[k].begin(), below[k].end(), j) != below[k].end()) D.neighbours[j].push_back(k);
  return D;
}

int count_exceptional(const AdjacencyData& D) {
  const std::size_t n = D.Dp.size();
  std::size_t marked = 0;
  for (const auto& row : D.neighbours) marked += row.size();
  if (D.neighbours.size() != n) {
    marked = 0;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (j != k && D.Dp(j, k) < 1.0 - D.tol_one) ++marked;
  }
  if (marked % 2 != 0) fail(ErrorCode::OddAdjacencyCount, "odd number of sub-unit entries in D'");
  return static_cast<int>(n) - static_cast<int>(marked / 2);
}

}  // namespace steklov
