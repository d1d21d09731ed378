#include <string>

#include "common.hpp"

namespace steklov {

using detail::sign_of;

namespace {

std::vector<std::vector<std::size_t>> neighbour_lists(const AdjacencyData& D) {
  if (D.neighbours.size() == D.Dp.size()) return D.neighbours;
  const std::size_t n = D.Dp.size();
  std::vector<std::vector<std::size_t>> nb(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (j != k && D.Dp(j, k) < 1.0 - D.tol_one) nb[j].push_back(k);
  return nb;
}

double abs_cos(const AdjacencyData& D, std::size_t j, std::size_t k) { return std::sqrt(std::max(0.0, D.Dp(j, k))); }

GeometryResult closed_walk(const SortedLengths& SL, const AdjacencyData& D,
                           const std::vector<std::vector<std::size_t>>& nb) {
  const std::size_t n = SL.values.size();
  for (std::size_t j = 0; j < n; ++j)
    if (nb[j].size() != 2)
      fail(ErrorCode::WalkStuck, "side " + std::to_string(j + 1) + " has " + std::to_string(nb[j].size()) +
                                     " neighbours in a closed boundary");
  // Side 1 is l'_1; its neighbour with the smaller index becomes side 2.
  std::vector<std::size_t> order{0};
  std::size_t prev = 0, cur = std::min(nb[0][0], nb[0][1]);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  while (cur != 0) {
    if (seen[cur]) fail(ErrorCode::WalkStuck, "walk revisits side " + std::to_string(cur + 1));
    seen[cur] = true;
    order.push_back(cur);
    const std::size_t next = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
    prev = cur;
    cur = next;
  }
  if (order.size() != n) fail(ErrorCode::WalkStuck, "walk closes after " + std::to_string(order.size()) + " sides");

  GeometryResult g;
  g.n = static_cast<int>(n);
  g.K = 0;
  for (std::size_t s : order) g.ordered_lengths.push_back(SL.values[s]);
  // Vertex v sits between sides v and v+1; side s (s >= 1) lies between vertices s-1 and s,
  // and r({side}) = c_{s-1} c_s fixes their relative sign.
  g.cosines.resize(n);
  double sign = 1.0;
  for (std::size_t v = 0; v < n; ++v) {
    if (v > 0) sign *= sign_of(D.Dp(order[v], order[v]));
    g.cosines[v] = sign * abs_cos(D, order[v], order[(v + 1) % n]);
  }
  if (sign_of(g.cosines[n - 1]) * sign_of(g.cosines[0]) != sign_of(D.Dp(order[0], order[0])))
    fail(ErrorCode::SignInconsistency, "cosine signs do not close around the boundary");
  g.canonicalize();
  return g;
}

GeometryResult open_walks(const SortedLengths& SL, const AdjacencyData& D,
                          const std::vector<std::vector<std::size_t>>& nb) {
  const std::size_t n = SL.values.size();
  GeometryResult g;
  g.n = static_cast<int>(n);
  g.K = count_exceptional(D);
  std::vector<bool> seen(n, false);
  std::size_t placed = 0;
  while (placed < n) {
    std::size_t start = detail::kNone;
    for (std::size_t j = 0; j < n && start == detail::kNone; ++j)
      if (!seen[j] && nb[j].size() == 1) start = j;
    for (std::size_t j = 0; j < n && start == detail::kNone; ++j)
      if (!seen[j] && nb[j].empty()) start = j;
    if (start == detail::kNone) fail(ErrorCode::WalkStuck, "no side starts an open component");

    std::vector<std::size_t> chain{start};
    seen[start] = true;
    for (;;) {
      std::size_t next = detail::kNone;
      for (std::size_t k : nb[chain.back()])
        if (!seen[k]) next = k;
      if (next == detail::kNone) break;
      seen[next] = true;
      chain.push_back(next);
    }
    if (nb[chain.back()].size() > 1)
      fail(ErrorCode::WalkStuck, "component does not end at an exceptional vertex");
    placed += chain.size();

    ExceptionalComponent comp;
    double sign = 1.0, parity = 1.0;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      comp.arc_lengths.push_back(SL.values[chain[i]]);
      parity *= sign_of(D.Dp(chain[i], chain[i]));
      if (i + 1 < chain.size()) {
        if (i > 0) sign *= sign_of(D.Dp(chain[i], chain[i]));
        comp.cosines.push_back(sign * abs_cos(D, chain[i], chain[i + 1]));
      }
    }
    // The product of r({side}) over the component telescopes to the product of
    // its two bounding exceptional cosines.
    comp.parity = parity > 0 ? Parity::Even : Parity::Odd;
    g.components.push_back(std::move(comp));
  }
  g.canonicalize();
  return g;
}

}  // namespace

GeometryResult recover_order_and_cosines(const CharPoly& F, const SortedLengths& SL, const AdjacencyData& D) {
  (void)F;
  const std::size_t n = SL.values.size();
  if (n < 3 || D.Dp.size() != n) fail(ErrorCode::InvalidInput, "order recovery needs n >= 3 and matching D'");
  const auto nb = neighbour_lists(D);
  const int K = count_exceptional(D);
  GeometryResult g = K == 0 ? closed_walk(SL, D, nb) : open_walks(SL, D, nb);
  g.warnings = D.warnings;
  return g;
}

}  // namespace steklov
