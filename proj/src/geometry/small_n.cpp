#include <string>

#include "common.hpp"

namespace steklov {

using detail::Terms;

GeometryResult recover_small_n(const CharPoly& F, const GeometryOpts& opts) {
  const Terms t = Terms::from(F, opts);
  const double r0 = t.const_term;
  const double tol = opts.tol_one;
  GeometryResult g;

  if (t.freqs.size() == 1) {
    const double L = t.freqs[0];
    g.n = 1;
    // An equal-sided two-gon with cos(x1 + x2) = -r0 has the same polynomial.
    g.underdetermined = true;
    g.alternative = TwoGonAlternative{L / 2.0, -r0};
    if (std::abs(r0) <= tol) {
      g.K = 1;
      g.components.push_back({{L}, {}, Parity::Even});
    } else {
      if (std::abs(r0) > 1.0 + tol) fail(ErrorCode::InvalidDiscriminant, "|r0| > 1 for a single side");
      g.K = 0;
      g.ordered_lengths = {L};
      g.cosines = {std::sqrt(std::max(0.0, 1.0 - r0 * r0))};
    }
    g.canonicalize();
    return g;
  }
  if (t.freqs.size() != 2) fail(ErrorCode::InvalidInput, "small-n recovery takes one or two frequencies");

  const double t1 = t.freqs[0], L = t.freqs[1];
  const double r1 = t.amps[0];
  const double l1 = (L - t1) / 2.0, l2 = (L + t1) / 2.0;
  g.n = 2;
  if (std::abs(r0) <= tol && std::abs(std::abs(r1) - 1.0) <= tol) {
    g.K = 2;
    const Parity p = r1 > 0 ? Parity::Even : Parity::Odd;
    g.components.push_back({{l1}, {}, p});
    g.components.push_back({{l2}, {}, p});
  } else if (std::abs(r0) <= tol) {
    if (std::abs(r1) > 1.0 + tol) fail(ErrorCode::InvalidDiscriminant, "|r1| > 1 with r0 = 0");
    g.K = 1;
    g.components.push_back({{l1, l2}, {std::min(1.0, std::abs(r1))}, Parity::Even});
  } else {
    // r1 = c1 c2 and r0^2 = (1 - c1^2)(1 - c2^2).
    const double b = 1.0 + r1 * r1 - r0 * r0;
    double disc = b * b - 4.0 * r1 * r1;
    if (disc < -tol) fail(ErrorCode::InvalidDiscriminant, "discriminant " + std::to_string(disc) + " < 0");
    disc = std::max(0.0, disc);
    const double rho = std::sqrt((b + std::sqrt(disc)) / 2.0);
    if (!(rho > 0.0)) fail(ErrorCode::InvalidDiscriminant, "degenerate cosine magnitude");
    g.K = 0;
    g.ordered_lengths = {l1, l2};
    g.cosines = {rho, r1 / rho};
  }
  g.canonicalize();
  return g;
}

GeometryResult recover_geometry(const CharPoly& F, const GeometryOpts& opts) {
  if (F.freqs.size() <= 2) return recover_small_n(F, opts);
  const SortedLengths SL = recover_sorted_lengths(F, opts);
  const AdjacencyData D = build_adjacency(F, SL, opts);
  return recover_order_and_cosines(F, SL, D);
}

}  // namespace steklov
