#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steklov/polygon.hpp"

namespace steklov {

enum class Parity { Even, Odd };

// A maximal run of sides between two exceptional vertices. cosines has one
// entry per interior vertex, so cosines.size() == arc_lengths.size() - 1.
struct ExceptionalComponent {
  std::vector<double> arc_lengths;
  std::vector<double> cosines;
  Parity parity = Parity::Even;

  // Orientation with the lexicographically smaller length sequence, then the
  // global sign that makes the first nonzero cosine non-negative.
  void canonicalize();
};

// Equal-sided two-gons (and one-gons) produce the same single-frequency
// polynomial; only these quantities survive.
struct TwoGonAlternative {
  double side = 0.0;              // t / 2
  double cos_phase_sum = 0.0;     // cos(x_1 + x_2) = -r0
};

struct GeometryResult {
  int n = 0;
  int K = 0;
  std::vector<double> ordered_lengths;
  std::vector<double> cosines;
  std::vector<ExceptionalComponent> components;
  bool underdetermined = false;
  std::optional<TwoGonAlternative> alternative;
  std::vector<std::string> warnings;

  double total_length() const;
  // Global sign so the first nonzero cosine is non-negative; components sorted.
  void canonicalize();
};

// Ground truth for a spec: exceptional vertices split the boundary into components.
GeometryResult geometry_of(const PolygonSpec& spec, double eps_angle = kDefaultEpsAngle);

// Equality up to dihedral relabelling and a global cosine sign; for exceptional
// results, component-wise up to reordering, reversal and per-component sign.
bool loose_equivalent(const GeometryResult& a, const GeometryResult& b, double tol);

}  // namespace steklov
