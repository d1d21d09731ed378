#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "steklov/charpoly.hpp"
#include "steklov/geometry_types.hpp"

namespace steklov {

struct GeometryOpts {
  double tol_freq = 0.0;  // absolute; 0 means 1e-9 * max frequency
  double tol_one = 1e-6;
  // Reject rows of D' with more than two sub-unit entries instead of keeping the two smallest.
  bool strict = false;
};

struct SortedLengths {
  std::vector<double> values;  // increasing
  double total = 0.0;
};

class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}
  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

struct AdjacencyData {
  SquareMatrix Rp;
  SquareMatrix Dp;
  double tol_one = 1e-6;
  bool strict = false;
  // Sides adjacent to each side (at most two), and notes about noisy rows.
  std::vector<std::vector<std::size_t>> neighbours;
  std::vector<std::string> warnings;
};

SortedLengths recover_sorted_lengths(const CharPoly& F, const GeometryOpts& opts = {});
AdjacencyData build_adjacency(const CharPoly& F, const SortedLengths& SL, const GeometryOpts& opts = {});
int count_exceptional(const AdjacencyData& D);
GeometryResult recover_order_and_cosines(const CharPoly& F, const SortedLengths& SL, const AdjacencyData& D);
GeometryResult recover_small_n(const CharPoly& F, const GeometryOpts& opts = {});
// Dispatches on the number of frequencies.
GeometryResult recover_geometry(const CharPoly& F, const GeometryOpts& opts = {});

}  // namespace steklov
