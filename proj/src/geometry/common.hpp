#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "steklov/error.hpp"
#include "steklov/geometry.hpp"

namespace steklov::detail {

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Frequencies and amplitudes sorted by frequency, whatever the input order.
struct Terms {
  std::vector<double> freqs;
  std::vector<double> amps;
  double const_term = 0.0;
  double tol = 0.0;

  static Terms from(const CharPoly& F, const GeometryOpts& opts) {
    if (F.freqs.size() != F.amps.size()) fail(ErrorCode::InvalidInput, "freqs and amps differ in size");
    if (F.freqs.empty()) fail(ErrorCode::InvalidInput, "characteristic polynomial has no frequencies");
    std::vector<std::size_t> idx(F.freqs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return F.freqs[a] < F.freqs[b]; });
    Terms t;
    for (std::size_t i : idx) {
      if (!(F.freqs[i] > 0.0) || !std::isfinite(F.amps[i]))
        fail(ErrorCode::InvalidInput, "frequencies must be positive, amplitudes finite");
      t.freqs.push_back(F.freqs[i]);
      t.amps.push_back(F.amps[i]);
    }
    t.const_term = F.const_term;
    t.tol = opts.tol_freq > 0.0 ? opts.tol_freq : 1e-9 * t.freqs.back();
    return t;
  }

  double L() const { return freqs.back(); }

  // Index of the unique frequency within tol of v; kNone if none; count of matches in *hits.
  std::size_t find(double v, std::size_t* hits = nullptr) const {
    std::size_t best = kNone, count = 0;
    for (std::size_t k = 0; k < freqs.size(); ++k) {
      if (std::abs(freqs[k] - v) <= tol) {
        ++count;
        if (best == kNone || std::abs(freqs[k] - v) < std::abs(freqs[best] - v)) best = k;
      }
    }
    if (hits) *hits = count;
    return best;
  }
};

inline double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

}  // namespace steklov::detail
