#pragma once

#include <cstddef>
#include <vector>

#include "steklov/polygon.hpp"

namespace steklov {

// F(sigma) = sum_k amps[k] cos(freqs[k] sigma) - const_term, freqs strictly increasing.
struct CharPoly {
  std::vector<double> freqs;
  std::vector<double> amps;
  double const_term = 0.0;

  std::size_t size() const { return freqs.size(); }
  double max_freq() const { return freqs.empty() ? 0.0 : freqs.back(); }
  // sum |amps| + |const_term|, the natural scale of F.
  double abs_sum() const;
  void validate() const;
};

struct CharPolyOpts {
  double tol_freq_rel = 1e-9;  // merge radius relative to the perimeter
  double tol_amp = 1e-13;      // merged terms at or below this are dropped
};

CharPoly build_char_poly(const PolygonSpec& spec, const CharPolyOpts& opts = {});

// order-th derivative at sigma; order must be 0, 1 or 2.
double eval_char_poly(const CharPoly& F, double sigma, int order = 0);
// Any non-negative order, term-wise.
double char_poly_derivative(const CharPoly& F, double sigma, int order);

// Same term count, and frequencies, amplitudes and constant each within tol.
bool charpoly_close(const CharPoly& a, const CharPoly& b, double tol);
// Largest |amp| difference after pairing each term of a with the nearest
// frequency of b; infinity if the term counts differ or a pair is farther than freq_tol.
double max_amplitude_error(const CharPoly& a, const CharPoly& b, double freq_tol);

}  // namespace steklov
