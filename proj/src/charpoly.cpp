#include "steklov/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "steklov/error.hpp"
#include "steklov/parallel.hpp"

namespace steklov {
namespace {

struct Term {
  double freq;
  double amp;
  std::uint32_t mask;
};

}  // namespace

double CharPoly::abs_sum() const {
  double s = std::abs(const_term);
  for (double a : amps) s += std::abs(a);
  return s;
}

void CharPoly::validate() const {
  if (freqs.size() != amps.size()) fail(ErrorCode::InvalidInput, "freqs and amps differ in size");
  if (!std::isfinite(const_term)) fail(ErrorCode::InvalidInput, "const_term not finite");
  for (std::size_t k = 0; k < freqs.size(); ++k) {
    if (!std::isfinite(freqs[k]) || !std::isfinite(amps[k]) || freqs[k] <= 0.0)
      fail(ErrorCode::InvalidInput, "frequencies must be finite and positive");
    if (k > 0 && freqs[k] <= freqs[k - 1]) fail(ErrorCode::InvalidInput, "frequencies must be strictly increasing");
  }
}

CharPoly build_char_poly(const PolygonSpec& spec, const CharPolyOpts& opts) {
  const std::size_t n = spec.size();
  if (n > kMaxSides) fail(ErrorCode::SizeTooLarge, "n = " + std::to_string(n) + " exceeds 20");
  const auto& l = spec.lengths();
  const auto& c = spec.cosines();
  const std::uint32_t count = 1u << (n - 1);

  std::vector<Term> terms(count);
  constexpr std::uint32_t kChunk = 4096;
  const std::size_t chunks = (count + kChunk - 1) / kChunk;
  parallel_for(chunks, [&](std::size_t ci) {
    std::uint32_t lo = static_cast<std::uint32_t>(ci) * kChunk;
    std::uint32_t hi = std::min(count, lo + kChunk);
    std::vector<int> z(n);
    for (std::uint32_t mask = lo; mask < hi; ++mask) {
      z[0] = 1;
      for (std::size_t j = 1; j < n; ++j) z[j] = (mask >> (j - 1)) & 1u ? -1 : 1;
      double f = 0.0, p = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        f += z[j] * l[j];
        if (z[j] != z[(j + 1) % n]) p *= c[j];
      }
      terms[mask] = {std::abs(f), p, mask};
    }
  });

  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return a.freq < b.freq || (a.freq == b.freq && a.mask < b.mask);
  });

  const double tol = opts.tol_freq_rel * spec.perimeter();
  CharPoly F;
  double r0 = 1.0;
  for (double s : spec.sines()) r0 *= s;

  std::size_t i = 0;
  while (i < terms.size()) {
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].freq - terms[j - 1].freq <= tol) ++j;
    double amp = 0.0, fsum = 0.0;
    for (std::size_t k = i; k < j; ++k) {
      amp += terms[k].amp;
      fsum += terms[k].freq;
    }
    double freq = fsum / static_cast<double>(j - i);
    if (freq <= tol) {
      r0 -= amp;
    } else if (std::abs(amp) > opts.tol_amp) {
      F.freqs.push_back(freq);
      F.amps.push_back(amp);
    }
    i = j;
  }
  F.const_term = r0;
  return F;
}

double char_poly_derivative(const CharPoly& F, double sigma, int order) {
  if (order < 0) fail(ErrorCode::InvalidInput, "derivative order must be non-negative");
  double s = 0.0;
  const int q = order % 4;
  for (std::size_t k = 0; k < F.freqs.size(); ++k) {
    double t = F.freqs[k];
    double x = t * sigma;
    double trig = q == 0 ? std::cos(x) : q == 1 ? -std::sin(x) : q == 2 ? -std::cos(x) : std::sin(x);
    s += F.amps[k] * std::pow(t, order) * trig;
  }
  if (order == 0) s -= F.const_term;
  return s;
}

double eval_char_poly(const CharPoly& F, double sigma, int order) {
  if (order < 0 || order > 2) fail(ErrorCode::InvalidInput, "order must be 0, 1 or 2");
  return char_poly_derivative(F, sigma, order);
}

bool charpoly_close(const CharPoly& a, const CharPoly& b, double tol) {
  if (a.size() != b.size() || std::abs(a.const_term - b.const_term) > tol) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (std::abs(a.freqs[k] - b.freqs[k]) > tol || std::abs(a.amps[k] - b.amps[k]) > tol) return false;
  return true;
}

double max_amplitude_error(const CharPoly& a, const CharPoly& b, double freq_tol) {
  const double inf = std::numeric_limits<double>::infinity();
  if (a.size() != b.size()) return inf;
  double err = std::abs(a.const_term - b.const_term);
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::size_t best = 0;
    for (std::size_t m = 1; m < b.size(); ++m)
      if (std::abs(b.freqs[m] - a.freqs[k]) < std::abs(b.freqs[best] - a.freqs[k])) best = m;
    if (std::abs(b.freqs[best] - a.freqs[k]) > freq_tol) return inf;
    err = std::max(err, std::abs(a.amps[k] - b.amps[best]));
  }
  return err;
}

}  // namespace steklov
