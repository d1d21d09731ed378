#include "steklov/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "steklov/error.hpp"

namespace steklov {
namespace {

void check_lengths(const std::vector<double>& lengths) {
  if (lengths.empty()) fail(ErrorCode::InvalidInput, "polygon needs at least one side");
  if (lengths.size() > kMaxSides)
    fail(ErrorCode::SizeTooLarge, "n = " + std::to_string(lengths.size()) + " exceeds 20");
  for (double l : lengths)
    if (!std::isfinite(l) || l <= 0.0) fail(ErrorCode::InvalidInput, "side lengths must be positive");
}

struct Combo {
  double value;
  std::uint64_t code;  // base-3 digits, 0 -> 0, 1 -> +1, 2 -> -1
};

std::vector<Combo> enumerate_combos(std::span<const double> l) {
  std::vector<Combo> out{{0.0, 0}};
  std::uint64_t place = 1;
  for (double x : l) {
    std::size_t m = out.size();
    out.reserve(3 * m);
    for (std::size_t i = 0; i < m; ++i) {
      out.push_back({out[i].value + x, out[i].code + place});
      out.push_back({out[i].value - x, out[i].code + 2 * place});
    }
    place *= 3;
  }
  return out;
}

std::vector<int> decode(std::uint64_t code, std::size_t count) {
  std::vector<int> eta(count);
  for (std::size_t j = 0; j < count; ++j) {
    int d = static_cast<int>(code % 3);
    eta[j] = d == 0 ? 0 : (d == 1 ? 1 : -1);
    code /= 3;
  }
  return eta;
}

}  // namespace

PolygonSpec PolygonSpec::from_angles(std::vector<double> angles, std::vector<double> lengths) {
  check_lengths(lengths);
  if (angles.size() != lengths.size()) fail(ErrorCode::InvalidInput, "angles and lengths differ in size");
  PolygonSpec s;
  s.cos_.resize(angles.size());
  s.sin_.resize(angles.size());
  const double pi2 = std::numbers::pi * std::numbers::pi;
  for (std::size_t j = 0; j < angles.size(); ++j) {
    double a = angles[j];
    if (!std::isfinite(a) || a <= 0.0 || a >= std::numbers::pi)
      fail(ErrorCode::InvalidInput, "angles must lie in (0, pi)");
    double x = pi2 / (2.0 * a);
    s.cos_[j] = std::cos(x);
    s.sin_[j] = std::sin(x);
  }
  s.lengths_ = std::move(lengths);
  s.angles_ = std::move(angles);
  return s;
}

PolygonSpec PolygonSpec::from_cosines(std::vector<double> cosines, std::vector<double> lengths) {
  std::vector<double> sines(cosines.size());
  for (std::size_t j = 0; j < cosines.size(); ++j) {
    double c = cosines[j];
    sines[j] = std::sqrt(std::max(0.0, 1.0 - c * c));
  }
  return from_cosines(std::move(cosines), std::move(sines), std::move(lengths));
}

PolygonSpec PolygonSpec::from_cosines(std::vector<double> cosines, std::vector<double> sines,
                                      std::vector<double> lengths) {
  check_lengths(lengths);
  if (cosines.size() != lengths.size() || sines.size() != lengths.size())
    fail(ErrorCode::InvalidInput, "cosines and lengths differ in size");
  for (std::size_t j = 0; j < cosines.size(); ++j) {
    double c = cosines[j], s = sines[j];
    if (!std::isfinite(c) || !std::isfinite(s) || std::abs(c) > 1.0)
      fail(ErrorCode::InvalidInput, "cosines must lie in [-1, 1]");
    if (std::abs(c * c + s * s - 1.0) > 1e-9) fail(ErrorCode::InvalidInput, "cosine/sine pair not on unit circle");
  }
  PolygonSpec s;
  s.lengths_ = std::move(lengths);
  s.cos_ = std::move(cosines);
  s.sin_ = std::move(sines);
  return s;
}

double PolygonSpec::perimeter() const {
  double L = 0.0;
  for (double l : lengths_) L += l;
  return L;
}

double PolygonSpec::phase(std::size_t j) const {
  if (angles_) return std::numbers::pi * std::numbers::pi / (2.0 * (*angles_)[j]);
  return std::atan2(sin_[j], cos_[j]);
}

CosineVector cosine_vector(const PolygonSpec& spec, double tol_special, double eps_angle) {
  CosineVector v;
  v.c = spec.cosines();
  v.classes.resize(v.c.size(), AngleClass::Ordinary);
  v.parity.resize(v.c.size(), 0);
  for (std::size_t j = 0; j < v.c.size(); ++j) {
    double c = v.c[j];
    if (std::abs(c) <= tol_special) {
      v.classes[j] = AngleClass::Special;
    } else if (std::abs(c) >= 1.0 - eps_angle) {
      v.classes[j] = AngleClass::Exceptional;
      v.parity[j] = c > 0 ? 1 : -1;
    }
  }
  return v;
}

AdmissibilityReport check_admissible(const PolygonSpec& spec, double tol_comm, double tol_special,
                                     double eps_angle) {
  const auto& l = spec.lengths();
  const std::size_t n = l.size();
  if (n > kMaxSides) fail(ErrorCode::SizeTooLarge, "exhaustive admissibility check limited to n <= 20");

  // Meet in the middle: the exact minimum over all 3^n - 1 nonzero combinations
  // from two sorted half-lists of 3^(n/2) partial sums.
  const std::size_t h = n / 2;
  auto left = enumerate_combos(std::span<const double>(l).first(h));
  auto right = enumerate_combos(std::span<const double>(l).subspan(h));
  std::sort(right.begin(), right.end(), [](const Combo& a, const Combo& b) {
    return a.value < b.value || (a.value == b.value && a.code < b.code);
  });

  double best = std::numeric_limits<double>::infinity();
  std::uint64_t best_left = 0, best_right = 0;
  for (const Combo& a : left) {
    auto it = std::lower_bound(right.begin(), right.end(), -a.value,
                               [](const Combo& c, double v) { return c.value < v; });
    std::ptrdiff_t p = it - right.begin();
    // Equal values can pile up around zero; widen until a usable neighbour on each side.
    for (std::ptrdiff_t q = p - 1, seen = 0; q >= 0 && seen < 2; --q) {
      const Combo& b = right[static_cast<std::size_t>(q)];
      if (a.code == 0 && b.code == 0) continue;
      ++seen;
      double v = std::abs(a.value + b.value);
      if (v < best) best = v, best_left = a.code, best_right = b.code;
    }
    for (std::ptrdiff_t q = p, seen = 0; q < static_cast<std::ptrdiff_t>(right.size()) && seen < 2; ++q) {
      const Combo& b = right[static_cast<std::size_t>(q)];
      if (a.code == 0 && b.code == 0) continue;
      ++seen;
      double v = std::abs(a.value + b.value);
      if (v < best) best = v, best_left = a.code, best_right = b.code;
    }
  }

  AdmissibilityReport r;
  r.min_combination = best;
  r.witness = decode(best_left, h);
  auto tail = decode(best_right, n - h);
  r.witness.insert(r.witness.end(), tail.begin(), tail.end());
  r.incommensurable = best > tol_comm * spec.perimeter();

  auto cv = cosine_vector(spec, tol_special, eps_angle);
  r.no_special = std::none_of(cv.classes.begin(), cv.classes.end(),
                              [](AngleClass c) { return c == AngleClass::Special; });
  r.has_exceptional = std::any_of(cv.classes.begin(), cv.classes.end(),
                                  [](AngleClass c) { return c == AngleClass::Exceptional; });
  return r;
}

std::vector<int> sign_vector_from_mask(std::uint32_t mask, std::size_t n) {
  std::vector<int> z(n, 1);
  for (std::size_t j = 1; j < n; ++j)
    if (mask & (1u << (j - 1))) z[j] = -1;
  return z;
}

std::vector<std::size_t> change_set(std::span<const int> zeta) {
  std::vector<std::size_t> out;
  const std::size_t n = zeta.size();
  for (std::size_t j = 0; j < n; ++j)
    if (zeta[j] != zeta[(j + 1) % n]) out.push_back(j);
  return out;
}

std::vector<double> angle_branches(double c, std::size_t max_count) {
  if (!std::isfinite(c) || std::abs(c) > 1.0) fail(ErrorCode::InvalidInput, "cosine outside [-1, 1]");
  const double pi = std::numbers::pi;
  const double base = std::acos(c);
  std::vector<double> phases;
  for (int k = 0; phases.size() < 2 * max_count + 2; ++k) {
    for (double x : {base + 2.0 * pi * k, -base + 2.0 * pi * k})
      if (x > pi / 2.0) phases.push_back(x);
  }
  std::sort(phases.begin(), phases.end());
  phases.erase(std::unique(phases.begin(), phases.end()), phases.end());
  std::vector<double> out;
  for (double x : phases) {
    if (out.size() == max_count) break;
    out.push_back(pi * pi / (2.0 * x));
  }
  return out;
}

}  // namespace steklov
