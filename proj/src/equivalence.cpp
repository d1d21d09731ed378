#include <algorithm>
#include <cmath>
#include <functional>

#include "steklov/geometry_types.hpp"

namespace steklov {
namespace {

void fix_global_sign(std::vector<double>& c) {
  for (double v : c) {
    if (v == 0.0) continue;
    if (v < 0.0)
      for (double& w : c) w = -w;
    return;
  }
}

bool close(const std::vector<double>& a, const std::vector<double>& b, double tol, double sign = 1.0) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - sign * b[i]) > tol) return false;
  return true;
}

bool close_up_to_sign(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  return close(a, b, tol, 1.0) || close(a, b, tol, -1.0);
}

bool component_equivalent(const ExceptionalComponent& x, const ExceptionalComponent& y, double tol) {
  if (x.parity != y.parity || x.arc_lengths.size() != y.arc_lengths.size()) return false;
  if (close(x.arc_lengths, y.arc_lengths, tol) && close_up_to_sign(x.cosines, y.cosines, tol)) return true;
  std::vector<double> rl(y.arc_lengths.rbegin(), y.arc_lengths.rend());
  std::vector<double> rc(y.cosines.rbegin(), y.cosines.rend());
  return close(x.arc_lengths, rl, tol) && close_up_to_sign(x.cosines, rc, tol);
}

}  // namespace

void ExceptionalComponent::canonicalize() {
  if (std::lexicographical_compare(arc_lengths.rbegin(), arc_lengths.rend(), arc_lengths.begin(),
                                   arc_lengths.end())) {
    std::reverse(arc_lengths.begin(), arc_lengths.end());
    std::reverse(cosines.begin(), cosines.end());
  }
  fix_global_sign(cosines);
}

double GeometryResult::total_length() const {
  double s = 0.0;
  for (double l : ordered_lengths) s += l;
  for (const auto& comp : components)
    for (double l : comp.arc_lengths) s += l;
  return s;
}

void GeometryResult::canonicalize() {
  fix_global_sign(cosines);
  for (auto& comp : components) comp.canonicalize();
  std::stable_sort(components.begin(), components.end(),
                   [](const ExceptionalComponent& a, const ExceptionalComponent& b) {
                     return a.arc_lengths.front() < b.arc_lengths.front();
                   });
}

GeometryResult geometry_of(const PolygonSpec& spec, double eps_angle) {
  const std::size_t n = spec.size();
  const auto& l = spec.lengths();
  const auto& c = spec.cosines();
  GeometryResult g;
  g.n = static_cast<int>(n);

  std::vector<std::size_t> exc;
  for (std::size_t j = 0; j < n; ++j)
    if (std::abs(c[j]) >= 1.0 - eps_angle) exc.push_back(j);
  g.K = static_cast<int>(exc.size());

  if (exc.empty()) {
    g.ordered_lengths = l;
    g.cosines = c;
  } else {
    for (std::size_t q = 0; q < exc.size(); ++q) {
      std::size_t e = exc[q];
      std::size_t e_next = exc[(q + 1) % exc.size()];
      ExceptionalComponent comp;
      std::size_t side = (e + 1) % n;
      for (;;) {
        comp.arc_lengths.push_back(l[side]);
        if (side == e_next) break;
        comp.cosines.push_back(c[side]);
        side = (side + 1) % n;
      }
      comp.parity = c[e] * c[e_next] > 0 ? Parity::Even : Parity::Odd;
      g.components.push_back(std::move(comp));
    }
  }
  g.canonicalize();
  return g;
}

bool loose_equivalent(const GeometryResult& a, const GeometryResult& b, double tol) {
  if (a.n != b.n || a.K != b.K) return false;
  if (a.K == 0) {
    const std::size_t n = a.ordered_lengths.size();
    if (n != b.ordered_lengths.size() || a.cosines.size() != n || b.cosines.size() != n) return false;
    std::vector<double> lb(n), cb(n);
    for (std::size_t s = 0; s < n; ++s) {
      for (int rev = 0; rev < 2; ++rev) {
        for (std::size_t i = 0; i < n; ++i) {
          // New side i is old side p(i); new vertex i sits between new sides i and i+1.
          std::size_t p = rev ? (s + n - i) % n : (s + i) % n;
          lb[i] = b.ordered_lengths[p];
          cb[i] = b.cosines[rev ? (p + n - 1) % n : p];
        }
        if (close(a.ordered_lengths, lb, tol) && close_up_to_sign(a.cosines, cb, tol)) return true;
      }
    }
    return false;
  }

  if (a.components.size() != b.components.size()) return false;
  std::vector<bool> used(b.components.size(), false);
  std::function<bool(std::size_t)> match = [&](std::size_t i) {
    if (i == a.components.size()) return true;
    for (std::size_t j = 0; j < b.components.size(); ++j) {
      if (used[j] || !component_equivalent(a.components[i], b.components[j], tol)) continue;
      used[j] = true;
      if (match(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return match(0);
}

}  // namespace steklov
