#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace steklov {

// Vertex j sits between sides j and j+1 (cyclic). Cosines are the canonical
// representation; angles are kept when the spec was given by angles.
class PolygonSpec {
 public:
  static PolygonSpec from_angles(std::vector<double> angles, std::vector<double> lengths);
  // Sines default to the non-negative branch sqrt(1 - c^2).
  static PolygonSpec from_cosines(std::vector<double> cosines, std::vector<double> lengths);
  static PolygonSpec from_cosines(std::vector<double> cosines, std::vector<double> sines,
                                  std::vector<double> lengths);

  std::size_t size() const { return lengths_.size(); }
  double perimeter() const;
  const std::vector<double>& lengths() const { return lengths_; }
  const std::vector<double>& cosines() const { return cos_; }
  const std::vector<double>& sines() const { return sin_; }
  const std::optional<std::vector<double>>& angles() const { return angles_; }
  // Vertex phase x_j with cos x_j = c_j, sin x_j = s_j (x_j = pi^2 / (2 alpha_j) for angle input).
  double phase(std::size_t j) const;

 private:
  std::vector<double> lengths_;
  std::vector<double> cos_;
  std::vector<double> sin_;
  std::optional<std::vector<double>> angles_;
};

enum class AngleClass { Ordinary, Special, Exceptional };

struct CosineVector {
  std::vector<double> c;
  std::vector<AngleClass> classes;
  // +1 / -1 for exceptional entries (sign of c), 0 otherwise.
  std::vector<int> parity;
};

inline constexpr double kDefaultTolSpecial = 1e-10;
inline constexpr double kDefaultEpsAngle = 1e-10;
inline constexpr double kDefaultTolComm = 1e-9;
inline constexpr std::size_t kMaxSides = 20;

CosineVector cosine_vector(const PolygonSpec& spec, double tol_special = kDefaultTolSpecial,
                           double eps_angle = kDefaultEpsAngle);

struct AdmissibilityReport {
  bool incommensurable = false;
  bool no_special = false;
  bool has_exceptional = false;
  // min over nonzero eta in {-1,0,1}^n of |eta . l|, and one minimiser.
  double min_combination = 0.0;
  std::vector<int> witness;
  // Always false for positive lengths: the all-plus frequency L cannot coincide
  // with another |zeta . l|. Kept so callers can assert on it.
  bool top_frequency_merged = false;
  bool admissible() const { return incommensurable && no_special; }
};

AdmissibilityReport check_admissible(const PolygonSpec& spec, double tol_comm = kDefaultTolComm,
                                     double tol_special = kDefaultTolSpecial,
                                     double eps_angle = kDefaultEpsAngle);

// zeta_1 = +1, zeta_{j+1} = -1 iff bit j of mask is set.
std::vector<int> sign_vector_from_mask(std::uint32_t mask, std::size_t n);
// Indices j (0-based) with zeta_j != zeta_{j+1}, cyclic.
std::vector<std::size_t> change_set(std::span<const int> zeta);

// Angles alpha in (0, pi) with cos(pi^2 / (2 alpha)) = c, largest first.
std::vector<double> angle_branches(double c, std::size_t max_count);

}  // namespace steklov
