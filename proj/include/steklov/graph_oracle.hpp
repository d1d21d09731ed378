#pragma once

#include <complex>
#include <vector>

#include "steklov/polygon.hpp"
#include "steklov/spectra.hpp"

namespace steklov {

// Circular quantum graph: edge j has length l_j, vertex j (after edge j) has
// parameter beta_j = pi^2 / (4 alpha_j), i.e. half the vertex phase.
struct CircleGraph {
  std::vector<double> lengths;
  std::vector<double> betas;
};

inline constexpr double kDefaultOracleGuard = 1e-6;

CircleGraph make_circle_graph(const PolygonSpec& spec, double guard = kDefaultOracleGuard);

// Across edge j, (f, f'/sigma) rotates by sigma l_j; at vertex j it is scaled by
// diag(tan beta_j, cot beta_j). With M the product around the cycle,
//   G(sigma) = prod_j (sin beta_j cos beta_j) * det(M - I)
//            = 2 prod_j sin beta_j cos beta_j - tr prod_j diag(sin^2 beta_j, cos^2 beta_j) R(sigma l_j),
// which has no poles.
double secular_value(const CircleGraph& G, double sigma);
std::complex<double> secular_value(const CircleGraph& G, std::complex<double> sigma);

struct SecularJet {
  double value, deriv, second;
};
SecularJet secular_jet(const CircleGraph& G, double sigma);

// Half the order of the zero of G at sigma = 0, read from Taylor coefficients
// computed on a small circle in the complex plane.
int graph_zero_half_multiplicity(const CircleGraph& G, double touch_rel = 1e-8);

QuasiSpectrum graph_eigenvalues(const CircleGraph& G, double sigma_max, const RootOpts& opts = {});

}  // namespace steklov
