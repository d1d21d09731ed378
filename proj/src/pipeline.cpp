#include "steklov/pipeline.hpp"

#include <numbers>

namespace steklov {

RoundtripResult run_roundtrip(const PolygonSpec& spec, const RoundtripOpts& opts) {
  RoundtripResult r;
  const double L = spec.perimeter();
  r.truth = build_char_poly(spec);
  const double sigma_max =
      opts.sigma_max > 0.0 ? opts.sigma_max : (static_cast<double>(opts.target_roots) + 0.5) * std::numbers::pi / L;
  r.spectrum = find_quasi_eigenvalues(r.truth, sigma_max, opts.roots);

  const std::vector<double>* values = &r.spectrum.values;
  if (opts.perturb_A) {
    r.perturbed = perturb_spectrum(r.spectrum, *opts.perturb_A, opts.perturb_eps, opts.perturb_seed);
    values = &r.perturbed->values;
  }
  r.weyl = weyl_check(*values, L, sigma_max);

  r.recovery = recover_charpoly_detailed(*values, opts.recovery);
  r.max_amp_error = max_amplitude_error(r.truth, r.recovery.poly, r.recovery.suggested_tol_freq());

  GeometryOpts g;
  g.tol_freq = opts.tol_freq > 0.0 ? opts.tol_freq : r.recovery.suggested_tol_freq();
  g.tol_one = opts.tol_one > 0.0 ? opts.tol_one : r.recovery.suggested_tol_one();
  g.strict = opts.strict;
  r.geometry = recover_geometry(r.recovery.poly, g);
  r.expected = geometry_of(spec);
  r.equivalent = loose_equivalent(r.geometry, r.expected, opts.equivalence_tol);
  return r;
}

}  // namespace steklov
