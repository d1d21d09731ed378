#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "steklov/charpoly.hpp"
#include "steklov/geometry.hpp"
#include "steklov/reconstruct.hpp"
#include "steklov/spectra.hpp"

namespace steklov {

struct RoundtripOpts {
  std::size_t target_roots = 4000;  // sigma_max is chosen so about this many roots fall below it
  double sigma_max = 0.0;           // overrides target_roots when positive
  std::optional<double> perturb_A;  // perturb the roots before recovery
  double perturb_eps = 1.0;
  std::uint64_t perturb_seed = 1;
  RecoveryOpts recovery;
  RootOpts roots;
  double equivalence_tol = 0.01;
  // Zero means take the tolerances the recovery report suggests.
  double tol_freq = 0.0;
  double tol_one = 0.0;
  bool strict = false;
};

struct RoundtripResult {
  CharPoly truth;
  QuasiSpectrum spectrum;
  std::optional<PerturbedSpectrum> perturbed;
  RecoveryReport recovery;
  GeometryResult geometry;
  GeometryResult expected;
  WeylReport weyl;  // of the spectrum actually fed to recovery
  double max_amp_error = 0.0;
  bool equivalent = false;
};

RoundtripResult run_roundtrip(const PolygonSpec& spec, const RoundtripOpts& opts = {});

}  // namespace steklov
