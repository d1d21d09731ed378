#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "steklov/charpoly.hpp"
#include "steklov/geometry_types.hpp"
#include "steklov/polygon.hpp"
#include "steklov/reconstruct.hpp"
#include "steklov/spectra.hpp"

namespace steklov::io {

using nlohmann::json;

PolygonSpec polygon_from_json(const json& j);
json to_json(const PolygonSpec& s);

CharPoly charpoly_from_json(const json& j);
json to_json(const CharPoly& F);
// CharPoly fields plus a "recovery" block the geometry stage reads for tolerances.
json to_json(const RecoveryReport& r);

// Accepts {"values", "zero_half_mult"} or {"values", "zero_count"}; the zero
// count is also re-derived from the values and must agree.
struct SpectrumInput {
  std::vector<double> values;
  int zeros = 0;
  double sigma_max = 0.0;
};
SpectrumInput spectrum_from_json(const json& j);
json to_json(const QuasiSpectrum& S);
json to_json(const PerturbedSpectrum& S);

json to_json(const GeometryResult& g);
GeometryResult geometry_from_json(const json& j);

json to_json(const AdmissibilityReport& r);
json to_json(const WeylReport& r);

json read_json_file(const std::string& path);

}  // namespace steklov::io
