#include "steklov/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "steklov/error.hpp"

namespace steklov::io {
namespace {

std::vector<double> numbers(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) fail(ErrorCode::InvalidInput, std::string("missing array \"") + key + "\"");
  std::vector<double> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number()) fail(ErrorCode::InvalidInput, std::string("non-numeric entry in \"") + key + "\"");
    out.push_back(v.get<double>());
  }
  return out;
}

const char* parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

}  // namespace

PolygonSpec polygon_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::InvalidInput, "polygon spec must be an object");
  auto lengths = numbers(j, "lengths");
  if (j.contains("angles")) return PolygonSpec::from_angles(numbers(j, "angles"), std::move(lengths));
  if (j.contains("cosines")) {
    if (j.contains("sines")) return PolygonSpec::from_cosines(numbers(j, "cosines"), numbers(j, "sines"), std::move(lengths));
    return PolygonSpec::from_cosines(numbers(j, "cosines"), std::move(lengths));
  }
  fail(ErrorCode::InvalidInput, "polygon spec needs \"angles\" or \"cosines\"");
}

json to_json(const PolygonSpec& s) {
  json j;
  if (s.angles()) j["angles"] = *s.angles();
  j["cosines"] = s.cosines();
  j["lengths"] = s.lengths();
  return j;
}

CharPoly charpoly_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::InvalidInput, "characteristic polynomial must be an object");
  CharPoly F;
  F.freqs = numbers(j, "freqs");
  F.amps = numbers(j, "amps");
  if (!j.contains("const_term") || !j.at("const_term").is_number()) fail(ErrorCode::InvalidInput, "missing \"const_term\"");
  F.const_term = j.at("const_term").get<double>();
  F.validate();
  return F;
}

json to_json(const CharPoly& F) { return {{"freqs", F.freqs}, {"amps", F.amps}, {"const_term", F.const_term}}; }

json to_json(const RecoveryReport& r) {
  json j = to_json(r.poly);
  j["recovery"] = {{"perimeter_estimate", r.perimeter_estimate},
                   {"window", r.window},
                   {"T", r.T},
                   {"resolution", r.resolution},
                   {"dz", r.dz},
                   {"noise_floor", r.noise_floor},
                   {"c1", r.c1},
                   {"zero_count", r.zero_count},
                   {"tol_freq", r.suggested_tol_freq()},
                   {"tol_one", r.suggested_tol_one()}};
  return j;
}

SpectrumInput spectrum_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::InvalidInput, "spectrum must be an object");
  SpectrumInput s;
  s.values = numbers(j, "values");
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (s.values[i] < 0.0) fail(ErrorCode::InvalidInput, "spectrum entries must be >= 0");
    if (i > 0 && s.values[i] < s.values[i - 1]) fail(ErrorCode::InvalidInput, "spectrum must be sorted");
  }
  s.zeros = static_cast<int>(std::count(s.values.begin(), s.values.end(), 0.0));
  for (const char* key : {"zero_half_mult", "zero_count"}) {
    if (j.contains(key) && j.at(key).get<int>() != s.zeros)
      fail(ErrorCode::InvalidInput, std::string("\"") + key + "\" disagrees with the zero entries");
  }
  if (j.contains("sigma_max")) s.sigma_max = j.at("sigma_max").get<double>();
  return s;
}

json to_json(const QuasiSpectrum& S) {
  return {{"values", S.values}, {"zero_half_mult", S.zero_half_mult}, {"sigma_max", S.sigma_max}};
}

json to_json(const PerturbedSpectrum& S) {
  return {{"values", S.values}, {"zero_count", S.zero_count}, {"sigma_max", S.sigma_max}};
}

json to_json(const GeometryResult& g) {
  json comps = json::array();
  for (const auto& c : g.components)
    comps.push_back({{"arc_lengths", c.arc_lengths}, {"cosines", c.cosines}, {"parity", parity_name(c.parity)}});
  json j = {{"n", g.n},
            {"K", g.K},
            {"ordered_lengths", g.ordered_lengths},
            {"cosines", g.cosines},
            {"components", comps},
            {"underdetermined", g.underdetermined}};
  if (g.alternative) j["alternative"] = {{"side", g.alternative->side}, {"cos_phase_sum", g.alternative->cos_phase_sum}};
  if (!g.warnings.empty()) j["warnings"] = g.warnings;
  return j;
}

GeometryResult geometry_from_json(const json& j) {
  GeometryResult g;
  g.n = j.at("n").get<int>();
  g.K = j.at("K").get<int>();
  g.ordered_lengths = numbers(j, "ordered_lengths");
  g.cosines = numbers(j, "cosines");
  for (const auto& c : j.at("components")) {
    ExceptionalComponent comp;
    comp.arc_lengths = numbers(c, "arc_lengths");
    comp.cosines = numbers(c, "cosines");
    const std::string p = c.at("parity").get<std::string>();
    if (p != "even" && p != "odd") fail(ErrorCode::InvalidInput, "parity must be \"even\" or \"odd\"");
    comp.parity = p == "even" ? Parity::Even : Parity::Odd;
    g.components.push_back(std::move(comp));
  }
  g.underdetermined = j.value("underdetermined", false);
  return g;
}

json to_json(const AdmissibilityReport& r) {
  return {{"admissible", r.admissible()},         {"incommensurable", r.incommensurable},
          {"no_special", r.no_special},           {"has_exceptional", r.has_exceptional},
          {"min_combination", r.min_combination}, {"witness", r.witness},
          {"top_frequency_merged", r.top_frequency_merged}};
}

json to_json(const WeylReport& r) {
  return {{"max_deviation", r.max_deviation}, {"max_unit_count", r.max_unit_count}, {"window", r.window}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return json::parse(buf.str());
}

}  // namespace steklov::io
