#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "steklov/cli.hpp"
#include "steklov/error.hpp"
#include "steklov/geometry.hpp"
#include "steklov/json_io.hpp"

namespace steklov::cli {
namespace {

using nlohmann::json;

std::vector<double> numbers(const json& j) { return j.get<std::vector<double>>(); }

bool close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

bool close_up_to_sign(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  std::vector<double> neg(b.size());
  std::transform(b.begin(), b.end(), neg.begin(), [](double x) { return -x; });
  return close(a, b, tol) || close(a, neg, tol);
}

bool matrix_close(const SquareMatrix& M, const json& expected, double tol) {
  if (expected.size() != M.size()) return false;
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j)
      if (std::abs(M(i, j) - expected[i][j].get<double>()) > tol) return false;
  return true;
}

json matrix_json(const SquareMatrix& M) {
  json rows = json::array();
  for (std::size_t i = 0; i < M.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < M.size(); ++j) row.push_back(M(i, j));
    rows.push_back(row);
  }
  return rows;
}

// Partial expectations: only the fields present are compared.
bool charpoly_matches(const CharPoly& F, const json& expected, double tol) {
  if (!close(F.freqs, numbers(expected.at("freqs")), tol)) return false;
  if (expected.contains("amps") && !close(F.amps, numbers(expected.at("amps")), tol)) return false;
  if (expected.contains("const_term") && std::abs(F.const_term - expected.at("const_term").get<double>()) > tol)
    return false;
  return true;
}

std::vector<PolygonSpec> specs_of(const json& entry) {
  std::vector<PolygonSpec> out;
  for (const auto& s : entry.at("specs")) out.push_back(io::polygon_from_json(s));
  return out;
}

json finish(const json& entry, json result, const json& checks) {
  bool all = true;
  for (const auto& [k, v] : checks.items()) all = all && v.get<bool>();
  result["name"] = entry.at("name");
  result["description"] = entry.at("description");
  result["checks"] = checks;
  result["all_passed"] = all;
  return result;
}

json demo_single(const json& entry, bool exceptional) {
  const json& exp = entry.at("expected");
  const PolygonSpec spec = io::polygon_from_json(entry.at("spec"));
  const CharPoly F = build_char_poly(spec);
  const SortedLengths SL = recover_sorted_lengths(F);
  const AdjacencyData D = build_adjacency(F, SL);
  const int K = count_exceptional(D);
  const GeometryResult G = recover_order_and_cosines(F, SL, D);
  constexpr double tol = 1e-12;

  json checks;
  if (exp.contains("charpoly")) checks["charpoly"] = charpoly_matches(F, exp.at("charpoly"), tol);
  if (exp.contains("sorted_lengths")) checks["sorted_lengths"] = close(SL.values, numbers(exp.at("sorted_lengths")), tol);
  checks["Rp"] = matrix_close(D.Rp, exp.at("Rp"), tol);
  checks["Dp"] = matrix_close(D.Dp, exp.at("Dp"), tol);
  checks["K"] = K == exp.at("K").get<int>();
  if (exp.contains("ordered_lengths")) {
    checks["ordered_lengths"] = close(G.ordered_lengths, numbers(exp.at("ordered_lengths")), tol);
    checks["cosines"] = close_up_to_sign(G.cosines, numbers(exp.at("cosines")), tol);
  }
  if (exceptional) {
    json e = {{"n", static_cast<int>(spec.size())},
              {"K", K},
              {"ordered_lengths", json::array()},
              {"cosines", json::array()},
              {"components", exp.at("components")}};
    GeometryResult want = io::geometry_from_json(e);
    bool same = want.components.size() == G.components.size();
    for (std::size_t i = 0; same && i < G.components.size(); ++i) {
      const auto& a = G.components[i];
      const auto& b = want.components[i];
      same = a.parity == b.parity && close(a.arc_lengths, b.arc_lengths, tol) && close(a.cosines, b.cosines, tol);
    }
    checks["components"] = same;
  }
  checks["loose_equivalent_to_source"] = loose_equivalent(G, geometry_of(spec), 1e-9);

  json result = {{"spec", io::to_json(spec)},
                 {"charpoly", io::to_json(F)},
                 {"sorted_lengths", SL.values},
                 {"Rp", matrix_json(D.Rp)},
                 {"Dp", matrix_json(D.Dp)},
                 {"geometry", io::to_json(G)}};
  if (!D.warnings.empty()) result["warnings"] = D.warnings;
  return finish(entry, std::move(result), checks);
}

// Every spec must produce the expected polynomial, and all of them the same one.
json demo_isospectral(const json& entry, double tol, json& result, json& checks) {
  const auto specs = specs_of(entry);
  json specs_out = json::array(), polys = json::array();
  std::vector<CharPoly> F;
  for (const auto& s : specs) {
    F.push_back(build_char_poly(s));
    specs_out.push_back(io::to_json(s));
    polys.push_back(io::to_json(F.back()));
  }
  bool match = true, equal = true;
  for (const auto& f : F) {
    match = match && charpoly_matches(f, entry.at("expected").at("charpoly"), tol);
    equal = equal && charpoly_close(f, F.front(), tol);
  }
  checks["matches_expected"] = match;
  checks["all_equal"] = equal;
  result["specs"] = specs_out;
  result["charpolys"] = polys;
  return F.empty() ? json() : io::to_json(F.front());
}

json demo_family(const json& entry, double tol) {
  json result, checks;
  demo_isospectral(entry, tol, result, checks);
  return finish(entry, std::move(result), checks);
}

json demo_refusal(const json& entry) {
  json result, checks;
  demo_isospectral(entry, 1e-10, result, checks);
  const auto allowed = entry.at("expected").at("inverse_errors").get<std::vector<std::string>>();
  json errors = json::array();
  bool refused = true;
  for (const auto& s : specs_of(entry)) {
    try {
      recover_geometry(build_char_poly(s));
      errors.push_back(nullptr);
      refused = false;
    } catch (const Error& e) {
      const std::string code(to_string(e.code()));
      errors.push_back({{"error", code}, {"message", e.what()}});
      refused = refused && std::find(allowed.begin(), allowed.end(), code) != allowed.end();
    }
  }
  checks["inverse_refused"] = refused;
  result["inverse_errors"] = errors;
  return finish(entry, std::move(result), checks);
}

json demo_twogon(const json& entry) {
  json result, checks;
  const CharPoly F = build_char_poly(specs_of(entry).front());
  demo_isospectral(entry, 1e-12, result, checks);
  const GeometryResult G = recover_geometry(F);
  checks["underdetermined"] = G.underdetermined == entry.at("expected").at("underdetermined").get<bool>();
  bool alt_ok = G.alternative.has_value();
  if (alt_ok) {
    alt_ok = std::abs(G.alternative->side - F.freqs.front() / 2.0) <= 1e-12 &&
             std::abs(G.alternative->cos_phase_sum + F.const_term) <= 1e-12;
  }
  checks["alternative"] = alt_ok;
  result["geometry"] = io::to_json(G);
  return finish(entry, std::move(result), checks);
}

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = {"ex3.1",           "ex3.2",
                                                 "ex3.3-parallelogram", "ex3.4-triangles",
                                                 "ex3.5-commensurable", "ex3.6-twogon"};
  return names;
}

std::string default_corpus_dir() {
  if (const char* env = std::getenv("STEKLOV_CORPUS")) return env;
  return STEKLOV_CORPUS_DIR;
}

json run_demo(const std::string& name, const std::string& corpus_dir) {
  const auto& names = demo_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw ConfigError("unknown demo " + name);
  json entry;
  const std::string path = corpus_dir + "/" + name + ".json";
  try {
    entry = io::read_json_file(path);
  } catch (const std::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  if (name == "ex3.1") return demo_single(entry, false);
  if (name == "ex3.2") return demo_single(entry, true);
  if (name == "ex3.3-parallelogram" || name == "ex3.4-triangles") return demo_family(entry, 1e-12);
  if (name == "ex3.5-commensurable") return demo_refusal(entry);
  return demo_twogon(entry);
}

}  // namespace steklov::cli
