#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>

#include "steklov/cli.hpp"
#include "steklov/error.hpp"
#include "steklov/graph_oracle.hpp"
#include "steklov/json_io.hpp"
#include "steklov/pipeline.hpp"
#include "steklov/random_spec.hpp"

namespace steklov::cli {
namespace {

using nlohmann::json;

json load(const std::string& path) {
  if (path.empty()) throw ConfigError("--input is required");
  try {
    return io::read_json_file(path);
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw ConfigError(e.what());
  }
}

void emit(const RunConfig& cfg, std::ostream& out, const json& j) {
  if (cfg.output.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw ConfigError("cannot write " + cfg.output);
  f << j.dump(2) << '\n';
}

RecoveryOpts recovery_opts(const RunConfig& cfg) {
  RecoveryOpts r;
  if (cfg.margin) r.margin = *cfg.margin;
  if (cfg.window) r.window = *cfg.window;
  if (cfg.T) r.T = *cfg.T;
  if (cfg.dz) r.dz = *cfg.dz;
  if (cfg.theta) r.theta = *cfg.theta;
  return r;
}

void check_positive(const std::optional<double>& v, const char* name) {
  if (v && !(*v > 0.0)) throw ConfigError(std::string(name) + " must be positive");
}

void validate(const RunConfig& cfg) {
  check_positive(cfg.sigma_max, "--sigma-max");
  check_positive(cfg.window, "--window");
  check_positive(cfg.margin, "--margin");
  check_positive(cfg.T, "--T");
  check_positive(cfg.dz, "--dz");
  check_positive(cfg.theta, "--theta");
  check_positive(cfg.tol_freq, "--tol-freq");
  check_positive(cfg.tol_one, "--tol-one");
  if (!(cfg.epsilon > 0.0)) throw ConfigError("--epsilon must be positive");
  if (cfg.perturb && *cfg.perturb < 0.0) throw ConfigError("--perturb must be non-negative");
  if (cfg.theta && *cfg.theta >= 1.0) throw ConfigError("--theta must be below 1");
  if (cfg.T && cfg.window && *cfg.T > *cfg.window) throw ConfigError("--T may not exceed --window");
}

void write_csv(const std::string& path, const MeanTransform& A) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path);
  f.precision(17);
  f << "z,re_A\n";
  for (std::size_t i = 0; i < A.z.size(); ++i) f << A.z[i] << ',' << A.values[i].real() << '\n';
}

GeometryOpts geometry_opts(const RunConfig& cfg, const json& input) {
  GeometryOpts g;
  g.strict = cfg.strict;
  if (input.contains("recovery")) {
    const json& rec = input.at("recovery");
    g.tol_freq = rec.value("tol_freq", 0.0);
    g.tol_one = rec.value("tol_one", g.tol_one);
  }
  if (cfg.tol_freq) g.tol_freq = *cfg.tol_freq;
  if (cfg.tol_one) g.tol_one = *cfg.tol_one;
  return g;
}

void cmd_forward(const RunConfig& cfg, std::ostream& out) {
  const PolygonSpec spec = io::polygon_from_json(load(cfg.input));
  emit(cfg, out, io::to_json(build_char_poly(spec)));
}

void cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.sigma_max) throw ConfigError("--sigma-max is required");
  const CharPoly F = io::charpoly_from_json(load(cfg.input));
  const QuasiSpectrum S = find_quasi_eigenvalues(F, *cfg.sigma_max);
  if (!cfg.perturb) {
    emit(cfg, out, io::to_json(S));
    return;
  }
  PerturbOpts p;
  p.force_zero_first = cfg.force_zero;
  emit(cfg, out, io::to_json(perturb_spectrum(S, *cfg.perturb, cfg.epsilon, cfg.seed, p)));
}

void cmd_reconstruct(const RunConfig& cfg, std::ostream& out) {
  const io::SpectrumInput S = io::spectrum_from_json(load(cfg.input));
  RecoveryOpts opts = recovery_opts(cfg);
  if (cfg.window && !S.values.empty() && S.values.back() < opts.margin * *cfg.window)
    throw ConfigError("--window needs spectrum entries up to margin * window");
  opts.keep_transform = !cfg.csv.empty();
  const RecoveryReport rep = recover_charpoly_detailed(S.values, opts);
  if (!cfg.csv.empty()) write_csv(cfg.csv, *rep.transform);
  emit(cfg, out, io::to_json(rep));
}

void cmd_geometry(const RunConfig& cfg, std::ostream& out) {
  const json input = load(cfg.input);
  const CharPoly F = io::charpoly_from_json(input);
  emit(cfg, out, io::to_json(recover_geometry(F, geometry_opts(cfg, input))));
}

void cmd_roundtrip(const RunConfig& cfg, std::ostream& out) {
  PolygonSpec spec = [&] {
    if (!cfg.input.empty()) return io::polygon_from_json(load(cfg.input));
    if (!cfg.n) throw ConfigError("roundtrip needs --input or --n");
    if (*cfg.n < 1 || *cfg.n > static_cast<int>(kMaxSides)) throw ConfigError("--n must be in 1..20");
    return random_admissible_spec(static_cast<std::size_t>(*cfg.n), cfg.seed);
  }();
  RoundtripOpts opts;
  opts.target_roots = cfg.roots;
  if (cfg.sigma_max) opts.sigma_max = *cfg.sigma_max;
  if (cfg.perturb) {
    opts.perturb_A = *cfg.perturb;
    opts.perturb_eps = cfg.epsilon;
    opts.perturb_seed = cfg.seed;
  }
  opts.recovery = recovery_opts(cfg);
  if (cfg.tol_freq) opts.tol_freq = *cfg.tol_freq;
  if (cfg.tol_one) opts.tol_one = *cfg.tol_one;
  opts.strict = cfg.strict;

  const RoundtripResult r = run_roundtrip(spec, opts);
  json spectrum = {{"count", r.spectrum.values.size()},
                   {"zero_half_mult", r.spectrum.zero_half_mult},
                   {"sigma_max", r.spectrum.sigma_max},
                   {"perturbed", r.perturbed.has_value()}};
  emit(cfg, out,
       {{"spec", io::to_json(spec)},
        {"charpoly", io::to_json(r.truth)},
        {"spectrum", spectrum},
        {"weyl", io::to_json(r.weyl)},
        {"recovered", io::to_json(r.recovery)},
        {"max_amp_error", r.max_amp_error},
        {"geometry", io::to_json(r.geometry)},
        {"expected", io::to_json(r.expected)},
        {"loose_equivalent", r.equivalent}});
}

void cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const PolygonSpec spec = io::polygon_from_json(load(cfg.input));
  const double sigma_max = cfg.sigma_max.value_or(30.0);
  const QuasiSpectrum A = find_quasi_eigenvalues(build_char_poly(spec), sigma_max);
  const QuasiSpectrum B = graph_eigenvalues(make_circle_graph(spec), sigma_max);
  json dev = nullptr;
  bool agree = A.values.size() == B.values.size();
  if (agree) {
    double d = 0.0;
    for (std::size_t i = 0; i < A.values.size(); ++i) d = std::max(d, std::abs(A.values[i] - B.values[i]));
    dev = d;
    agree = d <= 1e-8;
  }
  emit(cfg, out,
       {{"charpoly_spectrum", io::to_json(A)},
        {"graph_spectrum", io::to_json(B)},
        {"max_deviation", dev},
        {"agree", agree}});
}

void add_recovery_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--window", cfg.window, "evaluation window sigma_win");
  sub->add_option("--margin", cfg.margin, "spectrum cutoff over window");
  sub->add_option("--T", cfg.T, "averaging length");
  sub->add_option("--dz", cfg.dz, "frequency grid step");
  sub->add_option("--theta", cfg.theta, "peak threshold relative to the largest peak");
}

void add_geometry_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--tol-freq", cfg.tol_freq, "absolute frequency matching tolerance");
  sub->add_option("--tol-one", cfg.tol_one, "tolerance of the D' < 1 adjacency test");
  sub->add_flag("--strict", cfg.strict, "reject noisy adjacency rows");
}

}  // namespace

void execute(const RunConfig& cfg, std::ostream& out) {
  validate(cfg);
  switch (cfg.command) {
    case Command::Forward: return cmd_forward(cfg, out);
    case Command::Spectrum: return cmd_spectrum(cfg, out);
    case Command::Reconstruct: return cmd_reconstruct(cfg, out);
    case Command::Geometry: return cmd_geometry(cfg, out);
    case Command::Roundtrip: return cmd_roundtrip(cfg, out);
    case Command::Oracle: return cmd_oracle(cfg, out);
    case Command::Demo: {
      const json j = run_demo(cfg.demo, cfg.corpus.empty() ? default_corpus_dir() : cfg.corpus);
      emit(cfg, out, j);
      if (!j.at("all_passed").get<bool>()) throw std::runtime_error("demo " + cfg.demo + " failed its checks");
      return;
    }
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Forward and inverse quasi-eigenvalue maps for curvilinear polygons", "steklov"};
  app.require_subcommand(1);

  auto io_flags = [&](CLI::App* sub) {
    sub->add_option("-i,--input", cfg.input, "input JSON file");
    sub->add_option("-o,--output", cfg.output, "output JSON file (default: stdout)");
  };
  auto* forward = app.add_subcommand("forward", "polygon spec -> characteristic polynomial");
  io_flags(forward);
  auto* spectrum = app.add_subcommand("spectrum", "characteristic polynomial -> quasi-eigenvalues");
  io_flags(spectrum);
  spectrum->add_option("--sigma-max", cfg.sigma_max, "end of the root window");
  spectrum->add_option("--perturb", cfg.perturb, "perturbation amplitude A");
  spectrum->add_option("--epsilon", cfg.epsilon, "perturbation decay exponent");
  spectrum->add_option("--seed", cfg.seed, "perturbation seed");
  spectrum->add_flag("--force-zero", cfg.force_zero, "set the first perturbed entry to 0");
  auto* reconstruct = app.add_subcommand("reconstruct", "spectrum -> characteristic polynomial");
  io_flags(reconstruct);
  add_recovery_flags(reconstruct, cfg);
  reconstruct->add_option("--csv", cfg.csv, "write z, Re A(z) to this file");
  auto* geometry = app.add_subcommand("geometry", "characteristic polynomial -> lengths, order, cosines");
  io_flags(geometry);
  add_geometry_flags(geometry, cfg);
  auto* roundtrip = app.add_subcommand("roundtrip", "spec -> spectrum -> polynomial -> geometry");
  io_flags(roundtrip);
  roundtrip->add_option("--n", cfg.n, "random spec size (when no --input)");
  roundtrip->add_option("--seed", cfg.seed, "random spec and perturbation seed");
  roundtrip->add_option("--roots", cfg.roots, "approximate number of roots to compute");
  roundtrip->add_option("--sigma-max", cfg.sigma_max, "end of the root window (overrides --roots)");
  roundtrip->add_option("--perturb", cfg.perturb, "perturbation amplitude A");
  roundtrip->add_option("--epsilon", cfg.epsilon, "perturbation decay exponent");
  add_recovery_flags(roundtrip, cfg);
  add_geometry_flags(roundtrip, cfg);
  auto* oracle = app.add_subcommand("oracle", "compare polynomial roots with the graph secular equation");
  io_flags(oracle);
  oracle->add_option("--sigma-max", cfg.sigma_max, "end of the root window (default 30)");
  auto* demo = app.add_subcommand("demo", "recompute a corpus example");
  demo->add_option("name", cfg.demo, "example name")->required()->check(CLI::IsMember(demo_names()));
  demo->add_option("--corpus", cfg.corpus, "corpus directory");
  demo->add_option("-o,--output", cfg.output, "output JSON file (default: stdout)");

  auto error_json = [&](std::string_view code, const std::string& msg) {
    err << json{{"error", code}, {"message", msg}}.dump() << '\n';
  };

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    error_json("ConfigError", e.what());
    return 2;
  }

  const std::pair<CLI::App*, Command> table[] = {
      {forward, Command::Forward},   {spectrum, Command::Spectrum}, {reconstruct, Command::Reconstruct},
      {geometry, Command::Geometry}, {roundtrip, Command::Roundtrip}, {oracle, Command::Oracle},
      {demo, Command::Demo}};
  for (const auto& [sub, c] : table)
    if (sub->parsed()) cfg.command = c;

  try {
    execute(cfg, out);
  } catch (const ConfigError& e) {
    error_json("ConfigError", e.what());
    return 2;
  } catch (const Error& e) {
    error_json(to_string(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    error_json("Failure", e.what());
    return 1;
  }
  return 0;
}

}  // namespace steklov::cli
