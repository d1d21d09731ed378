#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace steklov::cli {

enum class Command { Forward, Spectrum, Reconstruct, Geometry, Roundtrip, Oracle, Demo };

struct RunConfig {
  Command command = Command::Forward;
  std::string input;
  std::string output;  // empty means the output stream
  std::string csv;     // reconstruct: dump z, Re A(z)
  std::string demo;
  std::string corpus;  // empty means the built-in corpus directory
  std::optional<double> sigma_max;
  std::optional<double> window;
  std::optional<double> margin;
  std::optional<double> T;
  std::optional<double> dz;
  std::optional<double> theta;
  std::optional<double> tol_freq;
  std::optional<double> tol_one;
  std::optional<double> perturb;  // amplitude A of the synthetic perturbation
  double epsilon = 1.0;
  std::uint64_t seed = 1;
  std::optional<int> n;  // roundtrip on a random spec of this size
  std::size_t roots = 4000;
  bool strict = false;
  bool force_zero = false;
};

// Raised for bad flags, unreadable files and violated config invariants (exit 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Executes one command; the JSON result goes to cfg.output or out.
// Module errors propagate as steklov::Error.
void execute(const RunConfig& cfg, std::ostream& out);

// Full entry point: parses args (without the program name), runs, and maps
// failures to exit codes 1 (module error) and 2 (config error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const std::vector<std::string>& demo_names();
std::string default_corpus_dir();
// Loads the named corpus entry and recomputes its objects; "all_passed" summarises the checks.
nlohmann::json run_demo(const std::string& name, const std::string& corpus_dir);

}  // namespace steklov::cli
