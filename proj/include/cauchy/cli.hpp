#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace cauchy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitTolerance = 2;
inline constexpr int kExitConfig = 3;

/// Everything one invocation needs. Empty optionals fall back to the
/// per-command defaults.
struct RunConfig {
  std::string command;  // validate | coeffs | bound | apply | verify | report
  std::string suite;    // verify: representation | equivalence | isometry | convergence
  std::string domain;   // preset name or path to a domain spec
  std::optional<std::size_t> M;  // empty: automatic truncation
  std::optional<std::size_t> grid_N;
  std::size_t N_quad = 512;
  std::size_t N = 256;
  std::size_t probes = 16;
  std::size_t degree = 8;
  std::optional<std::size_t> samples;
  std::size_t trials = 200;
  std::uint64_t seed = 7;
  std::optional<double> tolerance;
  std::vector<std::size_t> schedule{2, 4, 8, 16};
  std::string f_path;
  std::string out_path;
  std::string format = "json";  // json | csv

  /// Throws ConfigError for knobs outside their ranges.
  void check() const;
};

/// Applies the keys of a config file on top of base. Unknown keys and
/// ill-typed values throw ConfigError.
RunConfig apply_config_file(const nlohmann::json& file, RunConfig base);

/// Runs one command, writing its document to out (or config.out_path) and
/// error JSON to err. Returns 0, or 1 on validation failure, 2 on a
/// tolerance breach, 3 on a config error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (flag > config file > default) and runs.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cauchy::cli
