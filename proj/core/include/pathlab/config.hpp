#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>

namespace pathlab {

/// Malformed or unknown entry in a config file.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Tolerances, cutoffs and grid sizes shared by every verification case.
struct Config {
  double quad_tol = 1e-9;
  double residual_tol = 1e-8;
  double fd_step_scale = 1.0;
  double min_abs_x = 1e-6;

  std::size_t scan_grid = 1'000'000;    // derivative sign scans
  std::size_t probe_grid = 1'000'000;   // max |f| probes
  std::size_t reparam_grid = 1000;
  std::size_t injectivity_grid = 2000;
  std::size_t directions = 360;
  std::size_t quotient_n = 100'000;     // inverse-counterexample quotients checked for n <= this
  std::size_t arclength_grid = 10'000;
};

/// key = value lines; '#' starts a comment, blank lines are ignored.
Config parse_config(std::istream& in);
Config load_config(const std::filesystem::path& path);

/// Sorted "key=value" lines with 17 significant digits.
std::string canonical_text(const Config& config);

/// 64-bit FNV-1a of canonical_text, as 16 hex digits.
std::string config_digest(const Config& config);

}  // namespace pathlab
