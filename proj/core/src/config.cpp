#include "pathlab/config.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <variant>

namespace pathlab {
namespace {

using Field = std::variant<double Config::*, std::size_t Config::*>;

const std::map<std::string, Field>& fields() {
  static const std::map<std::string, Field> table{
      {"arclength_grid", &Config::arclength_grid},
      {"directions", &Config::directions},
      {"fd_step_scale", &Config::fd_step_scale},
      {"injectivity_grid", &Config::injectivity_grid},
      {"min_abs_x", &Config::min_abs_x},
      {"probe_grid", &Config::probe_grid},
      {"quad_tol", &Config::quad_tol},
      {"quotient_n", &Config::quotient_n},
      {"reparam_grid", &Config::reparam_grid},
      {"residual_tol", &Config::residual_tol},
      {"scan_grid", &Config::scan_grid},
  };
  return table;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Config parse_config(std::istream& in) {
  Config config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string text = trim(line.substr(eq + 1));
    const auto it = fields().find(key);
    if (it == fields().end()) throw ConfigError("line " + std::to_string(line_no) + ": unknown key " + key);

    double value = 0.0;
    std::size_t used = 0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(value) || !(value > 0.0))
      throw ConfigError("line " + std::to_string(line_no) + ": " + key + " needs a positive number");

    std::visit(
        [&](auto member) {
          using T = std::remove_reference_t<decltype(config.*member)>;
          if constexpr (std::is_same_v<T, double>) {
            config.*member = value;
          } else {
            if (value != std::floor(value) || value > 1e12)
              throw ConfigError("line " + std::to_string(line_no) + ": " + key + " needs an integer");
            config.*member = static_cast<std::size_t>(value);
          }
        },
        it->second);
  }
  if (config.directions < 4) throw ConfigError("directions must be at least 4");
  return config;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse_config(in);
}

std::string canonical_text(const Config& config) {
  std::string out;
  char buf[64];
  for (const auto& [key, field] : fields()) {
    std::visit(
        [&](auto member) {
          const double v = static_cast<double>(config.*member);
          std::snprintf(buf, sizeof buf, "%.17g", v);
        },
        field);
    out += key + "=" + buf + "\n";
  }
  return out;
}

std::string config_digest(const Config& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : canonical_text(config)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace pathlab
