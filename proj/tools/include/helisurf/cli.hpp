#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "helisurf/bour.hpp"
#include "helisurf/lb3.hpp"
#include "helisurf/surfaces.hpp"
#include "helisurf/verify.hpp"

namespace helisurf::cli {

enum class SurfaceKind { Helicoidal, Rotational, SameGauss };

struct Config {
  SurfaceKind kind = SurfaceKind::Helicoidal;
  std::string zeta;
  std::string phi;
  std::string radius;
  std::string height;
  std::string twist;
  std::optional<double> pitch;
  std::optional<double> b;
  double u_min = 0.0;
  double u_max = 0.0;
  bool has_domain = false;
  std::size_t nu = 20;
  std::size_t nv = 20;
  double tol_quad = 1e-10;
  double tol = 1e-6;        // III-minimality tolerance for delta3
  double fd_step = 1e-3;    // base step of the Brioschi oracle
  std::optional<double> h;  // delta3 outer step
  std::optional<double> u0;
  std::string output = "-";
  std::map<std::string, double> tolerances;  // per-check overrides for verify

  /// Throws ConfigError on any invariant violation.
  void validate() const;
  Interval domain() const;
  double anchor() const;
  ParameterGrid grid() const;
};

/// Reads the JSON config schema documented in docs/config.schema.json.
/// Unknown keys are rejected. Throws ConfigError.
Config config_from_json(const nlohmann::json& j);
Config load_config_file(const std::string& path);

/// Surfaces described by a config. `image` selects the rotational Bour
/// image of a helicoidal / same-Gauss-map configuration.
Surface build_surface(const Config& config, bool image = false);

/// Writes vertices (row-major, u outer), per-vertex normals and two triangles
/// per grid cell. Returns the number of vertices whose normal degenerated
/// (emitted as zero vectors, with a warning on `warnings`).
std::size_t export_obj(const Surface& surface, const ParameterGrid& grid, std::ostream& out,
                       std::ostream& warnings);
/// Throws ConfigError when the file cannot be written.
std::size_t export_obj(const Surface& surface, const ParameterGrid& grid, const std::string& path,
                       std::ostream& warnings);

/// Locale-independent number formatting: shortest round-trip form, or
/// `significant` significant digits when given.
std::string format_number(double value, std::optional<int> significant = std::nullopt);

nlohmann::json to_json(const CheckReport& report);
nlohmann::json verify_report(const Config& config, const std::vector<CheckReport>& reports);

/// Runs every verify gate for a configuration.
std::vector<CheckReport> run_checks(const Config& config);

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace helisurf::cli
