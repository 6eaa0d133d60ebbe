#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "helisurf/cli.hpp"
#include "helisurf/errors.hpp"

namespace helisurf::cli {

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "kind", "zeta", "phi",  "radius", "height", "twist", "pitch", "b",      "domain",
      "nu",   "nv",   "tol_quad", "tol", "fd_step", "h",  "u0",     "output", "tolerances"};
  return keys;
}

double number_field(const nlohmann::json& j, const std::string& key) {
  const auto& value = j.at(key);
  if (!value.is_number()) throw ConfigError("config: '" + key + "' must be a number");
  return value.get<double>();
}

std::string string_field(const nlohmann::json& j, const std::string& key) {
  const auto& value = j.at(key);
  if (!value.is_string()) throw ConfigError("config: '" + key + "' must be a string");
  return value.get<std::string>();
}

std::size_t count_field(const nlohmann::json& j, const std::string& key) {
  const auto& value = j.at(key);
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw ConfigError("config: '" + key + "' must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ConfigError(std::string("config: ") + name + " must be positive and finite");
  }
}

}  // namespace

void Config::validate() const {
  if (!has_domain) throw ConfigError("config: domain [u_min, u_max] is required");
  if (!(u_min < u_max) || !std::isfinite(u_min) || !std::isfinite(u_max)) {
    throw ConfigError("config: domain needs finite u_min < u_max");
  }
  if (nu < 2 || nv < 2) throw ConfigError("config: nu and nv must be at least 2");
  require_positive(tol_quad, "tol_quad");
  require_positive(tol, "tol");
  require_positive(fd_step, "fd_step");
  if (h) require_positive(*h, "h");
  for (const auto& [name, value] : tolerances) require_positive(value, name.c_str());
  if (u0 && !(*u0 >= u_min && *u0 <= u_max)) throw ConfigError("config: u0 outside the domain");

  switch (kind) {
    case SurfaceKind::Helicoidal:
      if (zeta.empty() || phi.empty()) throw ConfigError("config: helicoidal needs zeta and phi");
      if (!pitch) throw ConfigError("config: helicoidal needs a pitch");
      if (*pitch == 0.0 || !std::isfinite(*pitch)) {
        throw ConfigError("config: pitch must be nonzero for the helicoidal kind "
                          "(enter a = 0 surfaces as kind \"rotational\")");
      }
      break;
    case SurfaceKind::Rotational:
      if (radius.empty() || height.empty()) {
        throw ConfigError("config: rotational needs radius and height");
      }
      break;
    case SurfaceKind::SameGauss:
      if (zeta.empty()) throw ConfigError("config: samegauss needs zeta");
      if (!pitch || !b) throw ConfigError("config: samegauss needs pitch and b");
      require_positive(*pitch, "pitch");
      require_positive(*b, "b");
      break;
  }
}

Interval Config::domain() const { return Interval::make(u_min, u_max); }

double Config::anchor() const { return u0 ? *u0 : 0.5 * (u_min + u_max); }

ParameterGrid Config::grid() const { return ParameterGrid::over(domain(), nu, nv); }

Config config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!known_keys().count(key)) throw ConfigError("config: unknown key '" + key + "'");
  }

  Config c;
  if (j.contains("kind")) {
    const std::string kind = string_field(j, "kind");
    if (kind == "helicoidal") {
      c.kind = SurfaceKind::Helicoidal;
    } else if (kind == "rotational") {
      c.kind = SurfaceKind::Rotational;
    } else if (kind == "samegauss") {
      c.kind = SurfaceKind::SameGauss;
    } else {
      throw ConfigError("config: unknown kind '" + kind + "'");
    }
  }
  if (j.contains("zeta")) c.zeta = string_field(j, "zeta");
  if (j.contains("phi")) c.phi = string_field(j, "phi");
  if (j.contains("radius")) c.radius = string_field(j, "radius");
  if (j.contains("height")) c.height = string_field(j, "height");
  if (j.contains("twist")) c.twist = string_field(j, "twist");
  if (j.contains("pitch")) c.pitch = number_field(j, "pitch");
  if (j.contains("b")) c.b = number_field(j, "b");
  if (j.contains("domain")) {
    const auto& d = j.at("domain");
    if (!d.is_array() || d.size() != 2 || !d[0].is_number() || !d[1].is_number()) {
      throw ConfigError("config: domain must be [u_min, u_max]");
    }
    c.u_min = d[0].get<double>();
    c.u_max = d[1].get<double>();
    c.has_domain = true;
  }
  if (j.contains("nu")) c.nu = count_field(j, "nu");
  if (j.contains("nv")) c.nv = count_field(j, "nv");
  if (j.contains("tol_quad")) c.tol_quad = number_field(j, "tol_quad");
  if (j.contains("tol")) c.tol = number_field(j, "tol");
  if (j.contains("fd_step")) c.fd_step = number_field(j, "fd_step");
  if (j.contains("h")) c.h = number_field(j, "h");
  if (j.contains("u0")) c.u0 = number_field(j, "u0");
  if (j.contains("output")) c.output = string_field(j, "output");
  if (j.contains("tolerances")) {
    const auto& t = j.at("tolerances");
    if (!t.is_object()) throw ConfigError("config: tolerances must be an object");
    for (const auto& [name, value] : t.items()) {
      if (!value.is_number()) throw ConfigError("config: tolerance '" + name + "' must be a number");
      c.tolerances[name] = value.get<double>();
    }
  }
  return c;
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  return config_from_json(j);
}

}  // namespace helisurf::cli
