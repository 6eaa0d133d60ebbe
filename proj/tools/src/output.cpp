#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "helisurf/cli.hpp"
#include "helisurf/errors.hpp"
#include "helisurf/forms.hpp"

namespace helisurf::cli {

std::string format_number(double value, std::optional<int> significant) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // no "-0"
  std::array<char, 64> buf{};
  const auto result =
      significant
          ? std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general,
                          *significant)
          : std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), result.ptr);
}

namespace {

constexpr int kObjDigits = 9;

std::string obj_triple(const char* tag, const Vec3& p) {
  std::string line(tag);
  for (int i = 0; i < 3; ++i) {
    line += ' ';
    line += format_number(p[i], kObjDigits);
  }
  line += '\n';
  return line;
}

}  // namespace

std::size_t export_obj(const Surface& surface, const ParameterGrid& grid, std::ostream& out,
                       std::ostream& warnings) {
  if (grid.nu < 2 || grid.nv < 2) throw ConfigError("mesh: grid needs at least 2x2 points");
  std::string body;
  std::string normals;
  std::size_t degenerate = 0;
  for (const auto& [u, v] : grid.points()) {
    const SurfaceJet j = evaluate(surface, u, v);
    body += obj_triple("v", j.x);
    Vec3 n = Vec3::Zero();
    try {
      n = gauss_map(j);
    } catch (const DegenerateError&) {
      ++degenerate;
      warnings << "warning: degenerate normal at (u, v) = (" << format_number(u) << ", "
               << format_number(v) << "), written as zero vector\n";
    }
    normals += obj_triple("vn", n);
  }

  out << "# helisurf mesh " << grid.nu << 'x' << grid.nv << '\n';
  out << body << normals;
  // 1-based indices; vertex (i, j) sits at i * nv + j + 1.
  auto index = [&](std::size_t i, std::size_t j) { return std::to_string(i * grid.nv + j + 1); };
  auto corner = [&](std::size_t i, std::size_t j) {
    const std::string k = index(i, j);
    return k + "//" + k;
  };
  for (std::size_t i = 0; i + 1 < grid.nu; ++i) {
    for (std::size_t j = 0; j + 1 < grid.nv; ++j) {
      out << "f " << corner(i, j) << ' ' << corner(i + 1, j) << ' ' << corner(i + 1, j + 1)
          << '\n';
      out << "f " << corner(i, j) << ' ' << corner(i + 1, j + 1) << ' ' << corner(i, j + 1)
          << '\n';
    }
  }
  return degenerate;
}

std::size_t export_obj(const Surface& surface, const ParameterGrid& grid, const std::string& path,
                       std::ostream& warnings) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  const std::size_t degenerate = export_obj(surface, grid, out, warnings);
  out.flush();
  if (!out) throw ConfigError("write to '" + path + "' failed");
  return degenerate;
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["points_checked"] = r.points_checked;
  if (std::isfinite(r.max_abs_error)) {
    j["max_abs_error"] = r.max_abs_error;
  } else {
    j["max_abs_error"] = nullptr;
  }
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  j["worst"] = {{"u", r.worst_u}, {"v", r.worst_v}};
  return j;
}

namespace {

const char* kind_name(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::Helicoidal: return "helicoidal";
    case SurfaceKind::Rotational: return "rotational";
    case SurfaceKind::SameGauss: return "samegauss";
  }
  return "helicoidal";
}

}  // namespace

nlohmann::json verify_report(const Config& c, const std::vector<CheckReport>& reports) {
  nlohmann::json surface;
  surface["kind"] = kind_name(c.kind);
  auto text = [&](const char* key, const std::string& value) {
    if (!value.empty()) surface[key] = value;
  };
  text("zeta", c.zeta);
  text("phi", c.phi);
  text("radius", c.radius);
  text("height", c.height);
  text("twist", c.twist);
  if (c.pitch) surface["pitch"] = *c.pitch;
  if (c.b) surface["b"] = *c.b;

  nlohmann::json j;
  j["tool"] = "helisurf";
  j["version"] = HELISURF_VERSION;
  j["surface"] = surface;
  j["domain"] = {c.u_min, c.u_max};
  j["grid"] = {{"nu", c.nu}, {"nv", c.nv}};
  j["anchor"] = c.anchor();
  j["tol_quad"] = c.tol_quad;
  j["fd_step"] = c.fd_step;
  j["checks"] = nlohmann::json::array();
  bool passed = !reports.empty();
  for (const auto& r : reports) {
    j["checks"].push_back(to_json(r));
    passed = passed && r.passed;
  }
  j["passed"] = passed;
  return j;
}

}  // namespace helisurf::cli
