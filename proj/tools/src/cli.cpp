#include "helisurf/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "helisurf/errors.hpp"
#include "helisurf/forms.hpp"

namespace helisurf::cli {

namespace {

ScalarMap parse_field(const char* field, const std::string& text) {
  try {
    return ScalarMap::from_text(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(field) + ": " + e.what(), e.offset(), e.expected());
  }
}

HelicoidalSurface helicoidal_from(const Config& c) {
  ProfileCurve profile{parse_field("zeta", c.zeta), parse_field("phi", c.phi), c.domain()};
  return HelicoidalSurface(std::move(profile), *c.pitch);
}

SameGaussPair same_gauss_from(const Config& c) {
  return same_gauss_pair(parse_field("zeta", c.zeta), *c.pitch, *c.b, c.domain(), c.anchor(),
                         c.tol_quad);
}

VerifySettings settings_from(const Config& c) {
  VerifySettings s;
  s.anchor = c.anchor();
  s.quad_tol = c.tol_quad;
  s.brioschi_step = c.fd_step;
  const std::map<std::string, double*> slots{
      {"isometry", &s.isometry_tol},
      {"curvature_correspondence", &s.curvature_tol},
      {"closed_form_curvature", &s.closed_form_tol},
      {"gauss_map_coincidence", &s.gauss_map_tol},
      {"brioschi_curvature", &s.brioschi_tol},
      {"shape_operator", &s.shape_tol},
      {"minimality_equivalence", &s.minimality_tol},
      {"rotational_mean_curvature", &s.rotational_mean_tol},
      {"profile_minimality", &s.profile_minimality_tol},
      {"catenoid_closure", &s.catenoid_closure_tol},
  };
  for (const auto& [name, value] : c.tolerances) {
    const auto it = slots.find(name);
    if (it == slots.end()) throw ConfigError("config: unknown tolerance '" + name + "'");
    *it->second = value;
  }
  return s;
}

}  // namespace

Surface build_surface(const Config& c, bool image) {
  c.validate();
  switch (c.kind) {
    case SurfaceKind::Helicoidal: {
      HelicoidalSurface h = helicoidal_from(c);
      if (!image) return h;
      return bour_image(h, c.anchor(), c.tol_quad).surface();
    }
    case SurfaceKind::Rotational: {
      if (image) throw ConfigError("--image needs a helicoidal or samegauss surface");
      RotationalSurface r{parse_field("radius", c.radius), parse_field("height", c.height),
                          ScalarMap::zero(), c.domain(), false};
      if (!c.twist.empty()) {
        r.twist = parse_field("twist", c.twist);
        r.has_twist = true;
      }
      return r;
    }
    case SurfaceKind::SameGauss: {
      SameGaussPair pair = same_gauss_from(c);
      if (!image) return pair.helicoidal;
      return pair.image.surface();
    }
  }
  throw ConfigError("unknown surface kind");
}

std::vector<CheckReport> run_checks(const Config& c) {
  c.validate();
  const VerifySettings s = settings_from(c);
  const ParameterGrid grid = c.grid();
  switch (c.kind) {
    case SurfaceKind::Helicoidal:
      return verify_helicoidal(helicoidal_from(c), grid, s);
    case SurfaceKind::Rotational:
      return verify_rotational(std::get<RotationalSurface>(build_surface(c)), grid, s);
    case SurfaceKind::SameGauss:
      return verify_same_gauss(same_gauss_from(c), *c.b, grid, s);
  }
  return {};
}

namespace {

struct Overrides {
  std::string config_path;
  std::string kind;
  std::optional<std::string> zeta, phi, radius, height, twist, output;
  std::optional<double> pitch, b, tol_quad, tol, fd_step, h, u0;
  std::vector<double> domain;
  std::optional<std::size_t> nu, nv;
  bool json = false;
  bool image = false;
};

void register_options(CLI::App& app, Overrides& o) {
  app.add_option("-c,--config", o.config_path, "JSON configuration file");
  app.add_option("--kind", o.kind, "helicoidal | rotational | samegauss")
      ->check(CLI::IsMember({"helicoidal", "rotational", "samegauss"}));
  app.add_option("--zeta", o.zeta, "profile radius zeta(u)");
  app.add_option("--phi", o.phi, "profile height phi(u)");
  app.add_option("--radius", o.radius, "rotational radius r(u)");
  app.add_option("--height", o.height, "rotational height z(u)");
  app.add_option("--twist", o.twist, "rotational twist T(u)");
  app.add_option("--pitch,-a", o.pitch, "helicoidal pitch a");
  app.add_option("--b", o.b, "catenoid neck parameter b (samegauss)");
  app.add_option("--domain", o.domain, "u_min u_max")->expected(2);
  app.add_option("--nu", o.nu, "grid points along u");
  app.add_option("--nv", o.nv, "grid points along v");
  app.add_option("--tol-quad", o.tol_quad, "quadrature tolerance");
  app.add_option("--tol", o.tol, "III-minimality tolerance (delta3)");
  app.add_option("--fd-step", o.fd_step, "finite-difference step of the Brioschi oracle");
  app.add_option("--h", o.h, "outer finite-difference step of delta3");
  app.add_option("--u0", o.u0, "integration anchor (default: domain midpoint)");
  app.add_option("-o,--output", o.output, "output path ('-' for stdout)");
  app.add_flag("--json", o.json, "JSON report (verify)");
  app.add_flag("--image", o.image, "operate on the rotational Bour image");
}

Config resolve(const Overrides& o) {
  Config c = o.config_path.empty() ? Config{} : load_config_file(o.config_path);
  if (!o.kind.empty()) {
    c.kind = o.kind == "rotational"  ? SurfaceKind::Rotational
             : o.kind == "samegauss" ? SurfaceKind::SameGauss
                                     : SurfaceKind::Helicoidal;
  }
  if (o.zeta) c.zeta = *o.zeta;
  if (o.phi) c.phi = *o.phi;
  if (o.radius) c.radius = *o.radius;
  if (o.height) c.height = *o.height;
  if (o.twist) c.twist = *o.twist;
  if (o.output) c.output = *o.output;
  if (o.pitch) c.pitch = o.pitch;
  if (o.b) c.b = o.b;
  if (o.tol_quad) c.tol_quad = *o.tol_quad;
  if (o.tol) c.tol = *o.tol;
  if (o.fd_step) c.fd_step = *o.fd_step;
  if (o.h) c.h = o.h;
  if (o.u0) c.u0 = o.u0;
  if (o.nu) c.nu = *o.nu;
  if (o.nv) c.nv = *o.nv;
  if (o.domain.size() == 2) {
    c.u_min = o.domain[0];
    c.u_max = o.domain[1];
    c.has_domain = true;
  }
  c.validate();
  return c;
}

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(std::initializer_list<const char*> names) {
    bool first = true;
    for (const char* n : names) {
      if (!first) out_ << ',';
      out_ << n;
      first = false;
    }
    out_ << '\n';
  }

  CsvWriter& cell(double value) {
    separate();
    out_ << format_number(value);
    return *this;
  }
  CsvWriter& empty() {
    separate();
    return *this;
  }
  CsvWriter& text(const std::string& value) {
    separate();
    out_ << value;
    return *this;
  }
  void end_row() {
    out_ << '\n';
    fresh_ = true;
  }

 private:
  void separate() {
    if (!fresh_) out_ << ',';
    fresh_ = false;
  }
  std::ostream& out_;
  bool fresh_ = true;
};

// Phi only has a meaning for profiles (helicoidal, or rotational without twist).
std::optional<double> phi_at(const Surface& surface, double u) {
  if (const auto* h = std::get_if<HelicoidalSurface>(&surface)) {
    return phi_functional(h->profile(), h->pitch(), u);
  }
  const auto& r = std::get<RotationalSurface>(surface);
  if (r.has_twist) return std::nullopt;
  return phi_functional(ProfileCurve{r.radius, r.height, r.domain}, 0.0, u);
}

int cmd_forms(const Config& c, bool image, std::ostream& out) {
  const Surface surface = build_surface(c, image);
  CsvWriter csv(out);
  csv.header({"u", "v", "E", "F", "G", "L", "M", "N", "X", "Y", "Z", "K", "H", "Phi"});
  for (const auto& [u, v] : c.grid().points()) {
    const PointGeometry g = point_geometry(evaluate(surface, u, v));
    csv.cell(u).cell(v);
    csv.cell(g.first.E).cell(g.first.F).cell(g.first.G);
    csv.cell(g.second.L).cell(g.second.M).cell(g.second.N);
    csv.cell(g.third.X).cell(g.third.Y).cell(g.third.Z);
    csv.cell(g.K).cell(g.H);
    if (const auto phi = phi_at(surface, u)) {
      csv.cell(*phi);
    } else {
      csv.empty();
    }
    csv.end_row();
  }
  return kExitOk;
}

int cmd_curvature(const Config& c, bool image, std::ostream& out) {
  const Surface surface = build_surface(c, image);
  CsvWriter csv(out);
  csv.header({"u", "v", "K", "H", "k1", "k2"});
  for (const auto& [u, v] : c.grid().points()) {
    const SurfaceJet j = evaluate(surface, u, v);
    const FirstForm I = first_form(j);
    const SecondForm II = second_form(j);
    const auto [k1, k2] = shape_operator_eigen(j);
    csv.cell(u).cell(v).cell(gaussian_curvature(I, II)).cell(mean_curvature(I, II));
    csv.cell(k1).cell(k2).end_row();
  }
  return kExitOk;
}

int cmd_gauss(const Config& c, bool image, std::ostream& out) {
  const Surface surface = build_surface(c, image);
  CsvWriter csv(out);
  csv.header({"u", "v", "nx", "ny", "nz"});
  for (const auto& [u, v] : c.grid().points()) {
    const Vec3 n = gauss_map(evaluate(surface, u, v));
    csv.cell(u).cell(v).cell(n.x()).cell(n.y()).cell(n.z()).end_row();
  }
  return kExitOk;
}

BourImage image_of(const Config& c) {
  c.validate();
  if (c.kind == SurfaceKind::Rotational) {
    throw ConfigError("bour: needs a helicoidal or samegauss surface");
  }
  if (c.kind == SurfaceKind::SameGauss) return same_gauss_from(c).image;
  return bour_image(helicoidal_from(c), c.anchor(), c.tol_quad);
}

int cmd_bour(const Config& c, std::ostream& out) {
  const BourImage image = image_of(c);
  const ParameterGrid grid = c.grid();
  CsvWriter csv(out);
  csv.header({"u", "radius", "twist", "height"});
  for (std::size_t i = 0; i < grid.nu; ++i) {
    const double u = grid.u_at(i);
    csv.cell(u).cell(image.radius(u).value).cell(image.twist(u).value);
    csv.cell(image.height(u).value).end_row();
  }
  return kExitOk;
}

int cmd_samegauss(const Config& c, std::ostream& out) {
  if (c.kind != SurfaceKind::SameGauss) {
    throw ConfigError("samegauss: needs kind \"samegauss\" with zeta, pitch and b");
  }
  const SameGaussPair pair = same_gauss_from(c);
  const ProfileCurve& profile = pair.helicoidal.profile();
  const ParameterGrid grid = c.grid();
  CsvWriter csv(out);
  csv.header({"u", "zeta", "phi", "dphi"});
  for (std::size_t i = 0; i < grid.nu; ++i) {
    const double u = grid.u_at(i);
    const Jet2 phi = profile.phi(u);
    csv.cell(u).cell(profile.zeta(u).value).cell(phi.value).cell(phi.d1).end_row();
  }
  return kExitOk;
}

int cmd_delta3(const Config& c, bool image, std::ostream& out) {
  const Surface surface = build_surface(c, image);
  const Lb3Report report = iii_minimality_scan(surface, c.grid(), c.tol, c.h);
  CsvWriter csv(out);
  csv.header({"u", "v", "dx", "dy", "dz", "norm", "parabolic"});
  for (const auto& p : report.points) {
    csv.cell(p.u).cell(p.v);
    csv.cell(p.residual.x()).cell(p.residual.y()).cell(p.residual.z());
    csv.cell(p.parabolic ? std::numeric_limits<double>::quiet_NaN() : p.residual.norm());
    csv.text(p.parabolic ? "1" : "0").end_row();
  }
  out << "# max_norm=" << format_number(report.max_norm) << " tol=" << format_number(c.tol)
      << " parabolic_points=" << report.parabolic_points
      << " iii_minimal=" << (report.iii_minimal ? "true" : "false") << '\n';
  return report.iii_minimal ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Config& c, bool json, std::ostream& out) {
  const std::vector<CheckReport> reports = run_checks(c);
  bool passed = !reports.empty();
  for (const auto& r : reports) passed = passed && r.passed;
  if (json) {
    out << verify_report(c, reports).dump(2) << '\n';
  } else {
    CsvWriter csv(out);
    csv.header({"check", "points", "max_abs_error", "tolerance", "worst_u", "worst_v", "status"});
    for (const auto& r : reports) {
      csv.text(r.name).text(std::to_string(r.points_checked)).cell(r.max_abs_error);
      csv.cell(r.tolerance).cell(r.worst_u).cell(r.worst_v);
      csv.text(r.passed ? "PASS" : "FAIL").end_row();
    }
    out << "# " << (passed ? "PASS" : "FAIL") << '\n';
  }
  return passed ? kExitOk : kExitCheckFailed;
}

int cmd_mesh(const Config& c, bool image, std::ostream& out, std::ostream& err) {
  const Surface surface = build_surface(c, image);
  ParameterGrid grid = c.grid();
  grid.v_closed = true;  // the seam column is repeated so the mesh closes
  export_obj(surface, grid, out, err);
  return kExitOk;
}

// Output goes to a buffer first so a failing command leaves no partial file.
int dispatch(const std::string& command, const Config& c, const Overrides& o, std::ostream& out,
             std::ostream& err) {
  std::ostringstream buffer;
  int code = kExitOk;
  if (command == "forms") {
    code = cmd_forms(c, o.image, buffer);
  } else if (command == "curvature") {
    code = cmd_curvature(c, o.image, buffer);
  } else if (command == "gauss") {
    code = cmd_gauss(c, o.image, buffer);
  } else if (command == "bour") {
    code = cmd_bour(c, buffer);
  } else if (command == "samegauss") {
    code = cmd_samegauss(c, buffer);
  } else if (command == "delta3") {
    code = cmd_delta3(c, o.image, buffer);
  } else if (command == "verify") {
    code = cmd_verify(c, o.json, buffer);
  } else if (command == "mesh") {
    code = cmd_mesh(c, o.image, buffer, err);
  }

  if (c.output == "-") {
    out << buffer.str();
  } else {
    std::ofstream file(c.output, std::ios::binary);
    if (!file) throw ConfigError("cannot write '" + c.output + "'");
    file << buffer.str();
    if (!file.flush()) throw ConfigError("write to '" + c.output + "' failed");
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bour's theorem toolkit for helicoidal and rotational surfaces", "helisurf"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  Overrides o;
  register_options(app, o);
  const std::vector<std::pair<const char*, const char*>> commands{
      {"forms", "first, second and third fundamental forms with K, H, Phi (CSV)"},
      {"curvature", "Gaussian, mean and principal curvatures (CSV)"},
      {"gauss", "unit normal field (CSV)"},
      {"bour", "radius, twist and height of the rotational Bour image (CSV)"},
      {"samegauss", "profile phi of the same-Gauss-map construction (CSV)"},
      {"delta3", "third Laplace-Beltrami operator of the immersion (CSV + verdict)"},
      {"verify", "run every applicable theorem check"},
      {"mesh", "Wavefront OBJ mesh with per-vertex normals"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const Config config = resolve(o);
    return dispatch(command, config, o, out, err);
  } catch (const ParseError& e) {
    // The message carries the byte offset and the expected tokens.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace helisurf::cli
