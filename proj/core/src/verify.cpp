#include "helisurf/verify.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "helisurf/calculus.hpp"
#include "helisurf/errors.hpp"

namespace helisurf {

CheckAccumulator::CheckAccumulator(std::string name, double tolerance) {
  report_.name = std::move(name);
  report_.tolerance = tolerance;
}

void CheckAccumulator::add(double error, double u, double v) {
  const bool first = report_.points_checked == 0;
  ++report_.points_checked;
  if (std::isnan(error)) {
    if (!saw_nan_) {
      report_.worst_u = u;
      report_.worst_v = v;
    }
    saw_nan_ = true;
    return;
  }
  if (saw_nan_) return;
  if (first || error > report_.max_abs_error) {
    report_.max_abs_error = error;
    report_.worst_u = u;
    report_.worst_v = v;
  }
}

CheckReport CheckAccumulator::report() const {
  CheckReport r = report_;
  if (saw_nan_) r.max_abs_error = std::numeric_limits<double>::quiet_NaN();
  r.passed = !saw_nan_ && r.points_checked > 0 && r.max_abs_error <= r.tolerance;
  return r;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Runs `error_at` over the grid; library errors at a point count as failures.
template <class ErrorAt>
CheckReport run_check(std::string name, const ParameterGrid& grid, double tol, ErrorAt&& error_at) {
  CheckAccumulator acc(std::move(name), tol);
  for (const auto& [u, v] : grid.points()) {
    double error = kNaN;
    try {
      error = error_at(u, v);
    } catch (const Error&) {
      error = kNaN;
    }
    acc.add(error, u, v);
  }
  return acc.report();
}

double default_anchor(const HelicoidalSurface& s) { return s.domain().midpoint(); }

}  // namespace

CheckReport check_isometry(const BourImage& image, const ParameterGrid& grid, double tol) {
  const RotationalSurface rotational = image.surface();
  return run_check("isometry", grid, tol, [&](double u, double v) {
    const FirstForm h = first_form(eval_helicoidal(image.source, u, v));
    const FirstForm r = first_form(eval_rotational(rotational, u, v));
    return std::max({std::abs(h.E - r.E), std::abs(h.F - r.F), std::abs(h.G - r.G)});
  });
}

CheckReport check_isometry(const HelicoidalSurface& surface, const ParameterGrid& grid,
                           double tol) {
  return check_isometry(bour_image(surface, default_anchor(surface)), grid, tol);
}

CheckReport check_curvature_correspondence(const BourImage& image, const ParameterGrid& grid,
                                           double tol) {
  const RotationalSurface rotational = image.surface();
  return run_check("curvature_correspondence", grid, tol, [&](double u, double v) {
    const SurfaceJet jh = eval_helicoidal(image.source, u, v);
    const SurfaceJet jr = eval_rotational(rotational, u, v);
    const double kh = gaussian_curvature(first_form(jh), second_form(jh));
    const double kr = gaussian_curvature(first_form(jr), second_form(jr));
    return std::abs(kh - kr);
  });
}

CheckReport check_curvature_correspondence(const HelicoidalSurface& surface,
                                           const ParameterGrid& grid, double tol) {
  return check_curvature_correspondence(bour_image(surface, default_anchor(surface)), grid, tol);
}

CheckReport check_closed_form_curvature(const HelicoidalSurface& surface,
                                        const ParameterGrid& grid, double tol) {
  return run_check("closed_form_curvature", grid, tol, [&](double u, double v) {
    const SurfaceJet j = eval_helicoidal(surface, u, v);
    const double k = gaussian_curvature(first_form(j), second_form(j));
    return std::abs(k - gaussian_curvature_closed(surface.profile(), surface.pitch(), u));
  });
}

CheckReport check_gauss_map_coincidence(const Surface& first, const Surface& second,
                                        const ParameterGrid& grid, double tol) {
  double sign = 0.0;
  return run_check("gauss_map_coincidence", grid, tol, [&](double u, double v) {
    const Vec3 n1 = gauss_map(evaluate(first, u, v));
    const Vec3 n2 = gauss_map(evaluate(second, u, v));
    if (sign == 0.0) sign = n1.dot(n2) < 0.0 ? -1.0 : 1.0;
    return (n1 - sign * n2).cwiseAbs().maxCoeff();
  });
}

CheckReport check_minimality_equivalence(const HelicoidalSurface& surface,
                                         const ParameterGrid& grid, double tol) {
  return run_check("minimality_equivalence", grid, tol, [&](double u, double v) {
    const SurfaceJet j = eval_helicoidal(surface, u, v);
    const FirstForm I = first_form(j);
    const double scaled = 2.0 * std::abs(mean_curvature(I, second_form(j))) *
                          std::pow(I.det(), 1.5);
    const double phi = std::abs(phi_functional(surface.profile(), surface.pitch(), u));
    return std::abs(scaled - phi) / std::max({1.0, scaled, phi});
  });
}

CheckReport check_rotational_mean_curvature(const BourImage& image, const ParameterGrid& grid,
                                            double tol) {
  const RotationalSurface rotational = image.surface();
  return run_check("rotational_mean_curvature", grid, tol, [&](double u, double v) {
    const SurfaceJet j = eval_rotational(rotational, u, v);
    const double h = mean_curvature(first_form(j), second_form(j));
    return std::abs(h - mean_curvature_rotational(image.source.profile(), image.source.pitch(), u));
  });
}

CheckReport check_profile_minimality(const HelicoidalSurface& surface, const ParameterGrid& grid,
                                     double tol) {
  return run_check("profile_minimality", grid, tol, [&](double u, double) {
    return std::abs(phi_functional(surface.profile(), surface.pitch(), u));
  });
}

CheckReport check_catenoid_closure(const BourImage& image, double b, const ParameterGrid& grid,
                                   double tol) {
  std::optional<double> offset;
  return run_check("catenoid_closure", grid, tol, [&](double u, double) {
    const double gap = image.height(u).value - catenoid_profile(b, image.radius(u).value);
    if (!offset) offset = gap;
    return std::abs(gap - *offset);
  });
}

double brioschi_curvature(const MetricField& metric, double u, double v, double h) {
  const FirstForm I = metric(u, v);
  if (I.degenerate()) throw DegenerateError("Brioschi: degenerate metric");
  auto E = [&](double s, double t) { return metric(s, t).E; };
  auto F = [&](double s, double t) { return metric(s, t).F; };
  auto G = [&](double s, double t) { return metric(s, t).G; };
  auto d_u = [&](auto&& f) { return central_derivative([&](double s) { return f(s, v); }, u, h); };
  auto d_v = [&](auto&& f) { return central_derivative([&](double t) { return f(u, t); }, v, h); };

  const double E_u = d_u(E), E_v = d_v(E);
  const double F_u = d_u(F), F_v = d_v(F);
  const double G_u = d_u(G), G_v = d_v(G);
  const double E_vv = central_second_derivative([&](double t) { return E(u, t); }, v, h);
  const double G_uu = central_second_derivative([&](double s) { return G(s, v); }, u, h);
  const double F_uv = central_derivative(
      [&](double s) { return central_derivative([&](double t) { return F(s, t); }, v, h); }, u, h);

  Eigen::Matrix3d a;
  a << -0.5 * E_vv + F_uv - 0.5 * G_uu, 0.5 * E_u, F_u - 0.5 * E_v,
       F_v - 0.5 * G_u, I.E, I.F,
       0.5 * G_v, I.F, I.G;
  Eigen::Matrix3d b;
  b << 0.0, 0.5 * E_v, 0.5 * G_u,
       0.5 * E_v, I.E, I.F,
       0.5 * G_u, I.F, I.G;
  const double det = I.det();
  return (a.determinant() - b.determinant()) / (det * det);
}

std::pair<double, double> shape_operator_eigen(const SurfaceJet& j) {
  const double E = j.x_u.dot(j.x_u);
  const double F = j.x_u.dot(j.x_v);
  const double G = j.x_v.dot(j.x_v);
  const double det = E * G - F * F;
  const Vec3 cross = j.x_u.cross(j.x_v);
  const double norm = cross.norm();
  if (!(det > 0.0) || !(norm > 0.0)) throw DegenerateError("shape operator: singular point");
  const Vec3 n = cross / norm;
  const double L = j.x_uu.dot(n), M = j.x_uv.dot(n), N = j.x_vv.dot(n);

  // Weingarten map W = I^{-1} II.
  const double w00 = (G * L - F * M) / det;
  const double w01 = (G * M - F * N) / det;
  const double w10 = (E * M - F * L) / det;
  const double w11 = (E * N - F * M) / det;
  const double mean = 0.5 * (w00 + w11);
  const double half_gap = 0.5 * (w00 - w11);
  const double disc = std::sqrt(std::max(0.0, half_gap * half_gap + w01 * w10));
  return {mean + disc, mean - disc};
}

CheckReport check_brioschi(const Surface& surface, const ParameterGrid& grid, double tol,
                           double h) {
  const MetricField metric = [&surface](double u, double v) {
    return first_form(evaluate(surface, u, v));
  };
  return run_check("brioschi_curvature", grid, tol, [&](double u, double v) {
    const SurfaceJet j = evaluate(surface, u, v);
    const double k = gaussian_curvature(first_form(j), second_form(j));
    return std::abs(brioschi_curvature(metric, u, v, h) - k);
  });
}

CheckReport check_shape_operator(const Surface& surface, const ParameterGrid& grid, double tol) {
  return run_check("shape_operator", grid, tol, [&](double u, double v) {
    const SurfaceJet j = evaluate(surface, u, v);
    const auto [k1, k2] = shape_operator_eigen(j);
    const FirstForm I = first_form(j);
    const SecondForm II = second_form(j);
    return std::max(std::abs(k1 * k2 - gaussian_curvature(I, II)),
                    std::abs(0.5 * (k1 + k2) - mean_curvature(I, II)));
  });
}

std::vector<CheckReport> verify_helicoidal(const HelicoidalSurface& surface,
                                           const ParameterGrid& grid,
                                           const VerifySettings& s) {
  const BourImage image = bour_image(surface, s.anchor, s.quad_tol);
  const Surface helicoidal = surface;
  return {
      check_isometry(image, grid, s.isometry_tol),
      check_curvature_correspondence(image, grid, s.curvature_tol),
      check_closed_form_curvature(surface, grid, s.closed_form_tol),
      check_minimality_equivalence(surface, grid, s.minimality_tol),
      check_rotational_mean_curvature(image, grid, s.rotational_mean_tol),
      check_brioschi(helicoidal, grid, s.brioschi_tol, s.brioschi_step),
      check_shape_operator(helicoidal, grid, s.shape_tol),
  };
}

std::vector<CheckReport> verify_rotational(const RotationalSurface& surface,
                                           const ParameterGrid& grid,
                                           const VerifySettings& s) {
  const Surface rotational = surface;
  return {
      check_brioschi(rotational, grid, s.brioschi_tol, s.brioschi_step),
      check_shape_operator(rotational, grid, s.shape_tol),
  };
}

std::vector<CheckReport> verify_same_gauss(const SameGaussPair& pair, double b,
                                           const ParameterGrid& grid,
                                           const VerifySettings& s) {
  std::vector<CheckReport> reports = verify_helicoidal(pair.helicoidal, grid, s);
  reports.push_back(check_gauss_map_coincidence(Surface{pair.helicoidal},
                                                Surface{pair.image.surface()}, grid,
                                                s.gauss_map_tol));
  reports.push_back(check_profile_minimality(pair.helicoidal, grid, s.profile_minimality_tol));
  reports.push_back(check_catenoid_closure(pair.image, b, grid, s.catenoid_closure_tol));
  return reports;
}

}  // namespace helisurf
