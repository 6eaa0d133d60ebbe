#include "helisurf/forms.hpp"

#include <cmath>
#include <string>

#include "helisurf/errors.hpp"

namespace helisurf {

bool FirstForm::degenerate() const noexcept {
  const double scale = E + G;
  return !(det() > kDegenerateMetricRatio * scale * scale) || !std::isfinite(det());
}

FirstForm first_form(const SurfaceJet& j) {
  return {j.x_u.dot(j.x_u), j.x_u.dot(j.x_v), j.x_v.dot(j.x_v)};
}

Vec3 gauss_map(const SurfaceJet& j) {
  if (first_form(j).degenerate()) throw DegenerateError("degenerate immersion: x_u and x_v are dependent");
  const Vec3 c = j.x_u.cross(j.x_v);
  const double norm = c.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw DegenerateError("vanishing normal");
  return c / norm;
}

SecondForm second_form(const SurfaceJet& j) {
  const Vec3 n = gauss_map(j);
  return {j.x_uu.dot(n), j.x_uv.dot(n), j.x_vv.dot(n)};
}

ThirdForm third_form(const FirstForm& I, const SecondForm& II) {
  const auto& [E, F, G] = I;
  const auto& [L, M, N] = II;
  return {E * M * M - 2.0 * F * L * M + G * L * L,
          E * M * N - F * L * N + G * L * M - F * M * M,
          G * M * M - 2.0 * F * N * M + E * N * N};
}

ThirdForm third_form_gram(const FirstForm& I, const SecondForm& II) {
  if (I.degenerate()) throw DegenerateError("degenerate metric");
  const ThirdForm t = third_form(I, II);
  const double d = I.det();
  return {t.X / d, t.Y / d, t.Z / d};
}

double gaussian_curvature(const FirstForm& I, const SecondForm& II) {
  if (I.degenerate()) throw DegenerateError("degenerate metric");
  return II.det() / I.det();
}

double mean_curvature(const FirstForm& I, const SecondForm& II) {
  if (I.degenerate()) throw DegenerateError("degenerate metric");
  return (I.E * II.N - 2.0 * I.F * II.M + I.G * II.L) / (2.0 * I.det());
}

namespace {

struct ProfileJets {
  Jet2 zeta;
  Jet2 phi;
};

ProfileJets jets(const ProfileCurve& p, double u) { return {p.zeta(u), p.phi(u)}; }

}  // namespace

double helicoidal_metric_det(const ProfileCurve& profile, double a, double u) {
  const auto [z, p] = jets(profile, u);
  return (z.value * z.value + a * a) * z.d1 * z.d1 + z.value * z.value * p.d1 * p.d1;
}

double gaussian_curvature_closed(const ProfileCurve& profile, double a, double u) {
  const auto [z, p] = jets(profile, u);
  const double z3 = z.value * z.value * z.value;
  const double zp2 = z.d1 * z.d1;
  const double numerator =
      z3 * z.d1 * p.d1 * p.d2 - z3 * p.d1 * p.d1 * z.d2 - a * a * zp2 * zp2;
  const double det = (z.value * z.value + a * a) * zp2 + z.value * z.value * p.d1 * p.d1;
  if (!(det > 0.0)) {
    throw DegenerateError("closed-form curvature: vanishing metric determinant at u = " +
                          std::to_string(u));
  }
  return numerator / (det * det);
}

double phi_functional(const ProfileCurve& profile, double a, double u) {
  const auto [z, p] = jets(profile, u);
  const double z0 = z.value;
  const double a2 = a * a;
  return (z0 * z0 * z.d1 * z.d1 - z0 * z0 * z0 * z.d2 - a2 * z0 * z.d2 + 2.0 * a2 * z.d1 * z.d1) *
             p.d1 +
         z0 * z0 * p.d1 * p.d1 * p.d1 + (z0 * z0 * z0 * z.d1 + a2 * z0 * z.d1) * p.d2;
}

double mean_curvature_rotational(const ProfileCurve& profile, double a, double u) {
  const auto [z, p] = jets(profile, u);
  const double z2 = z.value * z.value;
  const double slope2 = a * a * z.d1 * z.d1 + z2 * p.d1 * p.d1;
  if (!(slope2 > 0.0)) {
    throw DegenerateError("rotational image is singular at u = " + std::to_string(u));
  }
  const double det = (z2 + a * a) * z.d1 * z.d1 + z2 * p.d1 * p.d1;
  const double phi = phi_functional(profile, a, u);
  return z2 * p.d1 * phi /
         (2.0 * std::sqrt(z2 + a * a) * std::sqrt(slope2) * det * std::sqrt(det));
}

PointGeometry point_geometry(const SurfaceJet& j) {
  PointGeometry g;
  g.first = first_form(j);
  g.normal = gauss_map(j);
  g.second = {j.x_uu.dot(g.normal), j.x_uv.dot(g.normal), j.x_vv.dot(g.normal)};
  g.third = third_form(g.first, g.second);
  g.K = gaussian_curvature(g.first, g.second);
  g.H = mean_curvature(g.first, g.second);
  return g;
}

}  // namespace helisurf
