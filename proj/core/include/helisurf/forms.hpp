#pragma once

// Fundamental forms, Gauss map and curvatures.
//
// Orientation: n = x_u x x_v / |x_u x x_v|. With this choice the helicoidal
// normal is (a z' sin v - z p' cos v, -a z' cos v - z p' sin v, z z') / sqrt(detI)
// and H = Phi / (2 detI^{3/2}) for the helicoidal profile functional Phi.

#include "helisurf/surfaces.hpp"

namespace helisurf {

/// detI below kDegenerateMetricRatio * (E + G)^2 is treated as degenerate.
inline constexpr double kDegenerateMetricRatio = 1e-14;

struct FirstForm {
  double E = 0.0;
  double F = 0.0;
  double G = 0.0;

  double det() const noexcept { return E * G - F * F; }
  bool degenerate() const noexcept;
};

struct SecondForm {
  double L = 0.0;
  double M = 0.0;
  double N = 0.0;

  double det() const noexcept { return L * N - M * M; }
};

/// X = E M^2 - 2 F L M + G L^2, Y = E M N - F L N + G L M - F M^2,
/// Z = G M^2 - 2 F N M + E N^2. These are detI times the Gram coefficients
/// <n_i, n_j> of the Gauss map; the third Laplace-Beltrami operator is
/// written in terms of this scaled triple.
struct ThirdForm {
  double X = 0.0;
  double Y = 0.0;
  double Z = 0.0;

  double det() const noexcept { return X * Z - Y * Y; }
};

FirstForm first_form(const SurfaceJet& j);
/// Throws DegenerateError at a singular point of the immersion.
Vec3 gauss_map(const SurfaceJet& j);
SecondForm second_form(const SurfaceJet& j);
ThirdForm third_form(const FirstForm& first, const SecondForm& second);
/// e_ij = <n_i, n_j>, i.e. third_form / detI.
ThirdForm third_form_gram(const FirstForm& first, const SecondForm& second);

/// K = detII / detI. Throws DegenerateError on a degenerate metric.
double gaussian_curvature(const FirstForm& first, const SecondForm& second);
/// H = (E N - 2 F M + G L) / (2 detI).
double mean_curvature(const FirstForm& first, const SecondForm& second);

/// Closed-form Gaussian curvature of the helicoidal surface straight from
/// the profile jets:
///   K = (z^3 z' p' p'' - z^3 p'^2 z'' - a^2 z'^4) / ((z^2 + a^2) z'^2 + z^2 p'^2)^2
/// with z = zeta, p = phi. Shared by the helicoidal surface and its
/// isometric rotational image.
double gaussian_curvature_closed(const ProfileCurve& profile, double pitch, double u);

/// Phi(u) = (z^2 z'^2 - z^3 z'' - a^2 z z'' + 2 a^2 z'^2) p' + z^2 p'^3
///          + (z^3 z' + a^2 z z') p''.
/// Vanishes exactly where the helicoidal surface is minimal.
double phi_functional(const ProfileCurve& profile, double pitch, double u);

/// detI of the helicoidal surface: (z^2 + a^2) z'^2 + z^2 p'^2.
double helicoidal_metric_det(const ProfileCurve& profile, double pitch, double u);

/// Mean curvature of the rotational image of a helicoidal surface, from
/// the helicoidal profile:
///   H_R = z^2 p' Phi / (2 sqrt(z^2 + a^2) sqrt((a z')^2 + (z p')^2) detI^{3/2}).
/// Throws DegenerateError where (a z')^2 + (z p')^2 vanishes.
double mean_curvature_rotational(const ProfileCurve& profile, double pitch, double u);

/// Everything at one parameter point, for tabular output.
struct PointGeometry {
  FirstForm first;
  SecondForm second;
  ThirdForm third;
  Vec3 normal = Vec3::Zero();
  double K = 0.0;
  double H = 0.0;
};

PointGeometry point_geometry(const SurfaceJet& j);

}  // namespace helisurf
