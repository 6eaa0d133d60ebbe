#pragma once

// Isometric rotational image of a helicoidal surface and the construction of
// helicoidal/rotational pairs sharing a Gauss map.
//
// For H(u, v) = (z cos v, z sin v, p + a v) the rotational surface
//
//   R(u, v) = (k cos(v + T), k sin(v + T), h),   k = sqrt(z^2 + a^2),
//   T' = a p' / (z^2 + a^2),   h' = sqrt(((a z')^2 + (z p')^2) / (z^2 + a^2))
//
// has the same first fundamental form at every (u, v). The integration
// constants are fixed by T(u0) = twist_offset and h(u0) = 0.

#include "helisurf/calculus.hpp"
#include "helisurf/surfaces.hpp"

namespace helisurf {

struct BourImage {
  HelicoidalSurface source;
  double anchor = 0.0;
  double twist_offset = 0.0;
  ScalarMap radius;
  ScalarMap twist;
  ScalarMap height;

  RotationalSurface surface() const;
};

/// Throws QuadratureError / DomainError when the integrands are singular.
BourImage bour_image(const HelicoidalSurface& surface, double u0,
                     double tol = kDefaultQuadratureTolerance, double twist_offset = 0.0);

struct NaturalParameters {
  double u_bar = 0.0;
  double v_bar = 0.0;
};

/// Coordinates in which the metric reads du_bar^2 + k^2 dv_bar^2:
/// u_bar = \int_{u0}^{u} sqrt(z'^2 + z^2 p'^2 / (z^2 + a^2)), v_bar = v + T(u)
/// with T(u0) = 0.
NaturalParameters natural_parameters(const HelicoidalSurface& surface, double u, double v,
                                     double u0, double tol = kDefaultQuadratureTolerance);

/// b * arcosh(uR / b). Throws DomainError when uR < b or b <= 0.
double catenoid_profile(double b, double uR);

/// The catenoid over the helicoid profile z = u:
/// (sqrt(u^2 + a^2) cos(v + c), sqrt(u^2 + a^2) sin(v + c), b arcosh(sqrt(u^2 + a^2) / b)).
RotationalSurface catenoid(double a, double b, const Interval& domain, double twist_offset = 0.0);

/// Helicoidal profile (zeta, phi) whose surface shares its Gauss map with
/// its rotational image, for catenoid neck parameter b:
///   phi' = sqrt(b^2 - a^2) sqrt(z^2 + a^2) z' / (z sqrt(z^2 + a^2 - b^2)),
/// phi(u0) = 0. For b == a (within 1e-12) phi is identically zero.
/// Validates z != 0 and z^2 + a^2 > b^2 on the domain before integrating;
/// throws DomainError otherwise or when b < a.
ProfileCurve same_gauss_profile(const ScalarMap& zeta, double a, double b, const Interval& domain,
                                double u0, double tol = kDefaultQuadratureTolerance);

/// The twist constant that lines the rotational image's Gauss map up with
/// the helicoidal one: atan2(a z'(u0), z(u0) p'(u0)).
double aligned_twist_offset(const HelicoidalSurface& surface, double u0);

struct SameGaussPair {
  HelicoidalSurface helicoidal;
  BourImage image;
};

SameGaussPair same_gauss_pair(const ScalarMap& zeta, double a, double b, const Interval& domain,
                              double u0, double tol = kDefaultQuadratureTolerance);

}  // namespace helisurf
