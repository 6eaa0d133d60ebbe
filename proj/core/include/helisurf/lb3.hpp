#pragma once

// Laplace-Beltrami operator of the third fundamental form.
//
//   D f = -(sqrt(detI) / detII) [ d/du ((Z f_u - Y f_v) / (sqrt(detI) detII))
//                                - d/dv ((Y f_u - X f_v) / (sqrt(detI) detII)) ]
//
// with (X, Y, Z) the scaled third-form triple from forms.hpp. The bracketed
// fields are evaluated exactly from second-order surface jets; only the outer
// d/du and d/dv are taken numerically (Richardson-extrapolated central
// differences).

#include <functional>
#include <optional>
#include <vector>

#include "helisurf/forms.hpp"
#include "helisurf/surfaces.hpp"

namespace helisurf {

/// Partial derivatives (f_u, f_v) of a scalar field.
struct FieldGradient {
  double du = 0.0;
  double dv = 0.0;
};

using ScalarField = std::function<FieldGradient(double u, double v)>;

/// 1e-3 * max(1, |x|).
double default_lb3_step(double x) noexcept;

/// Points with |detII| < kParabolicRatio * (|L| + |M| + |N| + eps)^2 are parabolic.
inline constexpr double kParabolicRatio = 1e-10;

bool is_parabolic(const SecondForm& second) noexcept;

/// The two bracketed vector fields, evaluated for the three coordinate
/// functions of the immersion at once.
struct InnerFields {
  Vec3 u_field = Vec3::Zero();  // (Z x_u - Y x_v) / (sqrt(detI) detII)
  Vec3 v_field = Vec3::Zero();  // (Y x_u - X x_v) / (sqrt(detI) detII)
};

/// Throws DegenerateError at a parabolic point.
InnerFields inner_fields(const Surface& surface, double u, double v);

/// Throws DegenerateError at a parabolic point (the operator is undefined).
double delta3_scalar(const Surface& surface, const ScalarField& f, double u, double v,
                     std::optional<double> h = std::nullopt);

/// The operator applied componentwise to the coordinate functions x, y, z.
Vec3 delta3_immersion(const Surface& surface, double u, double v,
                      std::optional<double> h = std::nullopt);

/// d/du of InnerFields::u_field and d/dv of InnerFields::v_field. Their
/// difference is the bracket of the operator; for a III-minimal immersion the
/// two agree.
struct CancellationTerms {
  Vec3 du_u_field = Vec3::Zero();
  Vec3 dv_v_field = Vec3::Zero();
};

CancellationTerms cancellation_terms(const Surface& surface, double u, double v,
                                     std::optional<double> h = std::nullopt);

struct Lb3Point {
  double u = 0.0;
  double v = 0.0;
  Vec3 residual = Vec3::Zero();
  bool parabolic = false;
};

struct Lb3Report {
  std::vector<Lb3Point> points;  // grid order
  double max_norm = 0.0;         // over non-parabolic points
  double tolerance = 0.0;
  std::size_t parabolic_points = 0;
  bool iii_minimal = false;
};

/// Parabolic grid points are flagged and excluded from max_norm; a scan with
/// any parabolic point is not reported III-minimal.
Lb3Report iii_minimality_scan(const Surface& surface, const ParameterGrid& grid, double tol,
                              std::optional<double> h = std::nullopt);

}  // namespace helisurf
