#pragma once

// Theorem-level checkers and independent curvature oracles.
//
// Oracles here deliberately avoid the curvature routines in forms.hpp:
// brioschi_curvature sees only first-form values, shape_operator_eigen only
// the raw surface jet.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "helisurf/bour.hpp"
#include "helisurf/forms.hpp"
#include "helisurf/surfaces.hpp"

namespace helisurf {

struct CheckReport {
  std::string name;
  std::size_t points_checked = 0;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double worst_u = 0.0;
  double worst_v = 0.0;
};

/// Builds a report from per-point errors; passed <=> max_abs_error <= tolerance.
/// A NaN error marks the point as failed outright.
class CheckAccumulator {
 public:
  CheckAccumulator(std::string name, double tolerance);
  void add(double error, double u, double v);
  CheckReport report() const;

 private:
  CheckReport report_;
  bool saw_nan_ = false;
};

/// Default tolerances of the individual gates.
namespace tolerance {
inline constexpr double kIsometry = 1e-7;
inline constexpr double kCurvatureCorrespondence = 1e-6;
inline constexpr double kClosedFormCurvature = 1e-9;
inline constexpr double kGaussMap = 1e-6;
inline constexpr double kBrioschi = 1e-4;
inline constexpr double kShapeOperator = 1e-9;
inline constexpr double kMinimalityEquivalence = 1e-9;
inline constexpr double kRotationalMeanCurvature = 1e-7;
inline constexpr double kProfileMinimality = 1e-7;
inline constexpr double kCatenoidClosure = 1e-6;
}  // namespace tolerance

/// Max componentwise |(E,F,G)_H - (E,F,G)_R| with R the Bour image.
CheckReport check_isometry(const BourImage& image, const ParameterGrid& grid, double tol);
/// Builds the Bour image anchored at the domain midpoint.
CheckReport check_isometry(const HelicoidalSurface& surface, const ParameterGrid& grid, double tol);

/// |K_H - K_R| with each K computed from its own surface jets.
CheckReport check_curvature_correspondence(const BourImage& image, const ParameterGrid& grid,
                                           double tol);
CheckReport check_curvature_correspondence(const HelicoidalSurface& surface,
                                           const ParameterGrid& grid, double tol);

/// Closed-form profile curvature against the jet-based K on H alone.
CheckReport check_closed_form_curvature(const HelicoidalSurface& surface,
                                        const ParameterGrid& grid, double tol);

/// Unit normals of both surfaces at identical (u, v), compared up to one
/// global sign fixed at the first grid point.
CheckReport check_gauss_map_coincidence(const Surface& first, const Surface& second,
                                        const ParameterGrid& grid, double tol);

/// |2 |H| detI^{3/2} - |Phi|| / max(1, |Phi|, 2 |H| detI^{3/2}).
CheckReport check_minimality_equivalence(const HelicoidalSurface& surface,
                                         const ParameterGrid& grid, double tol);

/// Closed-form mean curvature of the rotational image against the mean
/// curvature of the image's own jets.
CheckReport check_rotational_mean_curvature(const BourImage& image, const ParameterGrid& grid,
                                            double tol);

/// max |Phi(u)| over the grid: zero iff the helicoidal surface is minimal.
CheckReport check_profile_minimality(const HelicoidalSurface& surface, const ParameterGrid& grid,
                                     double tol);

/// Height of the rotational image minus b arcosh(radius / b), compared with
/// its value at the first grid point (the two agree up to a constant).
CheckReport check_catenoid_closure(const BourImage& image, double b, const ParameterGrid& grid,
                                   double tol);

using MetricField = std::function<FirstForm(double u, double v)>;

/// Gaussian curvature from the first fundamental form only (Brioschi
/// determinant formula, finite-difference derivatives with base step h).
double brioschi_curvature(const MetricField& metric, double u, double v, double h);

/// Principal curvatures (k1 >= k2): eigenvalues of the shape operator
/// I^{-1} II, computed directly from the jet.
std::pair<double, double> shape_operator_eigen(const SurfaceJet& j);

/// |brioschi - gaussian_curvature|.
CheckReport check_brioschi(const Surface& surface, const ParameterGrid& grid, double tol,
                           double h = 1e-3);

/// max(|k1 k2 - K|, |(k1 + k2)/2 - H|).
CheckReport check_shape_operator(const Surface& surface, const ParameterGrid& grid, double tol);

struct VerifySettings {
  double anchor = 0.0;
  double quad_tol = 1e-10;
  double brioschi_step = 1e-3;
  double isometry_tol = tolerance::kIsometry;
  double curvature_tol = tolerance::kCurvatureCorrespondence;
  double closed_form_tol = tolerance::kClosedFormCurvature;
  double gauss_map_tol = tolerance::kGaussMap;
  double brioschi_tol = tolerance::kBrioschi;
  double shape_tol = tolerance::kShapeOperator;
  double minimality_tol = tolerance::kMinimalityEquivalence;
  double rotational_mean_tol = tolerance::kRotationalMeanCurvature;
  double profile_minimality_tol = tolerance::kProfileMinimality;
  double catenoid_closure_tol = tolerance::kCatenoidClosure;
};

/// Every gate applicable to a helicoidal surface, in a fixed order.
std::vector<CheckReport> verify_helicoidal(const HelicoidalSurface& surface,
                                           const ParameterGrid& grid,
                                           const VerifySettings& settings);
/// Gates applicable to a plain rotational surface (intrinsic oracles only).
std::vector<CheckReport> verify_rotational(const RotationalSurface& surface,
                                           const ParameterGrid& grid,
                                           const VerifySettings& settings);
/// Helicoidal gates plus Gauss-map coincidence, minimality and catenoid
/// closure of the pair built for neck parameter b.
std::vector<CheckReport> verify_same_gauss(const SameGaussPair& pair, double b,
                                           const ParameterGrid& grid,
                                           const VerifySettings& settings);

}  // namespace helisurf
