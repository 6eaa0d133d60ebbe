#include "helisurf/lb3.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "helisurf/calculus.hpp"
#include "helisurf/errors.hpp"

namespace helisurf {

double default_lb3_step(double x) noexcept { return 1e-3 * std::max(1.0, std::abs(x)); }

bool is_parabolic(const SecondForm& II) noexcept {
  const double scale = std::abs(II.L) + std::abs(II.M) + std::abs(II.N) +
                       std::numeric_limits<double>::epsilon();
  return !(std::abs(II.det()) >= kParabolicRatio * scale * scale);
}

namespace {

struct LocalCoefficients {
  ThirdForm third;
  double sqrt_det_first = 0.0;
  double det_second = 0.0;
  SurfaceJet jet;

  double denominator() const { return sqrt_det_first * det_second; }
};

LocalCoefficients coefficients(const Surface& surface, double u, double v) {
  LocalCoefficients c;
  c.jet = evaluate(surface, u, v);
  const FirstForm I = first_form(c.jet);
  const SecondForm II = second_form(c.jet);
  if (is_parabolic(II)) {
    throw DegenerateError("parabolic point at (u, v) = (" + std::to_string(u) + ", " +
                          std::to_string(v) + "): third Laplace-Beltrami operator undefined");
  }
  c.third = third_form(I, II);
  c.sqrt_det_first = std::sqrt(I.det());
  c.det_second = II.det();
  return c;
}

double step_or_default(std::optional<double> h, double x) {
  if (!h) return default_lb3_step(x);
  if (!(*h > 0.0)) throw DomainError("finite-difference step must be positive");
  return *h;
}

Vec3 checked(Vec3 value) {
  if (!value.allFinite()) throw DegenerateError("non-finite third Laplace-Beltrami inner field");
  return value;
}

}  // namespace

InnerFields inner_fields(const Surface& surface, double u, double v) {
  const LocalCoefficients c = coefficients(surface, u, v);
  const auto& [X, Y, Z] = c.third;
  const double d = c.denominator();
  return {checked((Z * c.jet.x_u - Y * c.jet.x_v) / d),
          checked((Y * c.jet.x_u - X * c.jet.x_v) / d)};
}

CancellationTerms cancellation_terms(const Surface& surface, double u, double v,
                                     std::optional<double> h) {
  const double hu = step_or_default(h, u);
  const double hv = step_or_default(h, v);
  CancellationTerms t;
  t.du_u_field = richardson_derivative(
      [&](double s) { return inner_fields(surface, s, v).u_field; }, u, hu);
  t.dv_v_field = richardson_derivative(
      [&](double s) { return inner_fields(surface, u, s).v_field; }, v, hv);
  return t;
}

Vec3 delta3_immersion(const Surface& surface, double u, double v, std::optional<double> h) {
  const LocalCoefficients c = coefficients(surface, u, v);
  const CancellationTerms t = cancellation_terms(surface, u, v, h);
  return checked(-(c.sqrt_det_first / c.det_second) * (t.du_u_field - t.dv_v_field));
}

double delta3_scalar(const Surface& surface, const ScalarField& f, double u, double v,
                     std::optional<double> h) {
  const LocalCoefficients center = coefficients(surface, u, v);
  auto fields = [&](double s, double t) {
    const LocalCoefficients c = coefficients(surface, s, t);
    const FieldGradient g = f(s, t);
    const auto& [X, Y, Z] = c.third;
    const double d = c.denominator();
    return std::pair{(Z * g.du - Y * g.dv) / d, (Y * g.du - X * g.dv) / d};
  };
  const double du = central_derivative([&](double s) { return fields(s, v).first; }, u,
                                       step_or_default(h, u));
  const double dv = central_derivative([&](double t) { return fields(u, t).second; }, v,
                                       step_or_default(h, v));
  return -(center.sqrt_det_first / center.det_second) * (du - dv);
}

Lb3Report iii_minimality_scan(const Surface& surface, const ParameterGrid& grid, double tol,
                              std::optional<double> h) {
  Lb3Report report;
  report.tolerance = tol;
  report.points.reserve(grid.size());
  for (const auto& [u, v] : grid.points()) {
    Lb3Point p{u, v};
    try {
      p.residual = delta3_immersion(surface, u, v, h);
      report.max_norm = std::max(report.max_norm, p.residual.norm());
    } catch (const DegenerateError&) {
      p.parabolic = true;
      p.residual = Vec3::Constant(std::numeric_limits<double>::quiet_NaN());
      ++report.parabolic_points;
    }
    report.points.push_back(p);
  }
  report.iii_minimal = report.parabolic_points == 0 && report.max_norm <= tol;
  return report;
}

}  // namespace helisurf
