#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <type_traits>

namespace helisurf {

using RealFunction = std::function<double(double)>;

inline constexpr double kDefaultQuadratureTolerance = 1e-10;
inline constexpr int kMaxBisectionDepth = 60;
inline constexpr std::size_t kMaxSubdivisions = 4000;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t subdivisions = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
///
/// Stops once the summed error estimate is below max(tol, tol * |value|).
/// Reversed limits flip the sign; a == b returns exactly zero. Throws
/// DomainError on a non-finite sample and QuadratureError when the interval
/// budget or the bisection depth limit is exhausted.
QuadratureResult integrate(const RealFunction& f, double a, double b,
                           double tol = kDefaultQuadratureTolerance);

/// F(u) = \int_{u0}^{u} f, memoized on a fixed lattice of anchors
/// u0 + k * spacing. A value only depends on its argument, never on which
/// other points were requested first. Internally synchronized: one instance
/// may be shared by any number of threads. Copies share the memo table.
class CumulativeIntegral {
 public:
  static constexpr double kDefaultAnchorSpacing = 0.125;

  CumulativeIntegral(RealFunction f, double u0, double tol = kDefaultQuadratureTolerance,
                     double anchor_spacing = kDefaultAnchorSpacing);

  double operator()(double u) const;

  double anchor() const noexcept;
  double tolerance() const noexcept;
  /// Number of lattice anchors computed so far (for tests and diagnostics).
  std::size_t cached_anchors() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

inline CumulativeIntegral cumulative(RealFunction f, double u0,
                                     double tol = kDefaultQuadratureTolerance) {
  return CumulativeIntegral(std::move(f), u0, tol);
}

/// 1e-4 * max(1, |x|).
double default_fd_step(double x) noexcept;

/// Richardson-extrapolated central difference for any vector-space valued
/// g (double, Eigen vectors, ...): steps h0, h0/2, h0/4, error O(h0^6).
/// No finiteness checks; see central_derivative for the checked scalar form.
template <class G>
auto richardson_derivative(G&& g, double x, double h0) {
  using T = std::decay_t<decltype(g(x))>;
  auto diff = [&](double h) { return T((g(x + h) - g(x - h)) / (2.0 * h)); };
  const T coarse = diff(h0);
  const T mid = diff(0.5 * h0);
  const T fine = diff(0.25 * h0);
  const T r1 = (4.0 * mid - coarse) / 3.0;
  const T r2 = (4.0 * fine - mid) / 3.0;
  return T((16.0 * r2 - r1) / 15.0);
}

/// Central difference at steps h0, h0/2, h0/4 combined by two levels of
/// Richardson extrapolation. Throws DomainError on non-finite samples.
double central_derivative(const RealFunction& g, double x, double h0);
double central_derivative(const RealFunction& g, double x);

/// Second derivative from the symmetric three-point stencil, with the same
/// Richardson scheme.
double central_second_derivative(const RealFunction& g, double x, double h0);

}  // namespace helisurf
