#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "helisurf/expr.hpp"
#include "helisurf/jet.hpp"

namespace helisurf {

using Vec3 = Eigen::Vector3d;

/// A real function of u evaluated as an order-2 jet.
class ScalarMap {
 public:
  using Evaluator = std::function<Jet2(double)>;

  ScalarMap(Evaluator fn, std::string description);

  static ScalarMap from_expression(const Expression& e);
  static ScalarMap from_text(std::string_view text);
  static ScalarMap constant(double c);
  static ScalarMap zero() { return constant(0.0); }

  Jet2 operator()(double u) const { return fn_(u); }
  const std::string& description() const noexcept { return description_; }

 private:
  Evaluator fn_;
  std::string description_;
};

/// Open parameter interval (lo, hi); lo < hi.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  static Interval make(double lo, double hi);  // throws ConfigError
  double midpoint() const noexcept { return 0.5 * (lo + hi); }
  double width() const noexcept { return hi - lo; }
  bool contains(double u) const noexcept { return u >= lo && u <= hi; }
};

/// gamma(u) = (zeta(u), 0, phi(u)).
struct ProfileCurve {
  ScalarMap zeta;
  ScalarMap phi;
  Interval domain;
};

/// H(u, v) = (zeta cos v, zeta sin v, phi + a v) with pitch a != 0.
class HelicoidalSurface {
 public:
  /// Throws ConfigError when pitch is zero or not finite.
  HelicoidalSurface(ProfileCurve profile, double pitch);

  const ProfileCurve& profile() const noexcept { return profile_; }
  double pitch() const noexcept { return pitch_; }
  const Interval& domain() const noexcept { return profile_.domain; }

 private:
  ProfileCurve profile_;
  double pitch_;
};

/// R(u, v) = (r cos(v + T), r sin(v + T), z) with radius r(u) > 0, height
/// z(u) and twist T(u) (zero unless given).
struct RotationalSurface {
  ScalarMap radius;
  ScalarMap height;
  ScalarMap twist = ScalarMap::zero();
  Interval domain;
  bool has_twist = false;
};

/// Position and all partial derivatives through order two at one (u, v).
struct SurfaceJet {
  Vec3 x = Vec3::Zero();
  Vec3 x_u = Vec3::Zero();
  Vec3 x_v = Vec3::Zero();
  Vec3 x_uu = Vec3::Zero();
  Vec3 x_uv = Vec3::Zero();
  Vec3 x_vv = Vec3::Zero();

  bool is_finite() const noexcept;
};

SurfaceJet eval_helicoidal(const HelicoidalSurface& surface, double u, double v);
/// Throws DomainError where the radius is not positive.
SurfaceJet eval_rotational(const RotationalSurface& surface, double u, double v);

using Surface = std::variant<HelicoidalSurface, RotationalSurface>;

SurfaceJet evaluate(const Surface& surface, double u, double v);
const Interval& domain_of(const Surface& surface) noexcept;

/// Tensor grid over (u, v). u includes both ends; v includes its upper end
/// only when `v_closed` is set (v defaults to the half-open period [0, 2pi)).
struct ParameterGrid {
  Interval u;
  Interval v{0.0, 6.283185307179586};
  std::size_t nu = 20;
  std::size_t nv = 20;
  bool v_closed = false;

  static ParameterGrid over(const Interval& u_range, std::size_t nu, std::size_t nv);

  std::size_t size() const noexcept { return nu * nv; }
  double u_at(std::size_t i) const noexcept;
  double v_at(std::size_t j) const noexcept;
  /// Row-major (u outer, v inner) list of points.
  std::vector<std::pair<double, double>> points() const;
};

}  // namespace helisurf
