#include "helisurf/surfaces.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "helisurf/errors.hpp"

namespace helisurf {

ScalarMap::ScalarMap(Evaluator fn, std::string description)
    : fn_(std::move(fn)), description_(std::move(description)) {}

ScalarMap ScalarMap::from_expression(const Expression& e) {
  return ScalarMap([e](double u) { return e.eval_jet(u); }, e.to_string());
}

ScalarMap ScalarMap::from_text(std::string_view text) { return from_expression(parse(text)); }

ScalarMap ScalarMap::constant(double c) {
  std::ostringstream os;
  os << c;
  return ScalarMap([c](double) { return Jet2::constant(c); }, os.str());
}

Interval Interval::make(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw ConfigError("invalid interval: need finite lo < hi");
  }
  return {lo, hi};
}

HelicoidalSurface::HelicoidalSurface(ProfileCurve profile, double pitch)
    : profile_(std::move(profile)), pitch_(pitch) {
  if (!std::isfinite(pitch) || pitch == 0.0) {
    throw ConfigError("helicoidal pitch must be finite and nonzero; use a rotational surface for a = 0");
  }
}

bool SurfaceJet::is_finite() const noexcept {
  return x.allFinite() && x_u.allFinite() && x_v.allFinite() && x_uu.allFinite() &&
         x_uv.allFinite() && x_vv.allFinite();
}

namespace {

struct Frame {
  Vec3 radial;
  Vec3 tangential;
};

Frame frame_at(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {Vec3(c, s, 0.0), Vec3(-s, c, 0.0)};
}

const Vec3 kAxis(0.0, 0.0, 1.0);

}  // namespace

SurfaceJet eval_helicoidal(const HelicoidalSurface& surface, double u, double v) {
  const Jet2 zeta = surface.profile().zeta(u);
  const Jet2 phi = surface.profile().phi(u);
  const double a = surface.pitch();
  const auto [er, et] = frame_at(v);

  SurfaceJet j;
  j.x = zeta.value * er + (phi.value + a * v) * kAxis;
  j.x_u = zeta.d1 * er + phi.d1 * kAxis;
  j.x_v = zeta.value * et + a * kAxis;
  j.x_uu = zeta.d2 * er + phi.d2 * kAxis;
  j.x_uv = zeta.d1 * et;
  j.x_vv = -zeta.value * er;
  return j;
}

SurfaceJet eval_rotational(const RotationalSurface& surface, double u, double v) {
  const Jet2 r = surface.radius(u);
  const Jet2 z = surface.height(u);
  const Jet2 t = surface.has_twist ? surface.twist(u) : Jet2::constant(0.0);
  if (!(r.value > 0.0)) {
    throw DomainError("rotational radius must be positive (u = " + std::to_string(u) + ")");
  }
  const auto [er, et] = frame_at(v + t.value);

  SurfaceJet j;
  j.x = r.value * er + z.value * kAxis;
  j.x_u = r.d1 * er + r.value * t.d1 * et + z.d1 * kAxis;
  j.x_v = r.value * et;
  j.x_uu = (r.d2 - r.value * t.d1 * t.d1) * er + (2.0 * r.d1 * t.d1 + r.value * t.d2) * et +
           z.d2 * kAxis;
  j.x_uv = r.d1 * et - r.value * t.d1 * er;
  j.x_vv = -r.value * er;
  return j;
}

SurfaceJet evaluate(const Surface& surface, double u, double v) {
  return std::visit(
      [&](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, HelicoidalSurface>) {
          return eval_helicoidal(s, u, v);
        } else {
          return eval_rotational(s, u, v);
        }
      },
      surface);
}

const Interval& domain_of(const Surface& surface) noexcept {
  return std::visit(
      [](const auto& s) -> const Interval& {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, HelicoidalSurface>) {
          return s.domain();
        } else {
          return s.domain;
        }
      },
      surface);
}

ParameterGrid ParameterGrid::over(const Interval& u_range, std::size_t nu, std::size_t nv) {
  if (nu < 1 || nv < 1) throw ConfigError("grid counts must be positive");
  ParameterGrid g;
  g.u = u_range;
  g.nu = nu;
  g.nv = nv;
  return g;
}

double ParameterGrid::u_at(std::size_t i) const noexcept {
  if (nu <= 1) return u.lo;
  if (i + 1 == nu) return u.hi;
  return u.lo + u.width() * static_cast<double>(i) / static_cast<double>(nu - 1);
}

double ParameterGrid::v_at(std::size_t j) const noexcept {
  if (nv <= 1) return v.lo;
  const double divisions = static_cast<double>(v_closed ? nv - 1 : nv);
  if (v_closed && j + 1 == nv) return v.hi;
  return v.lo + v.width() * static_cast<double>(j) / divisions;
}

std::vector<std::pair<double, double>> ParameterGrid::points() const {
  std::vector<std::pair<double, double>> out;
  out.reserve(size());
  for (std::size_t i = 0; i < nu; ++i) {
    for (std::size_t j = 0; j < nv; ++j) out.emplace_back(u_at(i), v_at(j));
  }
  return out;
}

}  // namespace helisurf
