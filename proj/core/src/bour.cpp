#include "helisurf/bour.hpp"

#include <cmath>
#include <string>

#include "helisurf/errors.hpp"

namespace helisurf {

namespace {

// A jet whose second channel is unused: arithmetic on these propagates
// (f, f') correctly, which is all we need to differentiate a first
// derivative once more.
constexpr Jet2 first_order(double value, double d1) { return {value, d1, 0.0}; }

struct ProfileRates {
  Jet2 zeta;    // (z, z')
  Jet2 dzeta;   // (z', z'')
  Jet2 dphi;    // (p', p'')
};

ProfileRates rates(const ProfileCurve& p, double u) {
  const Jet2 z = p.zeta(u);
  const Jet2 h = p.phi(u);
  return {first_order(z.value, z.d1), first_order(z.d1, z.d2), first_order(h.d1, h.d2)};
}

Jet2 twist_rate(const ProfileRates& r, double a) {
  return a * r.dphi / (r.zeta * r.zeta + a * a);
}

Jet2 height_rate(const ProfileRates& r, double a) {
  const Jet2 slope2 = a * a * r.dzeta * r.dzeta + r.zeta * r.zeta * r.dphi * r.dphi;
  return sqrt(slope2 / (r.zeta * r.zeta + a * a));
}

}  // namespace

RotationalSurface BourImage::surface() const {
  return RotationalSurface{radius, height, twist, source.domain(), true};
}

BourImage bour_image(const HelicoidalSurface& surface, double u0, double tol,
                     double twist_offset) {
  const ProfileCurve profile = surface.profile();
  const double a = surface.pitch();

  CumulativeIntegral twist_integral(
      [profile, a](double u) { return twist_rate(rates(profile, u), a).value; }, u0, tol);
  CumulativeIntegral height_integral(
      [profile, a](double u) { return height_rate(rates(profile, u), a).value; }, u0, tol);

  ScalarMap radius(
      [profile, a](double u) {
        const Jet2 z = profile.zeta(u);
        return sqrt(z * z + a * a);
      },
      "sqrt((" + profile.zeta.description() + ")^2 + a^2)");

  ScalarMap twist(
      [profile, a, twist_offset, twist_integral](double u) {
        const Jet2 rate = twist_rate(rates(profile, u), a);
        return Jet2{twist_offset + twist_integral(u), rate.value, rate.d1};
      },
      "twist integral");

  ScalarMap height(
      [profile, a, height_integral](double u) {
        const Jet2 rate = height_rate(rates(profile, u), a);
        return Jet2{height_integral(u), rate.value, rate.d1};
      },
      "height integral");

  return BourImage{surface, u0, twist_offset, std::move(radius), std::move(twist),
                   std::move(height)};
}

NaturalParameters natural_parameters(const HelicoidalSurface& surface, double u, double v,
                                     double u0, double tol) {
  const ProfileCurve& profile = surface.profile();
  const double a = surface.pitch();
  auto arc_rate = [&](double s) {
    const Jet2 z = profile.zeta(s);
    const Jet2 p = profile.phi(s);
    const double z2 = z.value * z.value;
    return std::sqrt(z.d1 * z.d1 + z2 * p.d1 * p.d1 / (z2 + a * a));
  };
  auto angle_rate = [&](double s) {
    const Jet2 z = profile.zeta(s);
    const Jet2 p = profile.phi(s);
    return a * p.d1 / (z.value * z.value + a * a);
  };
  return {integrate(arc_rate, u0, u, tol).value, v + integrate(angle_rate, u0, u, tol).value};
}

double catenoid_profile(double b, double uR) {
  if (!(b > 0.0)) throw DomainError("catenoid neck parameter b must be positive");
  if (!(uR >= b)) {
    throw DomainError("catenoid radius " + std::to_string(uR) + " is inside the neck b = " +
                      std::to_string(b));
  }
  return b * std::acosh(uR / b);
}

RotationalSurface catenoid(double a, double b, const Interval& domain, double twist_offset) {
  if (!(b > 0.0)) throw DomainError("catenoid neck parameter b must be positive");
  ScalarMap radius([a](double u) { return sqrt(Jet2::variable(u) * Jet2::variable(u) + a * a); },
                   "sqrt(u^2 + a^2)");
  ScalarMap height(
      [a, b](double u) {
        const Jet2 k = sqrt(Jet2::variable(u) * Jet2::variable(u) + a * a);
        if (!(k.value >= b)) {
          throw DomainError("catenoid radius is inside the neck at u = " + std::to_string(u));
        }
        return b * acosh(k / b);
      },
      "b acosh(sqrt(u^2 + a^2) / b)");
  RotationalSurface r{std::move(radius), std::move(height), ScalarMap::constant(twist_offset),
                      domain, twist_offset != 0.0};
  return r;
}

ProfileCurve same_gauss_profile(const ScalarMap& zeta, double a, double b, const Interval& domain,
                                double u0, double tol) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("same-Gauss-map pair needs a > 0");
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("same-Gauss-map pair needs b > 0");
  if (b < a && a - b >= 1e-12) {
    throw DomainError("same-Gauss-map pair needs b >= a (sqrt(b^2 - a^2) is imaginary)");
  }
  if (!domain.contains(u0)) throw DomainError("anchor u0 lies outside the domain");

  constexpr int kSamples = 64;
  for (int i = 0; i <= kSamples + 1; ++i) {
    // Endpoints plus 64 interior points.
    const double u = i == 0 ? domain.lo
                     : i == kSamples + 1
                         ? domain.hi
                         : domain.lo + domain.width() * static_cast<double>(i) / (kSamples + 1);
    const double z = zeta(u).value;
    if (z == 0.0) throw DomainError("zeta vanishes at u = " + std::to_string(u));
    if (!(z * z + a * a - b * b > 0.0)) {
      throw DomainError("zeta^2 + a^2 <= b^2 at u = " + std::to_string(u) +
                        " (inside the catenoid neck)");
    }
  }

  if (std::abs(b - a) < 1e-12) return ProfileCurve{zeta, ScalarMap::zero(), domain};

  const double r = std::sqrt(b * b - a * a);
  auto slope = [zeta, a, b, r](double u) {
    const Jet2 z = zeta(u);
    const Jet2 zr = first_order(z.value, z.d1);
    const Jet2 dz = first_order(z.d1, z.d2);
    return r * sqrt(zr * zr + a * a) * dz / (zr * sqrt(zr * zr + (a * a - b * b)));
  };
  CumulativeIntegral phi_integral([slope](double u) { return slope(u).value; }, u0, tol);
  ScalarMap phi(
      [slope, phi_integral](double u) {
        const Jet2 s = slope(u);
        return Jet2{phi_integral(u), s.value, s.d1};
      },
      "same-Gauss-map height");
  return ProfileCurve{zeta, std::move(phi), domain};
}

double aligned_twist_offset(const HelicoidalSurface& surface, double u0) {
  const Jet2 z = surface.profile().zeta(u0);
  const Jet2 p = surface.profile().phi(u0);
  const double y = surface.pitch() * z.d1;
  const double x = z.value * p.d1;
  if (x == 0.0 && y == 0.0) {
    throw DegenerateError("twist alignment undefined: a z' and z p' both vanish");
  }
  return std::atan2(y, x);
}

SameGaussPair same_gauss_pair(const ScalarMap& zeta, double a, double b, const Interval& domain,
                              double u0, double tol) {
  HelicoidalSurface helicoidal(same_gauss_profile(zeta, a, b, domain, u0, tol), a);
  const double offset = aligned_twist_offset(helicoidal, u0);
  BourImage image = bour_image(helicoidal, u0, tol, offset);
  return {std::move(helicoidal), std::move(image)};
}

}  // namespace helisurf
