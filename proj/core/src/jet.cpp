#include "helisurf/jet.hpp"

#include <ostream>
#include <string>

#include "helisurf/errors.hpp"

namespace helisurf {

namespace {

[[noreturn]] void domain_fail(const char* fn, double x) {
  throw DomainError(std::string(fn) + ": argument " + std::to_string(x) +
                    " outside the function's domain");
}

bool is_integer(double p) { return std::isfinite(p) && std::floor(p) == p; }

}  // namespace

Jet2 reciprocal(const Jet2& x) {
  if (x.value == 0.0) domain_fail("division", x.value);
  const double r = 1.0 / x.value;
  return compose(x, r, -r * r, 2.0 * r * r * r);
}

Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }
Jet2 operator/(double c, const Jet2& b) { return c * reciprocal(b); }

Jet2 sin(const Jet2& x) {
  const double s = std::sin(x.value), c = std::cos(x.value);
  return compose(x, s, c, -s);
}

Jet2 cos(const Jet2& x) {
  const double s = std::sin(x.value), c = std::cos(x.value);
  return compose(x, c, -s, -c);
}

Jet2 tan(const Jet2& x) {
  const double c = std::cos(x.value);
  if (c == 0.0) domain_fail("tan", x.value);
  const double t = std::tan(x.value);
  const double sec2 = 1.0 + t * t;
  return compose(x, t, sec2, 2.0 * t * sec2);
}

Jet2 exp(const Jet2& x) {
  const double e = std::exp(x.value);
  return compose(x, e, e, e);
}

Jet2 log(const Jet2& x) {
  if (!(x.value > 0.0)) domain_fail("log", x.value);
  const double r = 1.0 / x.value;
  return compose(x, std::log(x.value), r, -r * r);
}

Jet2 sqrt(const Jet2& x) {
  if (x.value == 0.0 && x.d1 == 0.0 && x.d2 == 0.0) return Jet2::constant(0.0);
  if (!(x.value > 0.0)) domain_fail("sqrt", x.value);
  const double s = std::sqrt(x.value);
  return compose(x, s, 0.5 / s, -0.25 / (s * x.value));
}

Jet2 sinh(const Jet2& x) {
  const double s = std::sinh(x.value), c = std::cosh(x.value);
  return compose(x, s, c, s);
}

Jet2 cosh(const Jet2& x) {
  const double s = std::sinh(x.value), c = std::cosh(x.value);
  return compose(x, c, s, c);
}

Jet2 asinh(const Jet2& x) {
  const double q = 1.0 + x.value * x.value;
  const double r = 1.0 / std::sqrt(q);
  return compose(x, std::asinh(x.value), r, -x.value * r / q);
}

Jet2 acosh(const Jet2& x) {
  if (x.value == 1.0 && x.d1 == 0.0 && x.d2 == 0.0) return Jet2::constant(0.0);
  if (!(x.value > 1.0)) domain_fail("acosh", x.value);
  const double q = x.value * x.value - 1.0;
  const double r = 1.0 / std::sqrt(q);
  return compose(x, std::acosh(x.value), r, -x.value * r / q);
}

Jet2 pow(const Jet2& x, double p) {
  if (p == 0.0) return Jet2::constant(1.0);
  if (p == 1.0) return x;
  if (is_integer(p)) {
    if (p < 0.0 && x.value == 0.0) domain_fail("pow", x.value);
    // Coefficients vanish exactly for small powers, so no 0 * inf at x = 0.
    const double g0 = std::pow(x.value, p);
    const double g1 = p * std::pow(x.value, p - 1.0);
    const double g2 = p == 2.0 ? 2.0 : p * (p - 1.0) * std::pow(x.value, p - 2.0);
    return compose(x, g0, g1, g2);
  }
  if (!(x.value > 0.0)) domain_fail("pow", x.value);
  const double g0 = std::pow(x.value, p);
  return compose(x, g0, p * g0 / x.value, p * (p - 1.0) * g0 / (x.value * x.value));
}

std::ostream& operator<<(std::ostream& os, const Jet2& j) {
  return os << "Jet2{" << j.value << ", " << j.d1 << ", " << j.d2 << "}";
}

}  // namespace helisurf
