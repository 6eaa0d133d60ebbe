#pragma once

// Second-order forward-mode differentiation.
//
// A Jet2 carries f(u), f'(u), f''(u) of some function at a fixed point u.
// Arithmetic propagates the product, quotient and chain rules exactly, so a
// composite expression evaluated on jets returns its derivatives to round-off.

#include <cmath>
#include <iosfwd>

namespace helisurf {

struct Jet2 {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  static constexpr Jet2 constant(double c) noexcept { return {c, 0.0, 0.0}; }
  /// The identity map u -> u seeded at `u`.
  static constexpr Jet2 variable(double u) noexcept { return {u, 1.0, 0.0}; }

  bool is_finite() const noexcept {
    return std::isfinite(value) && std::isfinite(d1) && std::isfinite(d2);
  }

  friend constexpr bool operator==(const Jet2&, const Jet2&) = default;
};

/// g(x) where g(x.value) = g0, g'(x.value) = g1, g''(x.value) = g2.
constexpr Jet2 compose(const Jet2& x, double g0, double g1, double g2) noexcept {
  return {g0, g1 * x.d1, g2 * x.d1 * x.d1 + g1 * x.d2};
}

constexpr Jet2 operator-(const Jet2& x) noexcept { return {-x.value, -x.d1, -x.d2}; }

constexpr Jet2 operator+(const Jet2& a, const Jet2& b) noexcept {
  return {a.value + b.value, a.d1 + b.d1, a.d2 + b.d2};
}
constexpr Jet2 operator-(const Jet2& a, const Jet2& b) noexcept {
  return {a.value - b.value, a.d1 - b.d1, a.d2 - b.d2};
}
constexpr Jet2 operator*(const Jet2& a, const Jet2& b) noexcept {
  return {a.value * b.value, a.d1 * b.value + a.value * b.d1,
          a.d2 * b.value + 2.0 * a.d1 * b.d1 + a.value * b.d2};
}

constexpr Jet2 operator+(const Jet2& a, double c) noexcept { return {a.value + c, a.d1, a.d2}; }
constexpr Jet2 operator+(double c, const Jet2& a) noexcept { return a + c; }
constexpr Jet2 operator-(const Jet2& a, double c) noexcept { return {a.value - c, a.d1, a.d2}; }
constexpr Jet2 operator-(double c, const Jet2& a) noexcept { return {c - a.value, -a.d1, -a.d2}; }
constexpr Jet2 operator*(const Jet2& a, double c) noexcept { return {a.value * c, a.d1 * c, a.d2 * c}; }
constexpr Jet2 operator*(double c, const Jet2& a) noexcept { return a * c; }
constexpr Jet2 operator/(const Jet2& a, double c) noexcept { return {a.value / c, a.d1 / c, a.d2 / c}; }

// The functions below validate their arguments and throw DomainError outside
// the natural domain (including points where a derivative is unbounded).

Jet2 reciprocal(const Jet2& x);
Jet2 operator/(const Jet2& a, const Jet2& b);
Jet2 operator/(double c, const Jet2& b);

Jet2 sin(const Jet2& x);
Jet2 cos(const Jet2& x);
Jet2 tan(const Jet2& x);
Jet2 exp(const Jet2& x);
Jet2 log(const Jet2& x);
Jet2 sqrt(const Jet2& x);
Jet2 sinh(const Jet2& x);
Jet2 cosh(const Jet2& x);
Jet2 asinh(const Jet2& x);
Jet2 acosh(const Jet2& x);

/// x^p. Integer p accepts any base (p < 0 needs x != 0); non-integer p
/// requires x > 0.
Jet2 pow(const Jet2& x, double p);

std::ostream& operator<<(std::ostream& os, const Jet2& j);

}  // namespace helisurf
