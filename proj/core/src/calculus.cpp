#include "helisurf/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <queue>
#include <string>
#include <vector>

#include "helisurf/errors.hpp"

namespace helisurf {

namespace {

// Kronrod abscissae (descending, last is the midpoint) and weights; the
// Gauss 7-point rule uses every other node.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
  int depth = 0;
};

struct ByError {
  bool operator()(const Segment& x, const Segment& y) const { return x.error < y.error; }
};

double sample(const RealFunction& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw DomainError("integrand is not finite at u = " + std::to_string(x));
  }
  return y;
}

Segment gauss_kronrod(const RealFunction& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = sample(f, center);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  double abs_sum = std::abs(kronrod);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double f1 = sample(f, center - dx);
    const double f2 = sample(f, center + dx);
    kronrod += kWgk[i] * (f1 + f2);
    abs_sum += kWgk[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) gauss += kWg[i / 2] * (f1 + f2);
  }
  Segment s{a, b, kronrod * half, std::abs((kronrod - gauss) * half), depth};
  // Differences at the level of round-off carry no information.
  const double noise = 50.0 * std::numeric_limits<double>::epsilon() * abs_sum * std::abs(half);
  if (s.error < noise) s.error = 0.0;
  return s;
}

bool splittable(const Segment& s) {
  const double mid = 0.5 * (s.a + s.b);
  return s.depth < kMaxBisectionDepth && mid > s.a && mid < s.b;
}

}  // namespace

QuadratureResult integrate(const RealFunction& f, double a, double b, double tol) {
  if (!(tol > 0.0)) throw QuadratureError("quadrature tolerance must be positive");
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw QuadratureError("integration limits must be finite");
  }
  if (a == b) return {};
  if (b < a) {
    QuadratureResult r = integrate(f, b, a, tol);
    r.value = -r.value;
    return r;
  }

  std::priority_queue<Segment, std::vector<Segment>, ByError> active;
  std::vector<Segment> settled;  // cannot be refined further
  Segment first = gauss_kronrod(f, a, b, 0);
  double total = first.value;
  double total_error = first.error;
  active.push(first);
  std::size_t subdivisions = 1;

  while (total_error > std::max(tol, tol * std::abs(total)) && !active.empty()) {
    Segment worst = active.top();
    if (!splittable(worst)) {
      active.pop();
      settled.push_back(worst);
      continue;
    }
    if (subdivisions >= kMaxSubdivisions) break;
    active.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = gauss_kronrod(f, worst.a, mid, worst.depth + 1);
    Segment right = gauss_kronrod(f, mid, worst.b, worst.depth + 1);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    active.push(left);
    active.push(right);
    ++subdivisions;
  }

  // Re-sum in interval order so the result is independent of heap drift.
  std::vector<Segment> all = std::move(settled);
  while (!active.empty()) {
    all.push_back(active.top());
    active.pop();
  }
  std::sort(all.begin(), all.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
  QuadratureResult result;
  result.subdivisions = subdivisions;
  for (const Segment& s : all) {
    result.value += s.value;
    result.error_estimate += s.error;
  }
  if (result.error_estimate > std::max(tol, tol * std::abs(result.value))) {
    throw QuadratureError("quadrature did not converge on [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]: error estimate " +
                          std::to_string(result.error_estimate) + " after " +
                          std::to_string(subdivisions) + " subdivisions");
  }
  return result;
}

struct CumulativeIntegral::State {
  RealFunction f;
  double u0;
  double tol;
  double spacing;
  mutable std::mutex mutex;
  std::map<long long, double> anchors{{0, 0.0}};

  double lattice(long long k) const { return u0 + static_cast<double>(k) * spacing; }

  double anchor_value(long long k) {
    std::lock_guard lock(mutex);
    auto it = anchors.find(k);
    if (it != anchors.end()) return it->second;
    const long long step = k > 0 ? 1 : -1;
    // Walk outward from the nearest cached anchor on the same side of u0.
    long long j = k;
    while (anchors.find(j) == anchors.end()) j -= step;
    double value = anchors[j];
    while (j != k) {
      value += integrate(f, lattice(j), lattice(j + step), tol).value;
      j += step;
      anchors.emplace(j, value);
    }
    return value;
  }
};

CumulativeIntegral::CumulativeIntegral(RealFunction f, double u0, double tol,
                                       double anchor_spacing)
    : state_(std::make_shared<State>()) {
  if (!(tol > 0.0)) throw QuadratureError("quadrature tolerance must be positive");
  if (!(anchor_spacing > 0.0)) throw QuadratureError("anchor spacing must be positive");
  if (!std::isfinite(u0)) throw QuadratureError("anchor must be finite");
  state_->f = std::move(f);
  state_->u0 = u0;
  state_->tol = tol;
  state_->spacing = anchor_spacing;
}

double CumulativeIntegral::operator()(double u) const {
  State& s = *state_;
  if (u == s.u0) return 0.0;
  const long long k = static_cast<long long>(std::trunc((u - s.u0) / s.spacing));
  const double base = s.anchor_value(k);
  return base + integrate(s.f, s.lattice(k), u, s.tol).value;
}

double CumulativeIntegral::anchor() const noexcept { return state_->u0; }
double CumulativeIntegral::tolerance() const noexcept { return state_->tol; }

std::size_t CumulativeIntegral::cached_anchors() const {
  std::lock_guard lock(state_->mutex);
  return state_->anchors.size();
}

double default_fd_step(double x) noexcept { return 1e-4 * std::max(1.0, std::abs(x)); }

namespace {

double checked(const RealFunction& g, double x) {
  const double y = g(x);
  if (!std::isfinite(y)) {
    throw DomainError("finite-difference sample is not finite at " + std::to_string(x));
  }
  return y;
}

}  // namespace

double central_derivative(const RealFunction& g, double x, double h0) {
  if (!(h0 > 0.0)) throw DomainError("finite-difference step must be positive");
  return richardson_derivative([&](double s) { return checked(g, s); }, x, h0);
}

double central_derivative(const RealFunction& g, double x) {
  return central_derivative(g, x, default_fd_step(x));
}

double central_second_derivative(const RealFunction& g, double x, double h0) {
  if (!(h0 > 0.0)) throw DomainError("finite-difference step must be positive");
  const double center = checked(g, x);
  auto diff = [&](double h) {
    return (checked(g, x + h) - 2.0 * center + checked(g, x - h)) / (h * h);
  };
  const double coarse = diff(h0), mid = diff(0.5 * h0), fine = diff(0.25 * h0);
  const double r1 = (4.0 * mid - coarse) / 3.0;
  const double r2 = (4.0 * fine - mid) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

}  // namespace helisurf
