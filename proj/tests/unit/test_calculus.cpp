#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "helisurf/calculus.hpp"
#include "helisurf/errors.hpp"
#include "helisurf/surfaces.hpp"

namespace helisurf {
namespace {

TEST(Integrate, PolynomialsAndTranscendentals) {
  EXPECT_NEAR(integrate([](double x) { return x * x; }, 0.0, 1.0).value, 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(integrate([](double x) { return std::sin(x); }, 0.0, M_PI).value, 2.0, 1e-13);
  EXPECT_NEAR(integrate([](double x) { return std::exp(-x * x); }, -5.0, 5.0).value,
              std::sqrt(M_PI) * std::erf(5.0), 1e-12);
  EXPECT_NEAR(integrate([](double x) { return 1.0 / x; }, 1.0, 100.0).value, std::log(100.0),
              1e-10);
}

TEST(Integrate, OrientationAndEmptyInterval) {
  const RealFunction f = [](double x) { return std::cos(x) + x; };
  EXPECT_EQ(integrate(f, 0.3, 1.7).value, -integrate(f, 1.7, 0.3).value);
  const QuadratureResult empty = integrate(f, 2.0, 2.0);
  EXPECT_EQ(empty.value, 0.0);
  EXPECT_EQ(empty.error_estimate, 0.0);
}

TEST(Integrate, AdditiveOverSubintervals) {
  const RealFunction f = [](double x) { return std::sqrt(1.0 + x * x * x); };
  const double whole = integrate(f, 0.0, 2.0).value;
  const double parts = integrate(f, 0.0, 0.7).value + integrate(f, 0.7, 2.0).value;
  EXPECT_NEAR(whole, parts, 1e-12);
}

TEST(Integrate, ReportsErrorEstimate) {
  const QuadratureResult r = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-10);
  EXPECT_NEAR(r.value, 2.0 / 3.0, 1e-9);
  EXPECT_LE(r.error_estimate, 1e-10);
  EXPECT_GE(r.subdivisions, 1u);
}

TEST(Integrate, NonFiniteSampleIsDomainError) {
  EXPECT_THROW(integrate([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0), DomainError);
  EXPECT_THROW(integrate([](double x) { return std::log(x - 0.5); }, 0.0, 1.0), DomainError);
}

TEST(Integrate, BudgetExhaustionIsQuadratureError) {
  EXPECT_THROW(integrate([](double x) { return std::sin(1e7 * x); }, 0.0, 1.0, 1e-14),
               QuadratureError);
}

TEST(Cumulative, MatchesDirectIntegration) {
  const RealFunction f = [](double x) { return std::cosh(x) / (1.0 + x * x); };
  const CumulativeIntegral F(f, 0.3);
  EXPECT_EQ(F(0.3), 0.0);
  for (double u : {-1.2, -0.3, 0.0, 0.31, 0.9, 2.5}) {
    EXPECT_NEAR(F(u), integrate(f, 0.3, u).value, 1e-10) << u;
  }
  EXPECT_EQ(F.anchor(), 0.3);
  EXPECT_EQ(F.tolerance(), kDefaultQuadratureTolerance);
}

TEST(Cumulative, ValuesDoNotDependOnQueryHistory) {
  const RealFunction f = [](double x) { return std::exp(std::sin(3.0 * x)); };
  const CumulativeIntegral forward(f, 0.0);
  const CumulativeIntegral backward(f, 0.0);
  std::vector<double> us;
  for (int i = 0; i <= 40; ++i) us.push_back(-2.0 + 0.1 * i);
  std::vector<double> a, b(us.size());
  for (double u : us) a.push_back(forward(u));
  for (std::size_t i = us.size(); i-- > 0;) b[i] = backward(us[i]);
  for (std::size_t i = 0; i < us.size(); ++i) EXPECT_EQ(a[i], b[i]) << us[i];
  EXPECT_GT(forward.cached_anchors(), 0u);
}

TEST(Cumulative, ConcurrentCallersSeeSequentialValues) {
  const RealFunction f = [](double x) { return 1.0 / (1.0 + x * x); };
  const CumulativeIntegral reference(f, 0.0);
  std::vector<double> us;
  for (int i = 0; i < 64; ++i) us.push_back(-4.0 + 0.13 * i);
  std::vector<double> expected;
  for (double u : us) expected.push_back(reference(u));

  const CumulativeIntegral shared(f, 0.0);
  std::atomic<int> mismatches{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t k = 0; k < us.size(); ++k) {
        const std::size_t i = (k * 7 + static_cast<std::size_t>(t) * 13) % us.size();
        if (shared(us[i]) != expected[i]) ++mismatches;
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(mismatches.load(), 0);
  for (std::size_t i = 0; i < us.size(); ++i) EXPECT_NEAR(expected[i], std::atan(us[i]), 1e-10);
}

TEST(Differences, CentralDerivatives) {
  EXPECT_NEAR(central_derivative([](double x) { return std::sin(x); }, 1.0), std::cos(1.0),
              1e-10);
  EXPECT_NEAR(central_derivative([](double x) { return std::exp(x); }, 2.0, 1e-2), std::exp(2.0),
              1e-10);
  EXPECT_NEAR(central_second_derivative([](double x) { return std::exp(x); }, 0.5, 1e-2),
              std::exp(0.5), 1e-9);
  EXPECT_EQ(default_fd_step(0.5), 1e-4);
  EXPECT_EQ(default_fd_step(-20.0), 2e-3);
}

TEST(Differences, RichardsonOnVectors) {
  const Vec3 d = richardson_derivative(
      [](double t) { return Vec3(std::cos(t), std::sin(t), t * t); }, 0.4, 1e-2);
  EXPECT_NEAR(d.x(), -std::sin(0.4), 1e-11);
  EXPECT_NEAR(d.y(), std::cos(0.4), 1e-11);
  EXPECT_NEAR(d.z(), 0.8, 1e-12);
}

TEST(Differences, NonFiniteSampleThrows) {
  EXPECT_THROW(central_derivative([](double x) { return std::log(x); }, 0.0, 1e-3), DomainError);
}

}  // namespace
}  // namespace helisurf
