#include <gtest/gtest.h>

#include <cmath>

#include "corpus.hpp"
#include "helisurf/bour.hpp"
#include "helisurf/calculus.hpp"
#include "helisurf/errors.hpp"
#include "helisurf/forms.hpp"

namespace helisurf {
namespace {

using testing::cubic_example;
using testing::full_corpus;
using testing::right_helicoid;

TEST(Forms, RightHelicoidTable) {
  for (double a : {0.5, 1.0, 2.0}) {
    const HelicoidalSurface s = right_helicoid(a).surface();
    for (double u : {0.5, 1.25, 2.0}) {
      const double w = u * u + a * a;
      const PointGeometry g = point_geometry(eval_helicoidal(s, u, 0.9));
      EXPECT_NEAR(g.first.E, 1.0, 1e-14);
      EXPECT_NEAR(g.first.F, 0.0, 1e-14);
      EXPECT_NEAR(g.first.G, w, 1e-14);
      EXPECT_NEAR(g.second.L, 0.0, 1e-14);
      EXPECT_NEAR(g.second.M, -a / std::sqrt(w), 1e-14);
      EXPECT_NEAR(g.second.N, 0.0, 1e-14);
      EXPECT_NEAR(g.third.X, a * a / w, 1e-14);
      EXPECT_NEAR(g.third.Y, 0.0, 1e-14);
      EXPECT_NEAR(g.third.Z, a * a, 1e-14);
      EXPECT_NEAR(g.K, -a * a / (w * w), 1e-14);
      EXPECT_NEAR(g.H, 0.0, 1e-14);
    }
  }
}

TEST(Forms, CatenoidTable) {
  for (double a : {0.5, 1.0, 2.0}) {
    const RotationalSurface c = catenoid(a, a, Interval{0.5, 2.0});
    for (double u : {0.5, 1.25, 2.0}) {
      const double w = u * u + a * a;
      const PointGeometry g = point_geometry(eval_rotational(c, u, 2.2));
      EXPECT_NEAR(g.first.E, 1.0, 1e-13);
      EXPECT_NEAR(g.first.F, 0.0, 1e-13);
      EXPECT_NEAR(g.first.G, w, 1e-13);
      EXPECT_NEAR(g.second.L, -a / w, 1e-13);
      EXPECT_NEAR(g.second.M, 0.0, 1e-13);
      EXPECT_NEAR(g.second.N, a, 1e-13);
      EXPECT_NEAR(g.third.X, a * a / w, 1e-13);
      EXPECT_NEAR(g.third.Z, a * a, 1e-13);
      EXPECT_NEAR(g.K, -a * a / (w * w), 1e-13);
    }
  }
}

TEST(Forms, CubicExampleAtUnitPoint) {
  // zeta = u^2, phi = u^3, a = 1 at (u, v) = (1, 0).
  const HelicoidalSurface s = cubic_example(1.0).surface();
  const SurfaceJet j = eval_helicoidal(s, 1.0, 0.0);
  const FirstForm I = first_form(j);
  EXPECT_DOUBLE_EQ(I.E, 13.0);
  EXPECT_DOUBLE_EQ(I.F, 3.0);
  EXPECT_DOUBLE_EQ(I.G, 2.0);
  const SecondForm II = second_form(j);
  const double K = gaussian_curvature(I, II);
  EXPECT_NEAR(K, 2.0 / 289.0, 1e-15);
  EXPECT_NEAR(gaussian_curvature_closed(s.profile(), 1.0, 1.0), 2.0 / 289.0, 1e-15);
  EXPECT_DOUBLE_EQ(phi_functional(s.profile(), 1.0, 1.0), 75.0);
  EXPECT_DOUBLE_EQ(helicoidal_metric_det(s.profile(), 1.0, 1.0), 17.0);
  EXPECT_NEAR(mean_curvature(I, II), 0.53500505522720508864, 1e-15);
  EXPECT_NEAR(mean_curvature(I, II), 75.0 / (2.0 * std::pow(17.0, 1.5)), 1e-15);
  EXPECT_NEAR(mean_curvature_rotational(s.profile(), 1.0, 1.0), 0.31476937113165049341, 1e-15);
}

TEST(Forms, CubicExampleRotationalMeanCurvatureFromJets) {
  const HelicoidalSurface s = cubic_example(1.0).surface();
  const RotationalSurface r = bour_image(s, 1.0).surface();
  const SurfaceJet j = eval_rotational(r, 1.0, 0.0);
  EXPECT_NEAR(mean_curvature(first_form(j), second_form(j)), 0.31476937113165049341, 1e-14);
}

TEST(FormsProperty, NormalIsUnitAndOrthogonal) {
  for (const auto& entry : full_corpus()) {
    const HelicoidalSurface s = entry.surface();
    for (double t : {0.0, 0.5, 1.0}) {
      const double u = entry.domain.lo + t * entry.domain.width();
      const SurfaceJet j = eval_helicoidal(s, u, 3.0 * t);
      const Vec3 n = gauss_map(j);
      EXPECT_NEAR(n.norm(), 1.0, 1e-14);
      EXPECT_NEAR(n.dot(j.x_u), 0.0, 1e-13 * j.x_u.norm());
      EXPECT_NEAR(n.dot(j.x_v), 0.0, 1e-13 * j.x_v.norm());
      const FirstForm I = first_form(j);
      EXPECT_NEAR(j.x_u.cross(j.x_v).squaredNorm(), I.det(), 1e-12 * (I.E * I.G));
    }
  }
}

TEST(FormsProperty, ThirdFormGramMatchesNormalDerivatives) {
  for (const auto& entry : full_corpus()) {
    SCOPED_TRACE(entry.name);
    const Surface s = entry.surface();
    const double u = entry.domain.lo + 0.37 * entry.domain.width();
    const double v = 1.1;
    const Vec3 n_u =
        richardson_derivative([&](double t) { return gauss_map(evaluate(s, t, v)); }, u, 1e-3);
    const Vec3 n_v =
        richardson_derivative([&](double t) { return gauss_map(evaluate(s, u, t)); }, v, 1e-3);
    const SurfaceJet j = evaluate(s, u, v);
    const FirstForm I = first_form(j);
    const SecondForm II = second_form(j);
    const ThirdForm e = third_form_gram(I, II);
    const double scale = 1.0 + std::abs(e.X) + std::abs(e.Z);
    EXPECT_NEAR(n_u.dot(n_u), e.X, 1e-7 * scale);
    EXPECT_NEAR(n_u.dot(n_v), e.Y, 1e-7 * scale);
    EXPECT_NEAR(n_v.dot(n_v), e.Z, 1e-7 * scale);
    const ThirdForm bare = third_form(I, II);
    EXPECT_NEAR(bare.X, e.X * I.det(), 1e-12 * (1.0 + std::abs(bare.X)));
    // III = 2H II - K I.
    const double H = mean_curvature(I, II), K = gaussian_curvature(I, II);
    EXPECT_NEAR(e.X, 2.0 * H * II.L - K * I.E, 1e-10 * scale);
    EXPECT_NEAR(e.Y, 2.0 * H * II.M - K * I.F, 1e-10 * scale);
    EXPECT_NEAR(e.Z, 2.0 * H * II.N - K * I.G, 1e-10 * scale);
  }
}

TEST(FormsProperty, ClosedFormCurvatureMatchesJets) {
  for (const auto& entry : full_corpus()) {
    const HelicoidalSurface s = entry.surface();
    for (double t : {0.0, 0.3, 0.8, 1.0}) {
      const double u = entry.domain.lo + t * entry.domain.width();
      const SurfaceJet j = eval_helicoidal(s, u, 0.0);
      EXPECT_NEAR(gaussian_curvature(first_form(j), second_form(j)),
                  gaussian_curvature_closed(s.profile(), entry.pitch, u), 1e-11)
          << entry.name;
    }
  }
}

TEST(Forms, SingularPointThrows) {
  // A constant profile has x_u = 0.
  const HelicoidalSurface s(
      ProfileCurve{ScalarMap::constant(1.0), ScalarMap::zero(), Interval{0.0, 1.0}}, 1.0);
  const SurfaceJet j = eval_helicoidal(s, 0.5, 0.0);
  EXPECT_TRUE(first_form(j).degenerate());
  EXPECT_THROW(gauss_map(j), DegenerateError);
  EXPECT_THROW(gaussian_curvature(first_form(j), second_form(j)), DegenerateError);
}

}  // namespace
}  // namespace helisurf
