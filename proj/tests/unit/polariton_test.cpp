#include "test_support.hpp"

#include <sglight/analytic_propagator.hpp>
#include <sglight/polariton.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace sglight;

namespace {

std::vector<cplx> random_field(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d;
  std::vector<cplx> v(n);
  for (auto& z : v) z = {d(rng), d(rng)};
  return v;
}

Scenario dsp_scenario() {
  Scenario s;
  s.mode = Mode::MagneticGradient;
  s.mu = {-1, 1, 0, 0};
  s.b1 = 0.1;
  s.k_probe = 10.0;
  s.medium_length = 2.0;
  return s;
}

}  // namespace

TEST(MixingAngle, Examples) {
  EXPECT_DOUBLE_EQ(mixing_angle(1.0, 4.0, 2.0), std::numbers::pi / 4);
  EXPECT_EQ(mixing_angle(0.0, 4.0, 2.0), 0.0);
  const double th = mixing_angle(std::sqrt(3.0), 1.0, 1.0);
  EXPECT_NEAR(std::pow(std::cos(th), 2), 0.25, 1e-15);
  EXPECT_THROW(mixing_angle(1.0, 1.0, 0.0), ZeroControlField);
}

TEST(Polaritons, IdentityAtZeroAngle) {
  std::mt19937_64 rng(1);
  const auto e = random_field(rng, 32), s = random_field(rng, 32);
  const auto p = to_polaritons(e, s, 0.0, 4.0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    EXPECT_EQ(p.dark[i], e[i]);
    EXPECT_EQ(p.bright[i], 4.0 * s[i]);
  }
  const auto back = from_polaritons(p, 0.0, 4.0);
  EXPECT_EQ(back.e, e);
}

TEST(Polaritons, PureMatterAtRightAngle) {
  std::mt19937_64 rng(2);
  const auto e = random_field(rng, 16), s = random_field(rng, 16);
  const auto p = to_polaritons(e, s, std::numbers::pi / 2, 1.0);
  for (std::size_t i = 0; i < e.size(); ++i) EXPECT_LT(std::abs(p.dark[i] + 2.0 * s[i]), 1e-15);
}

TEST(Polaritons, RoundTripAndQuadraticForm) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> th(0.0, std::numbers::pi / 2), nd(0.5, 100.0);
  for (int k = 0; k < 50; ++k) {
    const double theta = th(rng), n = nd(rng);
    const auto e = random_field(rng, 64), s = random_field(rng, 64);
    const auto p = to_polaritons(e, s, theta, n);
    const auto back = from_polaritons(p, theta, n);
    for (std::size_t i = 0; i < e.size(); ++i) {
      EXPECT_LT(std::abs(back.e[i] - e[i]), 1e-14 * std::max(1.0, std::abs(e[i])) * 10);
      EXPECT_LT(std::abs(back.sigma_j4[i] - s[i]), 1e-14 * std::max(1.0, std::abs(s[i])) * 10);
      const double before = std::norm(e[i]) + 4.0 * n * std::norm(s[i]);
      const double after = std::norm(p.dark[i]) + std::norm(p.bright[i]);
      EXPECT_NEAR(after, before, 1e-14 * before * 10);
    }
  }
  EXPECT_TRUE(from_polaritons({{}, {}}, 0.3, 1.0).e.empty());
  EXPECT_THROW(to_polaritons(std::vector<cplx>(3), std::vector<cplx>(2), 0.1, 1.0), Error);
}

TEST(Polaritons, AdiabaticCoherenceLeavesNoBrightPart) {
  std::mt19937_64 rng(4);
  const double g = 0.7, n = 9.0, omega = 1.3;
  const auto e = random_field(rng, 32);
  const auto sigma = adiabatic_spin_coherence(e, g, omega);
  const auto p = to_polaritons(e, sigma, mixing_angle(g, n, omega), n);
  for (std::size_t i = 0; i < e.size(); ++i) {
    EXPECT_LT(std::abs(p.bright[i]), 1e-14 * std::abs(e[i]) * 10);
    EXPECT_GT(std::abs(p.dark[i]), 0.5 * std::abs(e[i]));
  }
}

TEST(DspKinematics, Example) {
  const auto s = dsp_scenario();
  const auto k = dsp_kinematics(s, derive(s));
  EXPECT_DOUBLE_EQ(k.v_group, 0.5);
  EXPECT_DOUBLE_EQ(k.mass_b, 20.0);
  EXPECT_NEAR(k.deflection[0], -0.02, 1e-15);
  EXPECT_NEAR(k.deflection[1], 0.02, 1e-15);
  for (int j = 0; j < 2; ++j) {
    EXPECT_NEAR(k.deflection[j], k.v_transverse[j] / k.v_group, 1e-15);
    EXPECT_NEAR(k.deflection[j] * s.medium_length / 2.0, k.exit_centers[j], 1e-15);
  }
}

TEST(DspKinematics, DeflectionIsExitCenterSlopeInLength) {
  auto s = dsp_scenario();
  const auto k = dsp_kinematics(s, derive(s));
  const double h = 1e-4;
  auto plus = s, minus = s;
  plus.medium_length += h;
  minus.medium_length -= h;
  const auto xp = exit_centers_magnetic(plus, derive(plus));
  const auto xm = exit_centers_magnetic(minus, derive(minus));
  EXPECT_NEAR(k.deflection[0], (xp.first - xm.first) / (2 * h), 1e-10);
  EXPECT_NEAR(k.deflection[1], (xp.second - xm.second) / (2 * h), 1e-10);
}

TEST(DspKinematics, ZeroGradientAndMirrorSymmetry) {
  auto s = dsp_scenario();
  s.b1 = 0.0;
  auto k = dsp_kinematics(s, derive(s));
  EXPECT_EQ(k.deflection, (std::array<double, 2>{0, 0}));
  EXPECT_EQ(k.v_transverse, (std::array<double, 2>{0, 0}));

  s.b1 = 0.3;
  s.mu = {-0.5, 0.5, 0.2, 0.0};
  k = dsp_kinematics(s, derive(s));
  EXPECT_EQ(k.deflection[0], -k.deflection[1]);
}

TEST(DspKinematics, FieldPictureAgreement) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    auto s = sglight::testing::random_scenario(rng);
    s.mode = Mode::MagneticGradient;
    s.b1 = 0.4;
    const auto p = derive(s);
    const auto k = dsp_kinematics(s, p);
    const auto [x1, x2] = exit_centers_magnetic(s, p);
    EXPECT_NEAR(k.exit_centers[0], x1, 1e-12 * std::abs(x1));
    EXPECT_NEAR(k.exit_centers[1], x2, 1e-12 * std::abs(x2));
    EXPECT_NEAR(k.mass_b * k.v_group, s.k_probe, 1e-12 * s.k_probe);
  }
}

TEST(DspKinematics, WrongMode) {
  auto s = dsp_scenario();
  s.mode = Mode::Uniform;
  s.b1 = 0.0;
  EXPECT_THROW(dsp_kinematics(s, derive(s)), WrongMode);
}

TEST(DspKinematics, SlowerLightForWeakerControl) {
  auto s = dsp_scenario();
  double prev = 1e300;
  for (double omega : {4.0, 2.0, 1.0, 0.5, 0.25}) {
    s.omega0 = omega;
    const double v = dsp_kinematics(s, derive(s)).v_group;
    EXPECT_LT(v, prev);
    prev = v;
  }
}
