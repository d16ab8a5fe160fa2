// Copyright 2026 The wigrot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wigrot/boost.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

using namespace wigrot;
using C = std::complex<double>;

namespace {

constexpr double kP = 0.66332495807107996982;  // gamma_p = 1.2

const PreparationContext kPhysicalContexts[] = {
    PreparationContext::prepared_plus_y, PreparationContext::prepared_minus_y,
    PreparationContext::confined};

Spinord random_spinor(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return Spinord(C(g(rng), g(rng)), C(g(rng), g(rng))).normalized();
}

}  // namespace

TEST(BoostLinear, StandingWaveInZ) {
  const auto boost = BoostParameter::from_gamma(10.0);
  const double s = wigner_half_angle_sine(1.2, 10.0);
  const double c = std::sqrt(1.0 - s * s);
  const auto out = boost_linear(standing_wave_state(kP, plus_z()), boost);
  ASSERT_EQ(out.size(), 2u);
  // +p picks up +i sin(phi/2) on |-Z>, -p picks up -i sin(phi/2).
  EXPECT_TRUE(out.components()[0].spin.isApprox(Spinord(C(c), C(0, s)), 1e-14));
  EXPECT_TRUE(out.components()[1].spin.isApprox(Spinord(C(c), C(0, -s)), 1e-14));
  EXPECT_NEAR(out.norm_squared(), 1.0, 1e-14);
}

TEST(BoostLinear, SpinAlongRotationAxisStaysOnRay) {
  const auto boost = BoostParameter::from_gamma(10.0);
  for (LinearPhase phase : {LinearPhase::ray_aligned, LinearPhase::su2}) {
    for (const Spinord& spin : {plus_x(), minus_x()}) {
      const auto out = boost_linear(standing_wave_state(kP, spin), boost, phase);
      for (const auto& comp : out.components()) {
        EXPECT_NEAR(ray_overlap(spin, comp.spin), 1.0, 1e-14);
      }
    }
  }
  // The ray-aligned map leaves the x standing wave untouched; SU(2) adds
  // opposite eigenphases e^{+-i phi/2} to the two momenta.
  const auto in = standing_wave_state(kP, plus_x());
  const auto aligned = boost_linear(in, boost, LinearPhase::ray_aligned);
  EXPECT_NEAR(std::abs(inner_product(in, aligned) - 1.0), 0.0, 1e-14);
  const auto su2 = boost_linear(in, boost, LinearPhase::su2);
  const double phi = wigner_angle(FourMomentum(kP), boost);
  EXPECT_NEAR(std::abs(inner_product(in, su2)), std::cos(phi / 2), 1e-14);
}

TEST(Boost, ZeroBoostIsIdentity) {
  const auto none = BoostParameter::from_speed(0.0);
  const auto in = standing_wave_state(kP, plus_z());
  EXPECT_NEAR(std::abs(inner_product(in, boost_linear(in, none)) - 1.0), 0.0, 1e-15);
  for (auto prep : kPhysicalContexts) {
    EXPECT_NEAR(std::abs(inner_product(in, boost_physical(in, none, prep)) - 1.0),
                0.0, 1e-15);
  }
}

TEST(BoostPhysical, PreparedMinusYUsesBackwardRotation) {
  const auto boost = BoostParameter::from_gamma(10.0);
  const auto out = boost_physical(standing_wave_state(kP, plus_z()), boost,
                                  PreparationContext::prepared_minus_y);
  const Spinord expected = wigrot::apply(
      wigner_rotation(wigner_angle(FourMomentum(-kP), boost)), plus_z());
  for (const auto& c : out.components()) {
    EXPECT_TRUE(c.spin.isApprox(expected, 1e-14));
  }
}

TEST(BoostPhysical, ConfinedLeavesStateUnchanged) {
  const auto in = standing_wave_state(kP, plus_z());
  const auto out =
      boost_physical(in, BoostParameter::from_gamma(1e3), PreparationContext::confined);
  for (std::size_t k = 0; k < in.size(); ++k) {
    EXPECT_EQ(in.components()[k].spin, out.components()[k].spin);
    EXPECT_EQ(in.components()[k].amplitude, out.components()[k].amplitude);
  }
}

TEST(BoostPhysical, PreparationSignFlipsRotation) {
  const auto boost = BoostParameter::from_gamma(10.0);
  const auto in = standing_wave_state(kP, plus_x());
  const auto plus = boost_physical(in, boost, PreparationContext::prepared_plus_y);
  const auto minus = boost_physical(in, boost, PreparationContext::prepared_minus_y);
  const double phi = wigner_angle(FourMomentum(kP), boost);
  for (std::size_t k = 0; k < in.size(); ++k) {
    EXPECT_TRUE(plus.components()[k].spin.isApprox(
        std::polar(1.0, phi) * minus.components()[k].spin, 1e-14));
  }
}

TEST(BoostPhysical, Errors) {
  const auto boost = BoostParameter::from_gamma(2.0);
  const auto in = standing_wave_state(kP, plus_z());
  EXPECT_THROW(boost_physical(in, boost, PreparationContext::free),
               std::invalid_argument);
  const MomentumSpinState uneven({{FourMomentum(0.5), plus_z(), {0.6, 0}},
                                  {FourMomentum(-0.7), plus_z(), {0.8, 0}}});
  EXPECT_THROW(boost_physical(uneven, boost, PreparationContext::confined),
               std::invalid_argument);
  EXPECT_THROW(apply_boost(in, boost, BoostMode::physical(PreparationContext::free)),
               std::invalid_argument);
}

TEST(BoostProperty, NormPreservation) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> beta(0.0, 0.9999);
  std::uniform_real_distribution<double> mom(0.01, 20.0);
  for (int i = 0; i < 300; ++i) {
    const auto boost = BoostParameter::from_speed(beta(rng));
    const double p = mom(rng);
    const MomentumSpinState in({{FourMomentum(p), random_spinor(rng), {0.6, 0.0}},
                                {FourMomentum(-p), random_spinor(rng), {0.0, 0.8}}});
    ASSERT_NEAR(boost_linear(in, boost).norm_squared(), 1.0, 1e-12);
    ASSERT_NEAR(boost_linear(in, boost, LinearPhase::su2).norm_squared(), 1.0, 1e-12);
    for (auto prep : kPhysicalContexts) {
      ASSERT_NEAR(boost_physical(in, boost, prep).norm_squared(), 1.0, 1e-12);
    }
  }
}

TEST(BoostProperty, SingleMomentumMapsAgree) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> beta(0.0, 0.999);
  std::uniform_real_distribution<double> mom(0.01, 10.0);
  for (int i = 0; i < 200; ++i) {
    const auto boost = BoostParameter::from_speed(beta(rng));
    const double p = mom(rng);
    const Spinord s = random_spinor(rng);
    for (int sign : {+1, -1}) {
      const MomentumSpinState in({{FourMomentum(sign * p), s, {1.0, 0.0}}});
      const auto prep = sign > 0 ? PreparationContext::prepared_plus_y
                                 : PreparationContext::prepared_minus_y;
      const auto physical = boost_physical(in, boost, prep);
      const auto su2 = boost_linear(in, boost, LinearPhase::su2);
      ASSERT_EQ(su2.components()[0].spin, physical.components()[0].spin);
      ASSERT_TRUE(equal_up_to_phase(boost_linear(in, boost), physical, 1e-13));
    }
  }
}

TEST(BoostProperty, PhysicalMapFactorizes) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> beta(0.0, 0.999);
  for (int i = 0; i < 100; ++i) {
    const auto boost = BoostParameter::from_speed(beta(rng));
    const MomentumSpinState in({{FourMomentum(1.3), random_spinor(rng), {0.6, 0.0}},
                                {FourMomentum(-1.3), random_spinor(rng), {0.0, 0.8}}});
    for (auto prep : kPhysicalContexts) {
      const SpinOperatord u = preparation_rotation(1.3, boost, prep);
      ASSERT_LE(unitarity_defect(u), 1e-12);
      const auto out = boost_physical(in, boost, prep);
      for (std::size_t k = 0; k < in.size(); ++k) {
        ASSERT_TRUE(out.components()[k].spin.isApprox(u * in.components()[k].spin,
                                                      1e-14));
        ASSERT_EQ(out.components()[k].amplitude, in.components()[k].amplitude);
        ASSERT_EQ(out.components()[k].momentum.momentum(),
                  in.components()[k].momentum.momentum());
      }
    }
  }
}
