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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "wigrot/boost.hpp"
#include "wigrot/detection.hpp"
#include "wigrot/kinematics.hpp"
#include "wigrot/states.hpp"
#include "wigrot/wavefunction.hpp"

using namespace wigrot;

namespace {

using Big = boost::multiprecision::cpp_bin_float_50;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double sup(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

SampledDensity partner_density(const FourMomentum& m, const BoostParameter& boost,
                               SpinBasis basis, int outcome, const BoostMode& mode,
                               const YGrid& grid) {
  const double p = std::abs(m.momentum());
  const auto partner = *collapse(build_entangled_pair(p), {basis, outcome}).partner;
  return density(synthesize_discrete(apply_boost(partner, boost, mode), grid));
}

Outcome criterion_1() {
  using boost::multiprecision::sqrt;
  const Big gp("1.2");
  const Big gb(10);
  const Big oracle = sqrt((gp - 1) * (gb - 1) / (2 * (1 + gp * gb)));
  const double got = wigner_half_angle_sine(1.2, 10.0);
  const double err = std::abs(got - double(oracle));
  return {err <= 1e-9, "sin(phi/2) = " + fmt(got) + ", oracle " +
                           oracle.str(20) + ", |diff| = " + fmt(err)};
}

Outcome criterion_2() {
  const auto boost = BoostParameter::from_gamma(1e3);
  const DetectorSpec det(1.0);
  const double limit = 1.0 + 999.0 / 2002.0;
  std::vector<double> ratios;
  for (double v : {0.1, 0.05, 0.02}) {
    const FourMomentum m = FourMomentum::from_velocity(v);
    const YGrid grid = YGrid::standing_wave(m.momentum());
    const auto psi = partner_density(m, boost, SpinBasis::z, -1, BoostMode::linear(), grid);
    const auto phi = partner_density(m, boost, SpinBasis::x, -1, BoostMode::linear(), grid);
    ratios.push_back(ratio_R(psi, det).ratio / ratio_R(phi, det).ratio);
  }
  const double rel = std::abs(ratios[1] - limit) / limit;
  const bool monotone = std::abs(ratios[0] - limit) > std::abs(ratios[1] - limit) &&
                        std::abs(ratios[1] - limit) > std::abs(ratios[2] - limit) &&
                        ratios[0] < ratios[1] && ratios[1] < ratios[2];
  return {rel <= 0.05 && monotone,
          "R_psi/R_phi at v=0.1,0.05,0.02: " + fmt(ratios[0]) + ", " + fmt(ratios[1]) +
              ", " + fmt(ratios[2]) + "; limit " + fmt(limit) + ", rel gap at v=0.05 " +
              fmt(rel)};
}

Outcome criterion_3() {
  const double p = 1.0;
  const auto d = density(
      synthesize_discrete(standing_wave_state(p, plus_z()), YGrid::standing_wave(p)));
  const double got = ratio_R(d, DetectorSpec(1.0)).ratio;
  const double oracle = (1.0 - std::exp(-1.0)) / (1.0 + std::exp(-1.0));
  const double err = std::abs(got - oracle);
  return {err <= 1e-6, "R = " + fmt(got) + ", analytic " + fmt(oracle) +
                           ", |diff| = " + fmt(err)};
}

Outcome criterion_4() {
  const FourMomentum m = FourMomentum::from_gamma(1.2);
  const auto boost = BoostParameter::from_gamma(10.0);
  const double p = m.momentum();
  const YGrid grid = YGrid::standing_wave(p);
  const auto phi = partner_density(m, boost, SpinBasis::x, -1, BoostMode::linear(), grid);
  const auto psi = partner_density(m, boost, SpinBasis::z, -1, BoostMode::linear(), grid);
  const double peak = phi.values.maxCoeff();

  // zeros: the smallest sample within one grid step of each n pi / p
  double worst_zero = 0.0;
  const double h = grid.spacing();
  for (int n = -4; n <= 4; ++n) {
    const double y0 = n * std::numbers::pi / p;
    double best = peak;
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
      if (std::abs(grid.at(i) - y0) <= h) best = std::min(best, phi.values[i]);
    }
    worst_zero = std::max(worst_zero, best);
  }
  const bool zeros = worst_zero <= 1e-12 * peak;

  const double min_over_max = psi.values.minCoeff() / psi.values.maxCoeff();
  const double s2 = std::pow(wigner_half_angle_sine(1.2, 10.0), 2);
  const double closed = s2 / (1.0 - s2);
  const bool ratio_ok = std::abs(min_over_max - 0.074381) <= 1e-6 &&
                        std::abs(min_over_max - closed) <= 1e-6;
  const double gap = sup(psi.values, phi.values) / peak;
  return {zeros && ratio_ok && gap > 0.05,
          "phi zeros max " + fmt(worst_zero) + ", psi min/max " + fmt(min_over_max) +
              " (tan^2(phi/2) = " + fmt(closed) + "), sup gap / peak " + fmt(gap)};
}

Outcome criterion_5() {
  double worst_density = 0.0;
  double worst_detection = 0.0;
  for (double gb : {1.5, 10.0, 1e3}) {
    for (double gp : {1.05, 1.2, 3.0}) {
      const FourMomentum m = FourMomentum::from_gamma(gp);
      const auto boost = BoostParameter::from_gamma(gb);
      const YGrid grid = YGrid::standing_wave(m.momentum());
      for (auto prep : {PreparationContext::prepared_plus_y,
                        PreparationContext::prepared_minus_y,
                        PreparationContext::confined}) {
        const BoostMode mode = BoostMode::physical(prep);
        for (int outcome : {+1, -1}) {
          const auto z = partner_density(m, boost, SpinBasis::z, outcome, mode, grid);
          const auto x = partner_density(m, boost, SpinBasis::x, outcome, mode, grid);
          for (double w : {1.0, 2.0}) {
            const auto s = signaling_discriminator(z, x, DetectorSpec(w));
            worst_density = std::max(worst_density, s.sup_density_gap);
            worst_detection = std::max(worst_detection, s.sup_detection_gap);
          }
        }
      }
    }
  }
  return {worst_density <= 1e-12 && worst_detection <= 1e-12,
          "54 physical configurations: sup density gap " + fmt(worst_density) +
              ", sup P(y_c) gap " + fmt(worst_detection)};
}

Outcome criterion_6() {
  int checked = 0;
  int failed = 0;
  double min_sup = INFINITY;
  double min_gap = INFINITY;
  for (double gb : {1.5, 3.0, 10.0, 100.0, 1e3}) {
    for (double gp : {1.01, 1.05, 1.2, 1.5, 2.0}) {
      const FourMomentum m = FourMomentum::from_gamma(gp);
      const auto boost = BoostParameter::from_gamma(gb);
      const YGrid grid = YGrid::standing_wave(m.momentum());
      const auto psi =
          partner_density(m, boost, SpinBasis::z, -1, BoostMode::linear(), grid);
      const auto phi =
          partner_density(m, boost, SpinBasis::x, -1, BoostMode::linear(), grid);
      for (double w : {1.0, 1.5, 2.0}) {
        const auto s = signaling_discriminator(psi, phi, DetectorSpec(w));
        ++checked;
        min_sup = std::min(min_sup, s.sup_detection_gap);
        min_gap = std::min(min_gap, s.r_psi - s.r_phi);
        if (!(s.sup_detection_gap > 0.0 && s.r_psi > s.r_phi)) ++failed;
      }
    }
  }
  return {failed == 0 && checked == 75,
          std::to_string(checked - failed) + "/" + std::to_string(checked) +
              " linear configurations signal; min sup " + fmt(min_sup) +
              ", min R_psi - R_phi " + fmt(min_gap)};
}

Outcome criterion_7() {
  double worst = 0.0;
  for (double gb : {2.0, 10.0, 1e3}) {
    for (double gp : {1.05, 1.2, 5.0}) {
      const FourMomentum m = FourMomentum::from_gamma(gp);
      const auto boost = BoostParameter::from_gamma(gb);
      const YGrid grid = YGrid::standing_wave(m.momentum());
      for (SpinBasis b : {SpinBasis::z, SpinBasis::x}) {
        const auto plus = partner_density(m, boost, b, +1, BoostMode::linear(), grid);
        const auto minus = partner_density(m, boost, b, -1, BoostMode::linear(), grid);
        worst = std::max(worst, sup(plus.values, minus.values));
      }
    }
  }
  return {worst <= 1e-12, "sup |rho(+1) - rho(-1)| over 18 cases " + fmt(worst)};
}

Outcome criterion_8() {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> beta(0.0, 0.9999);
  std::uniform_real_distribution<double> log_p(-3.0, 2.0);
  std::normal_distribution<double> gauss;
  auto random_spinor = [&] {
    using C = std::complex<double>;
    return Spinord(C(gauss(rng), gauss(rng)), C(gauss(rng), gauss(rng))).normalized();
  };

  double worst_unitarity = 0.0;
  double worst_norm = 0.0;
  double worst_integral = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto boost = BoostParameter::from_speed(beta(rng));
    const double p = std::pow(10.0, log_p(rng));
    const FourMomentum m(p);
    worst_unitarity = std::max(
        worst_unitarity, unitarity_defect(wigner_rotation(wigner_angle(m, boost))));

    const MomentumSpinState in({{FourMomentum(p), random_spinor(), {0.6, 0.0}},
                                {FourMomentum(-p), random_spinor(), {0.0, 0.8}}});
    std::vector<MomentumSpinState> outs{boost_linear(in, boost),
                                        boost_linear(in, boost, LinearPhase::su2)};
    for (auto prep : {PreparationContext::prepared_plus_y,
                      PreparationContext::prepared_minus_y,
                      PreparationContext::confined}) {
      outs.push_back(boost_physical(in, boost, prep));
    }
    for (const auto& o : outs) {
      worst_norm = std::max(worst_norm, std::abs(o.norm_squared() - 1.0));
    }
    if (i % 20 == 0) {
      const YGrid grid = YGrid::standing_wave(p);
      for (const auto& o : outs) {
        worst_integral = std::max(
            worst_integral,
            std::abs(total_probability(density(synthesize_discrete(o, grid))) - 1.0));
      }
    }
    if (i % 100 == 0) {
      for (KFactor k : {KFactor::unity, KFactor::sqrt_m_over_p0}) {
        const double width = 0.5 + 2.5 * (i / 1000.0);
        const auto w = synthesize_gaussian({width, random_spinor(), k}, boost,
                                           default_packet_grid(width));
        worst_integral =
            std::max(worst_integral, std::abs(total_probability(density(w)) - 1.0));
      }
    }
  }
  return {worst_unitarity <= 1e-12 && worst_norm <= 1e-12 && worst_integral <= 1e-6,
          "max ||R^dag R - I|| " + fmt(worst_unitarity) + ", max norm drift " +
              fmt(worst_norm) + ", max |integral - 1| " + fmt(worst_integral)};
}

Outcome criterion_9() {
  const YGrid grid = default_packet_grid(1.0);
  double worst_integral = 0.0;
  double worst_rest = 0.0;
  double worst_parseval = 0.0;
  std::ostringstream sups;
  bool positive = true;
  for (KFactor k : {KFactor::sqrt_m_over_p0, KFactor::unity}) {
    for (double b : {0.0, 0.995}) {
      const auto boost = BoostParameter::from_speed(b);
      const auto wx = synthesize_gaussian({1.0, plus_x(), k}, boost, grid);
      const auto wz = synthesize_gaussian({1.0, plus_z(), k}, boost, grid);
      const auto dx = density(wx);
      const auto dz = density(wz);
      for (const auto* w : {&wx, &wz}) {
        worst_parseval =
            std::max(worst_parseval, std::abs(w->info.position_space_norm /
                                                  w->info.momentum_space_norm -
                                              1.0));
      }
      worst_integral = std::max({worst_integral, std::abs(total_probability(dx) - 1.0),
                                 std::abs(total_probability(dz) - 1.0)});
      const double gap = sup(dx.values, dz.values);
      if (b == 0.0) {
        worst_rest = std::max(worst_rest, gap);
      } else {
        positive = positive && gap > 0.0;
        sups << (k == KFactor::unity ? " K=1: " : " K=sqrt(m/p0): ") << fmt(gap);
      }
    }
  }
  return {worst_integral <= 1e-6 && worst_rest <= 1e-12 && positive &&
              worst_parseval <= 1e-6,
          "max |integral - 1| " + fmt(worst_integral) + ", sup gap at beta=0 " +
              fmt(worst_rest) + ", Parseval gap " + fmt(worst_parseval) +
              ", sup gap at beta=0.995" + sups.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Wigner half-angle matches 50-digit oracle", criterion_1},
      {"R_psi/R_phi approaches the large-boost limit", criterion_2},
      {"ratio_R on sin^2 density matches analytic value", criterion_3},
      {"standing-wave density profiles", criterion_4},
      {"physical boost: z and x collapse indistinguishable", criterion_5},
      {"linear boost: basis choice is visible at the detector", criterion_6},
      {"densities independent of measurement outcome", criterion_7},
      {"unitarity, norm preservation, normalization", criterion_8},
      {"Gaussian packet densities", criterion_9},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
