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

#include "wigrot/scenario.hpp"

#include <cmath>
#include <numbers>

#include "wigrot/detection.hpp"
#include "wigrot/states.hpp"

namespace wigrot {

namespace {

constexpr double kDefaultGammaBeta = 10.0;
constexpr double kDefaultGammaP = 1.2;
constexpr double kFigure2Beta = 0.995;
constexpr long kStandingWaveGridPoints = 4097;
constexpr long kPacketGridPoints = 1601;
constexpr double kNormalizationTolerance = 1e-6;
constexpr double kNoSignalingTolerance = 1e-12;

const char* const kUnits =
    "natural (hbar = c = m = 1); lengths in reduced Compton wavelengths; "
    "momenta in mc; speeds in c; angles in radians";

bool uses_momentum(Scenario s) { return s != Scenario::figure2; }

long grid_points_for(const ScenarioConfig& c) {
  if (c.grid_points) {
    if (*c.grid_points < 3) throw ConfigError("--grid-points: need at least 3");
    return *c.grid_points;
  }
  return c.scenario == Scenario::figure2 ? kPacketGridPoints
                                         : kStandingWaveGridPoints;
}

void echo_config(RunReport& r, const ScenarioConfig& c) {
  r.add("tool.version", std::string(kToolVersion));
  r.add("units", std::string(kUnits));
  r.add("config.scenario", to_string(c.scenario));
  if (c.beta) {
    r.add("config.beta", *c.beta);
  } else if (c.gamma_beta) {
    r.add("config.gamma_beta", *c.gamma_beta);
  } else if (c.scenario == Scenario::figure2) {
    r.add("config.beta", kFigure2Beta);
  } else {
    r.add("config.gamma_beta", kDefaultGammaBeta);
  }
  if (c.p) {
    r.add("config.p", *c.p);
  } else if (c.v) {
    r.add("config.v", *c.v);
  } else if (c.gamma_p) {
    r.add("config.gamma_p", *c.gamma_p);
  } else if (uses_momentum(c.scenario)) {
    r.add("config.gamma_p", kDefaultGammaP);
  }
  r.add("config.w", c.w);
  r.add("config.packet_width", c.packet_width);
  r.add("config.mode", to_string(c.mode));
  r.add("config.prep", to_string(c.preparation));
  r.add("config.basis", to_string(c.basis));
  r.add("config.outcome", std::string(c.outcome > 0 ? "+1" : "-1"));
  r.add("config.k_factor", to_string(c.k_factor));
  r.add("config.grid_points", std::to_string(grid_points_for(c)));
}

void echo_kinematics(RunReport& r, const ResolvedKinematics& k) {
  r.add("kinematics.beta", k.boost.beta());
  r.add("kinematics.gamma_beta", k.boost.gamma());
  if (!k.momentum) return;
  const FourMomentum& m = *k.momentum;
  r.add("kinematics.p", m.momentum());
  r.add("kinematics.v", m.velocity());
  r.add("kinematics.gamma_p", m.gamma());
  r.add("kinematics.sin_half_angle",
        detail::half_angle_sine_from_excess(m.gamma_excess(),
                                            k.boost.gamma_excess()));
  r.add("kinematics.wigner_angle", wigner_angle(m, k.boost));
}

RunReport start_report(const ScenarioConfig& c, const ResolvedKinematics& k) {
  RunReport r;
  echo_config(r, c);
  echo_kinematics(r, k);
  return r;
}

void check_normalized(const SampledDensity& d, const std::string& what) {
  const double total = total_probability(d);
  if (!(std::abs(total - 1.0) <= kNormalizationTolerance)) {
    throw NumericalContractError("normalization check failed for " + what +
                                 ": integral = " + format_double(total));
  }
}

BoostMode boost_mode(const ScenarioConfig& c) {
  if (c.mode == BoostMode::Kind::linear) return BoostMode::linear();
  return BoostMode::physical(c.preparation);
}

DetectorSpec make_detector(const ScenarioConfig& c) {
  try {
    return DetectorSpec(c.w);
  } catch (const std::domain_error& e) {
    throw ConfigError(std::string("--w: ") + e.what());
  }
}

/// Standing-wave experiments on the entangled pair.
struct PairExperiment {
  ScenarioConfig config;
  BoostParameter boost;
  FourMomentum momentum;
  YGrid grid;
  BoostMode mode;
  TwoParticleState pair;

  PairExperiment(const ScenarioConfig& c, const ResolvedKinematics& k)
      : config(c),
        boost(k.boost),
        momentum(*k.momentum),
        grid(YGrid::standing_wave(std::abs(k.momentum->momentum()), 8,
                                  grid_points_for(c) - 1)),
        mode(boost_mode(c)),
        pair(build_entangled_pair(std::abs(k.momentum->momentum()))) {}

  MomentumSpinState partner(SpinBasis basis, int outcome) const {
    const CollapseResult r = collapse(pair, MeasurementSpec(basis, outcome));
    if (!r.partner) {
      throw NumericalContractError("unexpected zero-probability outcome");
    }
    return *r.partner;
  }

  SampledDensity boosted_density(SpinBasis basis, int outcome) const {
    const MomentumSpinState boosted =
        apply_boost(partner(basis, outcome), boost, mode);
    SampledDensity d = density(synthesize_discrete(boosted, grid));
    check_normalized(d, to_string(basis) + "-basis outcome " +
                            std::to_string(outcome) + " density");
    return d;
  }
};

PairExperiment make_pair_experiment(const ScenarioConfig& c,
                                    const ResolvedKinematics& k) {
  if (!(std::abs(k.momentum->momentum()) > 0.0)) {
    throw ConfigError(
        "--gamma-p/--v/--p: standing-wave scenarios need a moving particle");
  }
  return PairExperiment(c, k);
}

double visibility(const Eigen::VectorXd& d) {
  const double hi = d.maxCoeff();
  const double lo = d.minCoeff();
  return (hi - lo) / (hi + lo);
}

/// Closed-form a, b in a sin^2 + b cos^2 for the boosted z-collapse density.
std::pair<double, double> psi_profile(const PairExperiment& e) {
  if (e.mode.kind == BoostMode::Kind::physical) return {1.0, 0.0};
  const double s = detail::half_angle_sine_from_excess(
      e.momentum.gamma_excess(), e.boost.gamma_excess());
  return {1.0 - s * s, s * s};
}

}  // namespace

ResolvedKinematics resolve_kinematics(const ScenarioConfig& c) {
  const int boost_aliases = int(c.gamma_beta.has_value()) + int(c.beta.has_value());
  const int momentum_aliases =
      int(c.gamma_p.has_value()) + int(c.v.has_value()) + int(c.p.has_value());
  if (boost_aliases > 1) {
    throw ConfigError("--gamma-beta/--beta: give at most one");
  }
  if (momentum_aliases > 1) {
    throw ConfigError("--gamma-p/--v/--p: give at most one");
  }

  auto boost = [&]() {
    try {
      if (c.beta) return BoostParameter::from_speed(*c.beta);
      if (c.gamma_beta) return BoostParameter::from_gamma(*c.gamma_beta);
    } catch (const std::domain_error& e) {
      throw ConfigError(std::string(c.beta ? "--beta: " : "--gamma-beta: ") +
                        e.what());
    }
    return c.scenario == Scenario::figure2
               ? BoostParameter::from_speed(kFigure2Beta)
               : BoostParameter::from_gamma(kDefaultGammaBeta);
  }();

  std::optional<FourMomentum> momentum;
  try {
    if (c.p) {
      if (!(*c.p >= 0.0)) throw std::domain_error("momentum must be >= 0");
      momentum = FourMomentum(*c.p);
    } else if (c.v) {
      if (!(*c.v >= 0.0)) throw std::domain_error("speed must be >= 0");
      momentum = FourMomentum::from_velocity(*c.v);
    } else if (c.gamma_p) {
      momentum = FourMomentum::from_gamma(*c.gamma_p);
    } else if (uses_momentum(c.scenario)) {
      momentum = FourMomentum::from_gamma(kDefaultGammaP);
    }
  } catch (const std::domain_error& e) {
    const char* key = c.p ? "--p: " : c.v ? "--v: " : "--gamma-p: ";
    throw ConfigError(std::string(key) + e.what());
  }
  return {boost, momentum};
}

RunReport run_angle(const ScenarioConfig& config) {
  const ResolvedKinematics k = resolve_kinematics(config);
  RunReport r = start_report(config, k);
  const double phi = wigner_angle(*k.momentum, k.boost);
  r.add("result.wigner_angle_degrees", phi * 180.0 / std::numbers::pi);
  r.add("result.rotation_at_plus_p", std::string("cos(phi/2) I + i sin(phi/2) sigma_x"));
  r.add("result.rotation_at_minus_p", std::string("cos(phi/2) I - i sin(phi/2) sigma_x"));
  return r;
}

RunReport run_figure1(const ScenarioConfig& config) {
  const ResolvedKinematics k = resolve_kinematics(config);
  const PairExperiment e = make_pair_experiment(config, k);
  RunReport r = start_report(config, k);

  const SampledDensity phi = e.boosted_density(SpinBasis::x, config.outcome);
  const SampledDensity psi = e.boosted_density(SpinBasis::z, config.outcome);
  const auto [a, b] = psi_profile(e);

  r.add("result.density_phi_min", phi.values.minCoeff());
  r.add("result.density_phi_max", phi.values.maxCoeff());
  r.add("result.density_psi_min", psi.values.minCoeff());
  r.add("result.density_psi_max", psi.values.maxCoeff());
  r.add("result.density_psi_min_over_max",
        psi.values.minCoeff() / psi.values.maxCoeff());
  r.add("result.closed_form_min_over_max", b / a);
  r.add("result.visibility_phi", visibility(phi.values));
  r.add("result.visibility_psi", visibility(psi.values));
  r.add("result.sup_gap_over_peak",
        (psi.values - phi.values).cwiseAbs().maxCoeff() / phi.values.maxCoeff());

  const Eigen::VectorXd y = e.grid.points();
  r.add_file({"figure1.csv",
              format_csv({"y_over_compton", "density_phi", "density_psi"},
                         {&y, &phi.values, &psi.values})});
  return r;
}

RunReport run_figure2(const ScenarioConfig& config) {
  const ResolvedKinematics k = resolve_kinematics(config);
  RunReport r = start_report(config, k);
  if (!(config.packet_width > 0.0)) {
    throw ConfigError("--packet-width: must be positive");
  }
  const YGrid grid = default_packet_grid(config.packet_width, grid_points_for(config));
  const Eigen::VectorXd y = grid.points();

  auto emit = [&](KFactor kf, const std::string& name, const std::string& prefix) {
    const PositionWavefunction wx = synthesize_gaussian(
        {config.packet_width, plus_x(), kf}, k.boost, grid);
    const PositionWavefunction wz = synthesize_gaussian(
        {config.packet_width, plus_z(), kf}, k.boost, grid);
    const SampledDensity dx = density(wx);
    const SampledDensity dz = density(wz);
    check_normalized(dx, "spin-x packet density");
    check_normalized(dz, "spin-z packet density");
    for (const auto* w : {&wx, &wz}) {
      const double rel = std::abs(w->info.position_space_norm /
                                      w->info.momentum_space_norm -
                                  1.0);
      if (!(rel <= kNormalizationTolerance)) {
        throw NumericalContractError("Parseval check failed: relative gap " +
                                     format_double(rel));
      }
    }
    r.add(prefix + "k_factor", to_string(kf));
    r.add(prefix + "sup_difference", (dx.values - dz.values).cwiseAbs().maxCoeff());
    r.add(prefix + "peak_spin_x", dx.values.maxCoeff());
    r.add(prefix + "peak_spin_z", dz.values.maxCoeff());
    r.add(prefix + "integral_spin_x", total_probability(dx));
    r.add(prefix + "integral_spin_z", total_probability(dz));
    r.add(prefix + "parseval_gap_spin_z",
          std::abs(wz.info.position_space_norm / wz.info.momentum_space_norm - 1.0));
    r.add(prefix + "momentum_range_truncated",
          wx.info.momentum_range_truncated || wz.info.momentum_range_truncated);
    r.add_file({name, format_csv({"y_over_compton", "density_spin_x",
                                  "density_spin_z"},
                                 {&y, &dx.values, &dz.values})});
  };

  const KFactor other = config.k_factor == KFactor::unity
                            ? KFactor::sqrt_m_over_p0
                            : KFactor::unity;
  emit(config.k_factor, "figure2.csv", "result.");
  emit(other, "figure2_k_" + to_string(other) + ".csv", "result.alt_k.");
  return r;
}

RunReport run_ratio(const ScenarioConfig& config) {
  const ResolvedKinematics k = resolve_kinematics(config);
  const PairExperiment e = make_pair_experiment(config, k);
  const DetectorSpec detector = make_detector(config);
  RunReport r = start_report(config, k);

  const SampledDensity phi = e.boosted_density(SpinBasis::x, config.outcome);
  const SampledDensity psi = e.boosted_density(SpinBasis::z, config.outcome);
  const RatioReport rr =
      ratio_report(psi, phi, detector, k.boost.gamma(), e.momentum.velocity());
  const auto [a, b] = psi_profile(e);
  const double p = std::abs(e.momentum.momentum());

  r.add("result.detector_near_compton_limit", detector.near_compton_limit());
  r.add("result.y_m", rr.y_m);
  r.add("result.r_phi", rr.r_phi);
  r.add("result.r_psi", rr.r_psi);
  r.add("result.ratio_of_ratios", rr.ratio_of_ratios);
  r.add("result.closed_form_r_phi", standing_wave_ratio(1.0, 0.0, p, config.w));
  r.add("result.closed_form_r_psi", standing_wave_ratio(a, b, p, config.w));
  r.add("result.approx_r_phi", rr.approx_r_phi);
  r.add("result.approx_ratio_of_ratios", rr.approx_ratio);
  return r;
}

RunReport run_signaling(const ScenarioConfig& config) {
  const ResolvedKinematics k = resolve_kinematics(config);
  const PairExperiment e = make_pair_experiment(config, k);
  const DetectorSpec detector = make_detector(config);
  RunReport r = start_report(config, k);

  const SampledDensity phi = e.boosted_density(SpinBasis::x, config.outcome);
  const SampledDensity psi = e.boosted_density(SpinBasis::z, config.outcome);
  const SignalingStatistic s = signaling_discriminator(psi, phi, detector);

  r.add("result.r_psi", s.r_psi);
  r.add("result.r_phi", s.r_phi);
  r.add("result.ratio_gap", s.ratio_gap);
  r.add("result.sup_detection_gap", s.sup_detection_gap);
  r.add("result.sup_density_gap", s.sup_density_gap);
  r.add("result.no_signaling", s.certifies_no_signaling(kNoSignalingTolerance));

  const Eigen::VectorXd y = e.grid.points();
  const Eigen::VectorXd p_psi = detection_curve(psi, detector);
  const Eigen::VectorXd p_phi = detection_curve(phi, detector);
  r.add_file({"signaling.csv",
              format_csv({"y_over_compton", "detection_psi", "detection_phi"},
                         {&y, &p_psi, &p_phi})});

  if (config.mode == BoostMode::Kind::physical &&
      !s.certifies_no_signaling(kNoSignalingTolerance)) {
    throw NumericalContractError(
        "physical boost produced basis-dependent detection statistics");
  }
  return r;
}

RunReport run_paradox(const ScenarioConfig& config) {
  const ResolvedKinematics k = resolve_kinematics(config);
  const PairExperiment e = make_pair_experiment(config, k);
  const DetectorSpec detector = make_detector(config);
  RunReport r = start_report(config, k);

  for (SpinBasis basis : {SpinBasis::z, SpinBasis::x}) {
    for (int outcome : {+1, -1}) {
      const CollapseResult c = collapse(e.pair, MeasurementSpec(basis, outcome));
      r.add("result.born_probability." + to_string(basis) +
                (outcome > 0 ? ".plus" : ".minus"),
            c.probability);
    }
  }

  const SampledDensity psi_minus = e.boosted_density(SpinBasis::z, -1);
  const SampledDensity psi_plus = e.boosted_density(SpinBasis::z, +1);
  const SampledDensity phi_minus = e.boosted_density(SpinBasis::x, -1);
  const SampledDensity phi_plus = e.boosted_density(SpinBasis::x, +1);

  r.add("result.outcome_gap_z",
        (psi_minus.values - psi_plus.values).cwiseAbs().maxCoeff());
  r.add("result.outcome_gap_x",
        (phi_minus.values - phi_plus.values).cwiseAbs().maxCoeff());

  const RatioReport rr = ratio_report(psi_minus, phi_minus, detector,
                                      k.boost.gamma(), e.momentum.velocity());
  r.add("result.r_phi", rr.r_phi);
  r.add("result.r_psi", rr.r_psi);
  r.add("result.ratio_of_ratios", rr.ratio_of_ratios);
  r.add("result.approx_r_phi", rr.approx_r_phi);
  r.add("result.approx_ratio_of_ratios", rr.approx_ratio);

  const SignalingStatistic s = signaling_discriminator(psi_minus, phi_minus, detector);
  r.add("result.sup_detection_gap", s.sup_detection_gap);
  r.add("result.sup_density_gap", s.sup_density_gap);
  r.add("result.no_signaling", s.certifies_no_signaling(kNoSignalingTolerance));

  if (e.mode.kind == BoostMode::Kind::physical) {
    if (e.mode.preparation == PreparationContext::confined) {
      const MomentumSpinState before = e.partner(config.basis, config.outcome);
      const MomentumSpinState after = apply_boost(before, e.boost, e.mode);
      r.add("result.confined_state_unchanged",
            std::abs(inner_product(before, after) - 1.0) <= kNoSignalingTolerance);
    }
    if (!s.certifies_no_signaling(kNoSignalingTolerance)) {
      throw NumericalContractError(
          "physical boost produced basis-dependent detection statistics");
    }
  }
  return r;
}

RunReport run_scenario(const ScenarioConfig& config) {
  switch (config.scenario) {
    case Scenario::angle: return run_angle(config);
    case Scenario::figure1: return run_figure1(config);
    case Scenario::figure2: return run_figure2(config);
    case Scenario::ratio: return run_ratio(config);
    case Scenario::signaling: return run_signaling(config);
    case Scenario::paradox: return run_paradox(config);
  }
  throw ConfigError("unknown scenario");
}

}  // namespace wigrot
