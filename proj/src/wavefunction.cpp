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

#include "wigrot/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace wigrot {

namespace {

constexpr double kEdgeAmplitudeThreshold = 1e-8;

void normalize_in_place(PositionWavefunction& w) {
  const double n = total_probability(density(w));
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::domain_error("wavefunction vanishes on the grid window");
  }
  const double s = 1.0 / std::sqrt(n);
  w.up *= s;
  w.down *= s;
}

double k_factor_value(KFactor k, const FourMomentum& momentum) {
  if (k == KFactor::unity) return 1.0;
  return std::sqrt(momentum.mass() / momentum.energy());
}

}  // namespace

YGrid::YGrid(double y_min, double y_max, Eigen::Index points)
    : y_min_(y_min), y_max_(y_max), points_(points) {
  if (points < 2) throw std::invalid_argument("YGrid: need at least 2 points");
  if (!(y_max > y_min) || !std::isfinite(y_min) || !std::isfinite(y_max)) {
    throw std::invalid_argument("YGrid: need finite y_min < y_max");
  }
}

YGrid YGrid::standing_wave(double p, int half_periods, Eigen::Index intervals) {
  if (!(p > 0.0)) throw std::domain_error("YGrid: momentum must be positive");
  if (half_periods < 1) throw std::invalid_argument("YGrid: half_periods < 1");
  const double half_width = half_periods * std::numbers::pi / (2.0 * p);
  return YGrid(-half_width, half_width, intervals + 1);
}

YGrid YGrid::centered(double half_width, Eigen::Index points) {
  return YGrid(-half_width, half_width, points);
}

Eigen::VectorXd YGrid::points() const {
  Eigen::VectorXd y(points_);
  for (Eigen::Index i = 0; i < points_; ++i) y[i] = at(i);
  return y;
}

Eigen::VectorXd trapezoid_weights(const YGrid& grid) {
  Eigen::VectorXd w = Eigen::VectorXd::Constant(grid.size(), grid.spacing());
  w[0] *= 0.5;
  w[grid.size() - 1] *= 0.5;
  return w;
}

double trapezoid(const YGrid& grid, const Eigen::Ref<const Eigen::VectorXd>& f) {
  if (f.size() != grid.size()) {
    throw std::invalid_argument("trapezoid: sample count does not match grid");
  }
  return trapezoid_weights(grid).dot(f);
}

SampledDensity density(const PositionWavefunction& w) {
  return {w.grid, w.up.cwiseAbs2() + w.down.cwiseAbs2()};
}

double total_probability(const SampledDensity& d) {
  return trapezoid(d.grid, d.values);
}

PositionWavefunction synthesize_discrete(const MomentumSpinState& state,
                                         const YGrid& grid) {
  const auto& components = state.components();
  if (components.empty()) {
    throw std::invalid_argument("synthesize_discrete: empty state");
  }
  const FourMomentum reference(std::abs(components.front().momentum.momentum()));
  for (const auto& c : components) {
    if (!same_momentum(FourMomentum(std::abs(c.momentum.momentum())),
                       reference)) {
      throw std::invalid_argument(
          "synthesize_discrete: momenta of unequal magnitude make the result "
          "depend on K(p0); use a quadrature synthesis with an explicit K");
    }
  }

  PositionWavefunction w{grid, Eigen::VectorXcd::Zero(grid.size()),
                         Eigen::VectorXcd::Zero(grid.size()), {}};
  for (const auto& c : components) {
    const Spinord a = c.amplitude * c.spin;
    const double p = c.momentum.momentum();
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
      const std::complex<double> phase = std::polar(1.0, p * grid.at(i));
      w.up[i] += a[0] * phase;
      w.down[i] += a[1] * phase;
    }
  }
  normalize_in_place(w);
  return w;
}

PositionWavefunction synthesize_gaussian(
    const GaussianPacketSpec& spec, const std::optional<BoostParameter>& boost,
    const YGrid& grid, const MomentumQuadrature& quadrature) {
  if (!(spec.width > 0.0) || !std::isfinite(spec.width)) {
    throw std::domain_error("synthesize_gaussian: width must be positive");
  }
  if (quadrature.points < 3 || !(quadrature.half_range_in_widths > 0.0)) {
    throw std::invalid_argument("synthesize_gaussian: bad momentum quadrature");
  }
  const Spinord spin = spec.spin.normalized();
  const double p_max = quadrature.half_range_in_widths / spec.width;
  const Eigen::Index n = quadrature.points;
  const double dp = 2.0 * p_max / double(n - 1);

  auto amplitude = [&](const FourMomentum& m) {
    const double p = m.momentum();
    return k_factor_value(spec.k_factor, m) *
           std::exp(-0.5 * p * p * spec.width * spec.width);
  };

  // Weighted momentum-space samples of K(p0) psi~(p) R(phi(p)) |spin>.
  std::vector<double> momenta(n);
  Eigen::VectorXcd f_up(n);
  Eigen::VectorXcd f_down(n);
  double momentum_norm = 0.0;
  double peak = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const FourMomentum m(-p_max + double(j) * dp);
    const double weight = (j == 0 || j == n - 1) ? 0.5 * dp : dp;
    Spinord s = spin;
    if (boost) {
      s = rotate_component(wigner_rotation(wigner_angle(m, *boost)), s,
                           spec.phase);
    }
    const double a = amplitude(m);
    peak = std::max(peak, a);
    momenta[j] = m.momentum();
    f_up[j] = weight * a * s[0];
    f_down[j] = weight * a * s[1];
    momentum_norm += weight * a * a * s.squaredNorm();
  }
  momentum_norm *= 2.0 * std::numbers::pi;

  PositionWavefunction w{grid, Eigen::VectorXcd::Zero(grid.size()),
                         Eigen::VectorXcd::Zero(grid.size()), {}};
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const double y = grid.at(i);
    std::complex<double> up{0.0, 0.0};
    std::complex<double> down{0.0, 0.0};
    for (Eigen::Index j = 0; j < n; ++j) {
      const std::complex<double> phase = std::polar(1.0, momenta[j] * y);
      up += f_up[j] * phase;
      down += f_down[j] * phase;
    }
    w.up[i] = up;
    w.down[i] = down;
  }

  const double edge = std::max(amplitude(FourMomentum(-p_max)),
                               amplitude(FourMomentum(p_max)));
  w.info.momentum_space_norm = momentum_norm;
  w.info.position_space_norm = total_probability(density(w));
  w.info.momentum_range_truncated = edge > kEdgeAmplitudeThreshold * peak;
  normalize_in_place(w);
  return w;
}

YGrid default_packet_grid(double width, Eigen::Index points) {
  return YGrid::centered(20.0 * std::max(width, 1.0), points);
}

}  // namespace wigrot
