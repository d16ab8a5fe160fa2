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

#pragma once

// Position-space synthesis of the spin components psi_{+Z}(y), psi_{-Z}(y)
//
//   psi_s(y) = \int dp K(p0) e^{i p y} <s|state(p)>
//
// for discrete standing-wave superpositions (closed form) and for Gaussian
// momentum packets (trapezoid quadrature over p).

#include <optional>

#include <Eigen/Core>

#include "wigrot/boost.hpp"
#include "wigrot/kinematics.hpp"
#include "wigrot/spin.hpp"
#include "wigrot/states.hpp"

namespace wigrot {

/// Uniform grid y_min, y_min + h, ..., y_max.
class YGrid {
 public:
  YGrid(double y_min, double y_max, Eigen::Index points);

  /// Window [-n pi/(2p), n pi/(2p)] spanning `half_periods` half-periods of
  /// sin(p y). With `intervals` a multiple of 2 * half_periods, both y = 0 and
  /// every extremum k pi/(2p) fall on grid points.
  static YGrid standing_wave(double p, int half_periods = 8,
                             Eigen::Index intervals = 4096);

  /// [-half_width, half_width].
  static YGrid centered(double half_width, Eigen::Index points);

  double y_min() const { return y_min_; }
  double y_max() const { return y_max_; }
  Eigen::Index size() const { return points_; }
  double spacing() const { return (y_max_ - y_min_) / double(points_ - 1); }
  double at(Eigen::Index i) const { return y_min_ + double(i) * spacing(); }
  Eigen::VectorXd points() const;

  bool operator==(const YGrid&) const = default;

 private:
  double y_min_;
  double y_max_;
  Eigen::Index points_;
};

Eigen::VectorXd trapezoid_weights(const YGrid& grid);
double trapezoid(const YGrid& grid, const Eigen::Ref<const Eigen::VectorXd>& f);

struct SynthesisInfo {
  /// Quadrature norms before normalization; Gaussian synthesis only.
  double momentum_space_norm = 0.0;
  double position_space_norm = 0.0;
  /// Momentum amplitude at the quadrature edge exceeded 1e-8 of its peak.
  bool momentum_range_truncated = false;
};

struct PositionWavefunction {
  YGrid grid;
  Eigen::VectorXcd up;    // psi_{+Z}
  Eigen::VectorXcd down;  // psi_{-Z}
  SynthesisInfo info;
};

struct SampledDensity {
  YGrid grid;
  Eigen::VectorXd values;
};

/// |psi_{+Z}|^2 + |psi_{-Z}|^2
SampledDensity density(const PositionWavefunction& w);

/// Trapezoid integral of the density over its window.
double total_probability(const SampledDensity& d);

/// All momenta must share one magnitude, which makes the result independent
/// of K(p0); K = 1 is used. Output is normalized on the grid.
PositionWavefunction synthesize_discrete(const MomentumSpinState& state,
                                         const YGrid& grid);

enum class KFactor { unity, sqrt_m_over_p0 };

/// Momentum amplitude exp(-p^2 W^2 / 2) times `spin`.
struct GaussianPacketSpec {
  double width = 1.0;
  Spinord spin = plus_z();
  KFactor k_factor = KFactor::sqrt_m_over_p0;
  LinearPhase phase = LinearPhase::ray_aligned;
};

struct MomentumQuadrature {
  double half_range_in_widths = 8.0;  // p in [-h/W, h/W]
  Eigen::Index points = 4096;
};

/// With a boost, each momentum sample's spinor is rotated by its own Wigner
/// rotation inside the integral (a genuinely free state), with the phase
/// convention of boost_linear. Output is normalized; pre-normalization norms
/// land in `info`.
PositionWavefunction synthesize_gaussian(
    const GaussianPacketSpec& spec, const std::optional<BoostParameter>& boost,
    const YGrid& grid, const MomentumQuadrature& quadrature = {});

/// [-20 max(W, 1), 20 max(W, 1)] with 1601 points.
YGrid default_packet_grid(double width, Eigen::Index points = 1601);

}  // namespace wigrot
