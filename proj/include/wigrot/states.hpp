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

#include <complex>
#include <optional>
#include <vector>

#include "wigrot/kinematics.hpp"
#include "wigrot/spin.hpp"

namespace wigrot {

/// Momentum kets are discrete labels: two momenta within this relative
/// distance are the same ket.
inline constexpr double kMomentumMatchTolerance = 1e-12;

bool same_momentum(const FourMomentum& a, const FourMomentum& b);

/// One term amplitude * |p> (x) |spin>.
struct MomentumComponent {
  FourMomentum momentum;
  Spinord spin;
  std::complex<double> amplitude{1.0, 0.0};
};

/// Single-particle state: a finite superposition of momentum kets, each
/// carrying its own spinor. Momenta are pairwise distinct.
class MomentumSpinState {
 public:
  explicit MomentumSpinState(std::vector<MomentumComponent> components);

  const std::vector<MomentumComponent>& components() const {
    return components_;
  }
  std::size_t size() const { return components_.size(); }

  /// sum_k |amplitude_k|^2 ||spin_k||^2
  double norm_squared() const;
  MomentumSpinState normalized() const;

 private:
  std::vector<MomentumComponent> components_;
};

/// <a|b>, with distinct momenta orthogonal.
std::complex<double> inner_product(const MomentumSpinState& a,
                                   const MomentumSpinState& b);

/// |<a|b>| / (||a|| ||b||) >= 1 - tol.
bool equal_up_to_phase(const MomentumSpinState& a, const MomentumSpinState& b,
                       double tol = 1e-12);

/// (1/sqrt 2)[ |p y, spin> - |-p y, spin> ]
MomentumSpinState standing_wave_state(double p, const Spinord& spin);

struct ParticleKet {
  FourMomentum momentum;
  Spinord spin;
};

struct TwoParticleTerm {
  std::complex<double> amplitude;
  ParticleKet first;
  ParticleKet second;
};

class TwoParticleState {
 public:
  explicit TwoParticleState(std::vector<TwoParticleTerm> terms)
      : terms_(std::move(terms)) {}

  const std::vector<TwoParticleTerm>& terms() const { return terms_; }

  /// Exact <Psi|Psi>; terms need not be orthogonal.
  double norm_squared() const;

 private:
  std::vector<TwoParticleTerm> terms_;
};

/// Projective spin measurement on the first particle.
struct MeasurementSpec {
  SpinBasis basis = SpinBasis::z;
  int outcome = -1;

  MeasurementSpec() = default;
  MeasurementSpec(SpinBasis b, int o);
};

/// Spin singlet with particle 1 at +p y and particle 2 in the
/// counter-propagating superposition {+p y, -p y}:
///
///   1/2 { |p,+Z>[|p,-Z> - |-p,-Z>] - |p,-Z>[|p,+Z> - |-p,+Z>] }
///
/// Terms are stored in that printed order with amplitudes +1/2, -1/2, -1/2, +1/2.
TwoParticleState build_entangled_pair(double p);

struct CollapseResult {
  double probability = 0.0;
  /// Conditional state of particle 2; empty when probability is zero.
  std::optional<MomentumSpinState> partner;
};

/// Born-rule measurement of particle 1's spin. Particle 1 must occupy a
/// single momentum ket so that particle 2's conditional state is pure.
CollapseResult collapse(const TwoParticleState& state,
                        const MeasurementSpec& measurement);

/// Post-measurement joint state, renormalized. Throws std::domain_error on a
/// zero-probability outcome.
TwoParticleState project_first(const TwoParticleState& state,
                               const MeasurementSpec& measurement);

}  // namespace wigrot
