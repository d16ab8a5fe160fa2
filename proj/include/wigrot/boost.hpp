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

// Frame change along z for a single-particle MomentumSpinState.
//
// Two semantics are provided. The linear map rotates every momentum
// component by its own Wigner rotation. By default each rotated spinor keeps
// the phase of the spinor it came from (LinearPhase::ray_aligned), so the
// rotation acts on the spin ray of each component and the eigenphase a
// sigma_x eigenstate would pick up is dropped. LinearPhase::su2 keeps the
// exact SU(2) amplitudes instead; under it the relative phase between +p and
// -p components shifts standing-wave fringes. The physical map rotates all
// components by one rotation fixed by how the spin was prepared: the
// rotation of the momentum the particle carried when its spin was
// measured, or none when the spin was fixed while the particle was
// confined. Only the y profile is tracked; the momentum components
// acquired along z are ignored.

#include "wigrot/kinematics.hpp"
#include "wigrot/spin.hpp"
#include "wigrot/states.hpp"

namespace wigrot {

enum class PreparationContext {
  free,              // genuinely free state: per-component rotation is valid
  prepared_plus_y,   // spin fixed while moving along +y
  prepared_minus_y,  // spin fixed while moving along -y
  confined,          // spin fixed inside a well holding both momenta
};

enum class LinearPhase {
  ray_aligned,  // <s|s'> real and non-negative per component
  su2,          // exact SU(2) amplitudes
};

/// R s with the phase fixed by `phase`.
Spinord rotate_component(const SpinOperatord& rotation, const Spinord& s,
                         LinearPhase phase);

struct BoostMode {
  enum class Kind { linear, physical };

  Kind kind = Kind::linear;
  PreparationContext preparation = PreparationContext::free;

  static BoostMode linear() { return {Kind::linear, PreparationContext::free}; }
  static BoostMode physical(PreparationContext prep) {
    return {Kind::physical, prep};
  }
};

MomentumSpinState boost_linear(const MomentumSpinState& state,
                               const BoostParameter& boost,
                               LinearPhase phase = LinearPhase::ray_aligned);

/// The single spin rotation the physical map applies for a particle of
/// momentum magnitude p. Throws std::invalid_argument for the free context.
SpinOperatord preparation_rotation(double p_magnitude,
                                   const BoostParameter& boost,
                                   PreparationContext prep);

/// All components must share one momentum magnitude (the preparation
/// momentum); throws std::invalid_argument otherwise or when prep is free.
MomentumSpinState boost_physical(const MomentumSpinState& state,
                                 const BoostParameter& boost,
                                 PreparationContext prep);

MomentumSpinState apply_boost(const MomentumSpinState& state,
                              const BoostParameter& boost,
                              const BoostMode& mode);

}  // namespace wigrot
