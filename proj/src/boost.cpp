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
#include <stdexcept>

namespace wigrot {

Spinord rotate_component(const SpinOperatord& rotation, const Spinord& s,
                         LinearPhase phase) {
  const Spinord rotated = wigrot::apply(rotation, s);
  if (phase == LinearPhase::su2) return rotated;
  return align_phase(rotated, s);
}

MomentumSpinState boost_linear(const MomentumSpinState& state,
                               const BoostParameter& boost, LinearPhase phase) {
  auto components = state.components();
  for (auto& c : components) {
    c.spin = rotate_component(
        wigner_rotation(wigner_angle(c.momentum, boost)), c.spin, phase);
  }
  return MomentumSpinState(std::move(components));
}

SpinOperatord preparation_rotation(double p_magnitude,
                                   const BoostParameter& boost,
                                   PreparationContext prep) {
  switch (prep) {
    case PreparationContext::free:
      throw std::invalid_argument(
          "boost_physical: free states must be boosted with boost_linear");
    case PreparationContext::confined:
      return SpinOperatord::Identity();
    case PreparationContext::prepared_plus_y:
      return wigner_rotation(
          wigner_angle(FourMomentum(std::abs(p_magnitude)), boost));
    case PreparationContext::prepared_minus_y:
      return wigner_rotation(
          wigner_angle(FourMomentum(-std::abs(p_magnitude)), boost));
  }
  throw std::invalid_argument("boost_physical: unknown preparation context");
}

MomentumSpinState boost_physical(const MomentumSpinState& state,
                                 const BoostParameter& boost,
                                 PreparationContext prep) {
  if (prep == PreparationContext::free) {
    throw std::invalid_argument(
        "boost_physical: free states must be boosted with boost_linear");
  }
  const auto& components = state.components();
  if (components.empty()) return state;

  const FourMomentum reference(std::abs(components.front().momentum.momentum()));
  for (const auto& c : components) {
    if (!same_momentum(FourMomentum(std::abs(c.momentum.momentum())),
                       reference)) {
      throw std::invalid_argument(
          "boost_physical: components must share one momentum magnitude");
    }
  }

  const SpinOperatord rotation =
      preparation_rotation(reference.momentum(), boost, prep);
  auto out = components;
  for (auto& c : out) c.spin = wigrot::apply(rotation, c.spin);
  return MomentumSpinState(std::move(out));
}

MomentumSpinState apply_boost(const MomentumSpinState& state,
                              const BoostParameter& boost,
                              const BoostMode& mode) {
  if (mode.kind == BoostMode::Kind::linear) return boost_linear(state, boost);
  return boost_physical(state, boost, mode.preparation);
}

}  // namespace wigrot
