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

#include "wigrot/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wigrot {

namespace {

constexpr double kZeroProbability = 1e-14;

std::complex<double> ket_overlap(const ParticleKet& a, const ParticleKet& b) {
  if (!same_momentum(a.momentum, b.momentum)) return {0.0, 0.0};
  return a.spin.dot(b.spin);
}

}  // namespace

bool same_momentum(const FourMomentum& a, const FourMomentum& b) {
  const double scale = std::max({1.0, std::abs(a.momentum()),
                                 std::abs(b.momentum())});
  return std::abs(a.momentum() - b.momentum()) <=
         kMomentumMatchTolerance * scale;
}

MomentumSpinState::MomentumSpinState(std::vector<MomentumComponent> components)
    : components_(std::move(components)) {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    for (std::size_t j = i + 1; j < components_.size(); ++j) {
      if (same_momentum(components_[i].momentum, components_[j].momentum)) {
        throw std::invalid_argument(
            "MomentumSpinState: momenta must be pairwise distinct");
      }
    }
  }
}

double MomentumSpinState::norm_squared() const {
  double total = 0.0;
  for (const auto& c : components_) {
    total += std::norm(c.amplitude) * c.spin.squaredNorm();
  }
  return total;
}

MomentumSpinState MomentumSpinState::normalized() const {
  const double n = std::sqrt(norm_squared());
  if (!(n > 0.0)) {
    throw std::domain_error("MomentumSpinState: cannot normalize zero state");
  }
  auto out = components_;
  for (auto& c : out) c.amplitude /= n;
  return MomentumSpinState(std::move(out));
}

std::complex<double> inner_product(const MomentumSpinState& a,
                                   const MomentumSpinState& b) {
  std::complex<double> total{0.0, 0.0};
  for (const auto& ca : a.components()) {
    for (const auto& cb : b.components()) {
      if (!same_momentum(ca.momentum, cb.momentum)) continue;
      total += std::conj(ca.amplitude) * cb.amplitude * ca.spin.dot(cb.spin);
    }
  }
  return total;
}

bool equal_up_to_phase(const MomentumSpinState& a, const MomentumSpinState& b,
                       double tol) {
  const double na = std::sqrt(a.norm_squared());
  const double nb = std::sqrt(b.norm_squared());
  if (na == 0.0 || nb == 0.0) return na == nb;
  return std::abs(inner_product(a, b)) / (na * nb) >= 1.0 - tol;
}

MomentumSpinState standing_wave_state(double p, const Spinord& spin) {
  if (!(p > 0.0)) {
    throw std::domain_error("standing_wave_state: momentum must be positive");
  }
  const double h = 1.0 / std::sqrt(2.0);
  const Spinord s = spin.normalized();
  return MomentumSpinState({{FourMomentum(p), s, {h, 0.0}},
                            {FourMomentum(-p), s, {-h, 0.0}}});
}

double TwoParticleState::norm_squared() const {
  std::complex<double> total{0.0, 0.0};
  for (const auto& a : terms_) {
    for (const auto& b : terms_) {
      total += std::conj(a.amplitude) * b.amplitude *
               ket_overlap(a.first, b.first) * ket_overlap(a.second, b.second);
    }
  }
  return total.real();
}

MeasurementSpec::MeasurementSpec(SpinBasis b, int o) : basis(b), outcome(o) {
  if (o != 1 && o != -1) {
    throw std::invalid_argument("MeasurementSpec: outcome must be +1 or -1");
  }
}

TwoParticleState build_entangled_pair(double p) {
  if (!(p > 0.0)) {
    throw std::domain_error("build_entangled_pair: momentum must be positive");
  }
  const FourMomentum forward(p);
  const FourMomentum backward(-p);
  const Spinord up = plus_z();
  const Spinord down = minus_z();
  return TwoParticleState({
      {{+0.5, 0.0}, {forward, up}, {forward, down}},
      {{-0.5, 0.0}, {forward, up}, {backward, down}},
      {{-0.5, 0.0}, {forward, down}, {forward, up}},
      {{+0.5, 0.0}, {forward, down}, {backward, up}},
  });
}

CollapseResult collapse(const TwoParticleState& state,
                        const MeasurementSpec& measurement) {
  const auto& terms = state.terms();
  if (terms.empty()) {
    throw std::invalid_argument("collapse: empty state");
  }
  for (const auto& t : terms) {
    if (!same_momentum(t.first.momentum, terms.front().first.momentum)) {
      throw std::invalid_argument(
          "collapse: particle 1 must occupy a single momentum ket");
    }
  }

  const Spinord eigen = eigenspinor(measurement.basis, measurement.outcome);

  // Accumulate particle 2's unnormalized spin vector per momentum ket.
  std::vector<std::pair<FourMomentum, Spinord>> partner;
  for (const auto& t : terms) {
    const std::complex<double> c = t.amplitude * eigen.dot(t.first.spin);
    auto it = std::find_if(partner.begin(), partner.end(), [&](const auto& e) {
      return same_momentum(e.first, t.second.momentum);
    });
    if (it == partner.end()) {
      partner.emplace_back(t.second.momentum, Spinord::Zero());
      it = std::prev(partner.end());
    }
    it->second += c * t.second.spin;
  }

  double weight = 0.0;
  for (const auto& [momentum, spin] : partner) weight += spin.squaredNorm();
  const double probability = weight / state.norm_squared();

  CollapseResult result;
  result.probability = probability;
  if (probability < kZeroProbability) {
    result.probability = 0.0;
    return result;
  }

  const double scale = std::sqrt(weight);
  std::vector<MomentumComponent> components;
  for (const auto& [momentum, spin] : partner) {
    const double n = spin.norm();
    if (n == 0.0) continue;
    components.push_back({momentum, spin / n, {n / scale, 0.0}});
  }
  result.partner.emplace(std::move(components));
  return result;
}

TwoParticleState project_first(const TwoParticleState& state,
                               const MeasurementSpec& measurement) {
  const CollapseResult r = collapse(state, measurement);
  if (!r.partner) {
    throw std::domain_error("project_first: zero-probability outcome");
  }
  const Spinord eigen = eigenspinor(measurement.basis, measurement.outcome);
  const FourMomentum first_momentum = state.terms().front().first.momentum;
  std::vector<TwoParticleTerm> terms;
  for (const auto& c : r.partner->components()) {
    terms.push_back({c.amplitude, {first_momentum, eigen}, {c.momentum, c.spin}});
  }
  return TwoParticleState(std::move(terms));
}

}  // namespace wigrot
