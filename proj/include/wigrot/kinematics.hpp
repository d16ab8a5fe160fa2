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

// Relativistic kinematics for a massive particle moving along y, observed
// from a frame boosted along z.
//
// Units: hbar = c = m = 1. Lengths are in reduced Compton wavelengths,
// momenta in units of mc, speeds as fractions of c.

#include <cmath>
#include <stdexcept>
#include <string>

namespace wigrot {

/// Lorentz factors closer to 1 than this are treated as exactly 1.
inline constexpr double kDegenerateGammaExcess = 1e-14;

namespace detail {

template <typename Scalar>
bool is_finite(const Scalar& x) {
  using std::isfinite;
  return isfinite(x);
}

/// sin(phi/2) written in terms of the excesses gamma_p - 1 and gamma_beta - 1,
/// which callers can often supply without cancellation.
template <typename Scalar>
Scalar half_angle_sine_from_excess(const Scalar& particle_excess,
                                   const Scalar& boost_excess) {
  using std::sqrt;
  if (particle_excess < Scalar(kDegenerateGammaExcess) ||
      boost_excess < Scalar(kDegenerateGammaExcess)) {
    return Scalar(0);
  }
  const Scalar gamma_p = Scalar(1) + particle_excess;
  const Scalar gamma_beta = Scalar(1) + boost_excess;
  return sqrt(particle_excess * boost_excess /
              (Scalar(2) * (Scalar(1) + gamma_p * gamma_beta)));
}

}  // namespace detail

/// Lorentz factor 1/sqrt(1 - speed^2) for speed in [0, 1).
template <typename Scalar>
Scalar gamma_from_speed(const Scalar& speed) {
  using std::sqrt;
  if (!(speed >= Scalar(0) && speed < Scalar(1))) {
    throw std::domain_error("gamma_from_speed: speed must lie in [0, 1)");
  }
  return Scalar(1) / sqrt((Scalar(1) - speed) * (Scalar(1) + speed));
}

/// Inverse of gamma_from_speed for gamma >= 1.
template <typename Scalar>
Scalar speed_from_gamma(const Scalar& gamma) {
  using std::sqrt;
  if (!(gamma >= Scalar(1)) || !detail::is_finite(gamma)) {
    throw std::domain_error("speed_from_gamma: gamma must be finite and >= 1");
  }
  return sqrt((gamma - Scalar(1)) * (gamma + Scalar(1))) / gamma;
}

/// sin(phi/2) of the Wigner rotation for a boost perpendicular to the
/// particle momentum:
///
///   sin(phi/2) = sqrt((gamma_p - 1)(gamma_beta - 1) / (2 (1 + gamma_p gamma_beta)))
///
/// The result lies in [0, 1/sqrt(2)). Inputs within kDegenerateGammaExcess
/// of 1 give exactly 0.
template <typename Scalar>
Scalar wigner_half_angle_sine(const Scalar& gamma_p, const Scalar& gamma_beta) {
  if (!(gamma_p >= Scalar(1)) || !(gamma_beta >= Scalar(1)) ||
      !detail::is_finite(gamma_p) || !detail::is_finite(gamma_beta)) {
    throw std::domain_error(
        "wigner_half_angle_sine: Lorentz factors must be finite and >= 1");
  }
  return detail::half_angle_sine_from_excess(gamma_p - Scalar(1),
                                             gamma_beta - Scalar(1));
}

/// On-shell four-momentum of a unit-mass particle with momentum p along y.
template <typename Scalar>
class BasicFourMomentum {
 public:
  explicit BasicFourMomentum(const Scalar& p) : p_(p) {
    using std::sqrt;
    if (!detail::is_finite(p)) {
      throw std::domain_error("FourMomentum: momentum must be finite");
    }
    energy_ = sqrt(Scalar(1) + p * p);
  }

  /// Momentum with the given Lorentz factor; `sign` picks +y or -y.
  static BasicFourMomentum from_gamma(const Scalar& gamma, int sign = +1) {
    using std::sqrt;
    if (!(gamma >= Scalar(1)) || !detail::is_finite(gamma)) {
      throw std::domain_error("FourMomentum: gamma must be finite and >= 1");
    }
    const Scalar magnitude = sqrt((gamma - Scalar(1)) * (gamma + Scalar(1)));
    return BasicFourMomentum(sign < 0 ? Scalar(-magnitude) : magnitude);
  }

  /// Momentum of a particle with signed velocity v along y, |v| < 1.
  static BasicFourMomentum from_velocity(const Scalar& v) {
    using std::abs;
    const Scalar gamma = gamma_from_speed(Scalar(abs(v)));
    return BasicFourMomentum(Scalar(v * gamma));
  }

  const Scalar& momentum() const { return p_; }
  const Scalar& energy() const { return energy_; }
  Scalar mass() const { return Scalar(1); }
  const Scalar& gamma() const { return energy_; }
  Scalar velocity() const { return p_ / energy_; }

  /// gamma - 1 computed as p^2 / (p0 + 1), free of cancellation at small p.
  Scalar gamma_excess() const { return p_ * p_ / (energy_ + Scalar(1)); }

 private:
  Scalar p_;
  Scalar energy_;
};

/// Boost of speed beta along z.
template <typename Scalar>
class BasicBoostParameter {
 public:
  static BasicBoostParameter from_speed(const Scalar& beta) {
    const Scalar gamma = gamma_from_speed(beta);
    // gamma^2 - 1 = beta^2 gamma^2
    const Scalar excess = beta * beta * gamma * gamma / (gamma + Scalar(1));
    return BasicBoostParameter(beta, gamma, excess);
  }

  static BasicBoostParameter from_gamma(const Scalar& gamma) {
    const Scalar beta = speed_from_gamma(gamma);
    return BasicBoostParameter(beta, gamma, gamma - Scalar(1));
  }

  static BasicBoostParameter identity() {
    return BasicBoostParameter(Scalar(0), Scalar(1), Scalar(0));
  }

  const Scalar& beta() const { return beta_; }
  const Scalar& gamma() const { return gamma_; }
  const Scalar& gamma_excess() const { return excess_; }

 private:
  BasicBoostParameter(Scalar beta, Scalar gamma, Scalar excess)
      : beta_(beta), gamma_(gamma), excess_(excess) {}

  Scalar beta_;
  Scalar gamma_;
  Scalar excess_;
};

using FourMomentum = BasicFourMomentum<double>;
using BoostParameter = BasicBoostParameter<double>;

/// Signed Wigner angle phi(p): positive for momentum along +y, negative along
/// -y, zero at rest. The magnitude is 2 asin(sin(phi/2)) and lies in [0, pi/2).
template <typename Scalar>
Scalar wigner_angle(const BasicFourMomentum<Scalar>& momentum,
                    const BasicBoostParameter<Scalar>& boost) {
  using std::asin;
  const Scalar sine = detail::half_angle_sine_from_excess(
      momentum.gamma_excess(), boost.gamma_excess());
  const Scalar magnitude = Scalar(2) * asin(sine);
  if (momentum.momentum() > Scalar(0)) return magnitude;
  if (momentum.momentum() < Scalar(0)) return Scalar(-magnitude);
  return Scalar(0);
}

}  // namespace wigrot
