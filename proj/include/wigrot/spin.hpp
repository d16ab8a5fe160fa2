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

// Spin-1/2 algebra on the {|+Z>, |-Z>} basis.

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Core>

namespace wigrot {

template <typename Scalar>
using Spinor = Eigen::Matrix<std::complex<Scalar>, 2, 1>;

template <typename Scalar>
using SpinOperator = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

using Spinord = Spinor<double>;
using SpinOperatord = SpinOperator<double>;

enum class PauliAxis { identity, x, y, z };

/// Measurement bases used for spin projections.
enum class SpinBasis { z, x };

template <typename Scalar = double>
SpinOperator<Scalar> pauli(PauliAxis axis) {
  using C = std::complex<Scalar>;
  SpinOperator<Scalar> m;
  switch (axis) {
    case PauliAxis::identity:
      m << C(1), C(0), C(0), C(1);
      break;
    case PauliAxis::x:
      m << C(0), C(1), C(1), C(0);
      break;
    case PauliAxis::y:
      m << C(0), C(0, -1), C(0, 1), C(0);
      break;
    case PauliAxis::z:
      m << C(1), C(0), C(0), C(-1);
      break;
  }
  return m;
}

template <typename Scalar = double>
Spinor<Scalar> plus_z() {
  return Spinor<Scalar>(std::complex<Scalar>(1), std::complex<Scalar>(0));
}

template <typename Scalar = double>
Spinor<Scalar> minus_z() {
  return Spinor<Scalar>(std::complex<Scalar>(0), std::complex<Scalar>(1));
}

/// |+X> = (|+Z> + |-Z>)/sqrt(2).
template <typename Scalar = double>
Spinor<Scalar> plus_x() {
  using std::sqrt;
  const Scalar h = Scalar(1) / sqrt(Scalar(2));
  return Spinor<Scalar>(std::complex<Scalar>(h), std::complex<Scalar>(h));
}

/// |-X> = (|+Z> - |-Z>)/sqrt(2).
template <typename Scalar = double>
Spinor<Scalar> minus_x() {
  using std::sqrt;
  const Scalar h = Scalar(1) / sqrt(Scalar(2));
  return Spinor<Scalar>(std::complex<Scalar>(h), std::complex<Scalar>(-h));
}

/// Eigenspinor of sigma_z or sigma_x with eigenvalue `outcome` (+1 or -1).
template <typename Scalar = double>
Spinor<Scalar> eigenspinor(SpinBasis basis, int outcome) {
  if (outcome != 1 && outcome != -1) {
    throw std::invalid_argument("eigenspinor: outcome must be +1 or -1");
  }
  if (basis == SpinBasis::z) {
    return outcome > 0 ? plus_z<Scalar>() : minus_z<Scalar>();
  }
  return outcome > 0 ? plus_x<Scalar>() : minus_x<Scalar>();
}

/// Wigner rotation about x by the signed angle phi:
/// cos(phi/2) sigma_0 + i sin(phi/2) sigma_x.
template <typename Scalar>
SpinOperator<Scalar> wigner_rotation(const Scalar& angle) {
  using std::cos;
  using std::sin;
  using C = std::complex<Scalar>;
  const Scalar c = cos(angle / Scalar(2));
  const Scalar s = sin(angle / Scalar(2));
  SpinOperator<Scalar> m;
  m << C(c), C(Scalar(0), s), C(Scalar(0), s), C(c);
  return m;
}

template <typename Scalar>
Spinor<Scalar> apply(const SpinOperator<Scalar>& op, const Spinor<Scalar>& s) {
  return op * s;
}

/// `rotated` multiplied by the unit phase that makes <original|result> real
/// and non-negative. Leaves `rotated` unchanged when the overlap vanishes.
template <typename Scalar>
Spinor<Scalar> align_phase(const Spinor<Scalar>& rotated,
                           const Spinor<Scalar>& original) {
  using std::abs;
  const std::complex<Scalar> overlap = original.dot(rotated);
  const Scalar magnitude = abs(overlap);
  if (magnitude == Scalar(0)) return rotated;
  return rotated * (std::conj(overlap) / magnitude);
}

/// |<a|b>|; equals 1 when a and b are the same normalized ray.
template <typename Scalar>
Scalar ray_overlap(const Spinor<Scalar>& a, const Spinor<Scalar>& b) {
  using std::abs;
  return abs(a.dot(b));
}

/// ||U^dagger U - I|| in the Frobenius norm.
template <typename Scalar>
Scalar unitarity_defect(const SpinOperator<Scalar>& u) {
  return (u.adjoint() * u - SpinOperator<Scalar>::Identity()).norm();
}

}  // namespace wigrot
