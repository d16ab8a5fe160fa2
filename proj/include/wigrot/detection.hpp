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

// Spin-blind position detector with Gaussian response
//
//   P(y_c) = \int dy Gamma(y - y_c) |psi(y)|^2,   Gamma(y) = e^{-y^2/w^2} / (w sqrt(pi))
//
// and the observables built on it: the contrast ratio R = P(0)/P(y_m), its
// small-velocity approximation, and a basis discriminator for two densities.

#include <Eigen/Core>

#include "wigrot/wavefunction.hpp"

namespace wigrot {

/// Detector of kernel width w, in reduced Compton wavelengths. A detector
/// cannot resolve below one Compton wavelength, so w < 1 is rejected.
class DetectorSpec {
 public:
  explicit DetectorSpec(double width);

  double width() const { return width_; }
  bool near_compton_limit() const { return width_ < 1.05; }

  /// Unit-integral kernel.
  double kernel(double y) const;

 private:
  double width_;
};

struct DetectionSample {
  double probability = 0.0;
  /// The kernel's +-3w core extends past the density window.
  bool kernel_truncated = false;
};

DetectionSample detection_probability(const SampledDensity& density,
                                      const DetectorSpec& detector, double y_c);

/// P(y_c) for every grid point y_c.
Eigen::VectorXd detection_curve(const SampledDensity& density,
                                const DetectorSpec& detector);

struct RatioMeasurement {
  double ratio = 0.0;  // P(0) / P(y_m)
  double y_m = 0.0;    // density argmax, ties toward the smallest |y|
  double p_center = 0.0;
  double p_max = 0.0;
};

/// Throws std::domain_error if P(y_m) vanishes.
RatioMeasurement ratio_R(const SampledDensity& density,
                         const DetectorSpec& detector);

/// Closed-form R for a density a sin^2(p y) + b cos^2(p y) on the whole line:
/// (a(1-E) + b(1+E)) / (a(1+E) + b(1-E)),  E = e^{-p^2 w^2}.
double standing_wave_ratio(double a, double b, double p, double w);

struct SmallVelocityApproximation {
  double r_phi = 0.0;            // w^2 v^2 / 2
  double ratio_of_ratios = 1.0;  // 1 + (gamma_beta - 1) / (2 (gamma_beta + 1) w^2)
};

/// Leading-order R_phi and R_psi/R_phi for v << 1.
SmallVelocityApproximation small_velocity_approximation(double gamma_beta,
                                                        double v, double w);

struct RatioReport {
  double r_phi = 0.0;
  double r_psi = 0.0;
  double ratio_of_ratios = 0.0;
  double approx_r_phi = 0.0;
  double approx_ratio = 0.0;
  double y_m = 0.0;
};

RatioReport ratio_report(const SampledDensity& density_psi,
                         const SampledDensity& density_phi,
                         const DetectorSpec& detector, double gamma_beta,
                         double v);

struct SignalingStatistic {
  double r_psi = 0.0;
  double r_phi = 0.0;
  double ratio_gap = 0.0;
  double sup_detection_gap = 0.0;  // sup over grid y_c of |P_psi - P_phi|
  double sup_density_gap = 0.0;

  bool certifies_no_signaling(double tol = 1e-12) const {
    return sup_detection_gap <= tol;
  }
};

/// Throws std::invalid_argument when the densities live on different grids.
SignalingStatistic signaling_discriminator(const SampledDensity& density_psi,
                                           const SampledDensity& density_phi,
                                           const DetectorSpec& detector);

}  // namespace wigrot
