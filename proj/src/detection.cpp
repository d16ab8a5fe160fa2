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

#include "wigrot/detection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wigrot {

namespace {

// exp(-40^2) underflows; kernel contributions beyond this are exactly zero.
constexpr double kKernelReach = 40.0;
constexpr double kTieTolerance = 1e-12;

void check_density(const SampledDensity& d) {
  if (d.values.size() != d.grid.size()) {
    throw std::invalid_argument("density sample count does not match grid");
  }
}

}  // namespace

DetectorSpec::DetectorSpec(double width) : width_(width) {
  if (!(width >= 1.0) || !std::isfinite(width)) {
    throw std::domain_error(
        "DetectorSpec: width must be at least one Compton wavelength");
  }
}

double DetectorSpec::kernel(double y) const {
  const double u = y / width_;
  return std::exp(-u * u) / (width_ * std::sqrt(std::numbers::pi));
}

DetectionSample detection_probability(const SampledDensity& density,
                                      const DetectorSpec& detector,
                                      double y_c) {
  check_density(density);
  const YGrid& grid = density.grid;
  const double reach = kKernelReach * detector.width();
  const Eigen::VectorXd weights = trapezoid_weights(grid);

  double total = 0.0;
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const double d = grid.at(i) - y_c;
    if (std::abs(d) > reach) continue;
    total += weights[i] * density.values[i] * detector.kernel(d);
  }

  const double core = 3.0 * detector.width();
  return {total,
          y_c - core < grid.y_min() || y_c + core > grid.y_max()};
}

Eigen::VectorXd detection_curve(const SampledDensity& density,
                                const DetectorSpec& detector) {
  check_density(density);
  const YGrid& grid = density.grid;
  const Eigen::Index n = grid.size();
  const double h = grid.spacing();
  const Eigen::Index reach = std::min<Eigen::Index>(
      n - 1, Eigen::Index(std::ceil(kKernelReach * detector.width() / h)));

  Eigen::VectorXd table(reach + 1);
  for (Eigen::Index k = 0; k <= reach; ++k) table[k] = detector.kernel(double(k) * h);

  const Eigen::VectorXd weighted =
      trapezoid_weights(grid).cwiseProduct(density.values);
  Eigen::VectorXd curve(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index lo = std::max<Eigen::Index>(0, j - reach);
    const Eigen::Index hi = std::min<Eigen::Index>(n - 1, j + reach);
    double total = 0.0;
    for (Eigen::Index i = lo; i <= hi; ++i) {
      total += weighted[i] * table[std::abs(i - j)];
    }
    curve[j] = total;
  }
  return curve;
}

RatioMeasurement ratio_R(const SampledDensity& density,
                         const DetectorSpec& detector) {
  check_density(density);
  const Eigen::VectorXd& v = density.values;
  const double peak = v.maxCoeff();
  const double threshold = peak - kTieTolerance * std::abs(peak);

  Eigen::Index best = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] < threshold) continue;
    if (best < 0) {
      best = i;
      continue;
    }
    const double yi = density.grid.at(i);
    const double yb = density.grid.at(best);
    // Prefer smaller |y|; between +y and -y prefer the positive side.
    if (std::abs(yi) < std::abs(yb) ||
        (std::abs(yi) == std::abs(yb) && yi > yb)) {
      best = i;
    }
  }

  RatioMeasurement out;
  out.y_m = density.grid.at(best);
  out.p_center = detection_probability(density, detector, 0.0).probability;
  out.p_max = detection_probability(density, detector, out.y_m).probability;
  if (!(out.p_max > 0.0)) {
    throw std::domain_error("ratio_R: detection probability at y_m vanishes");
  }
  out.ratio = out.p_center / out.p_max;
  return out;
}

double standing_wave_ratio(double a, double b, double p, double w) {
  const double e = std::exp(-p * p * w * w);
  // 1 - E without cancellation for small p w
  const double one_minus_e = -std::expm1(-p * p * w * w);
  const double one_plus_e = 1.0 + e;
  return (a * one_minus_e + b * one_plus_e) / (a * one_plus_e + b * one_minus_e);
}

SmallVelocityApproximation small_velocity_approximation(double gamma_beta,
                                                        double v, double w) {
  return {0.5 * w * w * v * v,
          1.0 + (gamma_beta - 1.0) / (2.0 * (gamma_beta + 1.0) * w * w)};
}

RatioReport ratio_report(const SampledDensity& density_psi,
                         const SampledDensity& density_phi,
                         const DetectorSpec& detector, double gamma_beta,
                         double v) {
  const RatioMeasurement psi = ratio_R(density_psi, detector);
  const RatioMeasurement phi = ratio_R(density_phi, detector);
  const SmallVelocityApproximation approx =
      small_velocity_approximation(gamma_beta, v, detector.width());
  return {phi.ratio,    psi.ratio,           psi.ratio / phi.ratio,
          approx.r_phi, approx.ratio_of_ratios, phi.y_m};
}

SignalingStatistic signaling_discriminator(const SampledDensity& density_psi,
                                           const SampledDensity& density_phi,
                                           const DetectorSpec& detector) {
  if (!(density_psi.grid == density_phi.grid)) {
    throw std::invalid_argument(
        "signaling_discriminator: densities must share one grid");
  }
  SignalingStatistic s;
  s.r_psi = ratio_R(density_psi, detector).ratio;
  s.r_phi = ratio_R(density_phi, detector).ratio;
  s.ratio_gap = std::abs(s.r_psi - s.r_phi);
  s.sup_detection_gap = (detection_curve(density_psi, detector) -
                         detection_curve(density_phi, detector))
                            .cwiseAbs()
                            .maxCoeff();
  s.sup_density_gap =
      (density_psi.values - density_phi.values).cwiseAbs().maxCoeff();
  return s;
}

}  // namespace wigrot
