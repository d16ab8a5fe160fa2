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

// Reproducible experiments over the library. Each run yields a RunReport:
// an ordered key = value listing (echoed config, derived kinematics,
// results) plus the CSV curves it produced. Runs are deterministic, and the
// echoed config alone reproduces the report.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wigrot/boost.hpp"
#include "wigrot/kinematics.hpp"
#include "wigrot/spin.hpp"
#include "wigrot/wavefunction.hpp"

namespace wigrot {

inline constexpr const char* kToolVersion = "0.1.0";

/// Invalid or inconsistent configuration. Maps to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed quantity broke a numerical contract. Maps to exit code 3.
class NumericalContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Scenario { angle, figure1, figure2, ratio, signaling, paradox };

struct ScenarioConfig {
  Scenario scenario = Scenario::angle;

  // At most one boost alias and one momentum alias.
  std::optional<double> gamma_beta;
  std::optional<double> beta;
  std::optional<double> gamma_p;
  std::optional<double> v;
  std::optional<double> p;

  double w = 1.0;             // detector width
  double packet_width = 1.0;  // Gaussian packet W
  BoostMode::Kind mode = BoostMode::Kind::linear;
  PreparationContext preparation = PreparationContext::prepared_minus_y;
  SpinBasis basis = SpinBasis::z;
  int outcome = -1;
  KFactor k_factor = KFactor::sqrt_m_over_p0;
  std::optional<long> grid_points;

  std::string out_dir;  // not part of the echoed config
};

struct CsvFile {
  std::string name;
  std::string content;
};

class RunReport {
 public:
  void add(std::string key, std::string value);
  void add(std::string key, double value);
  void add(std::string key, bool value);
  void add_file(CsvFile file);

  std::optional<std::string> value(const std::string& key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }
  const std::vector<CsvFile>& files() const { return files_; }

  std::string text() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  std::vector<CsvFile> files_;
};

/// 17 significant digits.
std::string format_double(double x);

/// Header line plus one row per sample, comma-separated, LF endings.
std::string format_csv(const std::vector<std::string>& header,
                       const std::vector<const Eigen::VectorXd*>& columns);

std::string to_string(Scenario s);
std::string to_string(BoostMode::Kind k);
std::string to_string(PreparationContext p);
std::string to_string(SpinBasis b);
std::string to_string(KFactor k);

struct ResolvedKinematics {
  BoostParameter boost;
  std::optional<FourMomentum> momentum;
};

/// Applies per-scenario defaults (gamma_beta = 10, gamma_p = 1.2; figure2
/// uses beta = 0.995) and validates ranges. Throws ConfigError.
ResolvedKinematics resolve_kinematics(const ScenarioConfig& config);

RunReport run_angle(const ScenarioConfig& config);
RunReport run_figure1(const ScenarioConfig& config);
RunReport run_figure2(const ScenarioConfig& config);
RunReport run_ratio(const ScenarioConfig& config);
RunReport run_signaling(const ScenarioConfig& config);
RunReport run_paradox(const ScenarioConfig& config);
RunReport run_scenario(const ScenarioConfig& config);

/// Writes report.txt and every CSV into `dir`, creating it if needed.
void write_outputs(const RunReport& report, const std::string& dir);

/// Parses `<scenario> [options]` (program name excluded). Throws ConfigError.
ScenarioConfig parse_command_line(const std::vector<std::string>& args);

/// Rebuilds command-line arguments from the config.* entries of a report.
std::vector<std::string> arguments_from_report(const std::string& report_text);

}  // namespace wigrot
