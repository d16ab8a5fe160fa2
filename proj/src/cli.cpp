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

#include <algorithm>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "wigrot/scenario.hpp"

namespace wigrot {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ScenarioConfig parse_command_line(const std::vector<std::string>& args) {
  CLI::App app{"Wigner rotation paradox scenarios"};
  ScenarioConfig c;

  const std::map<std::string, Scenario> scenarios{
      {"angle", Scenario::angle},         {"figure1", Scenario::figure1},
      {"figure2", Scenario::figure2},     {"ratio", Scenario::ratio},
      {"signaling", Scenario::signaling}, {"paradox", Scenario::paradox}};
  const std::map<std::string, BoostMode::Kind> modes{
      {"linear", BoostMode::Kind::linear},
      {"physical", BoostMode::Kind::physical}};
  const std::map<std::string, PreparationContext> preps{
      {"plus_y", PreparationContext::prepared_plus_y},
      {"minus_y", PreparationContext::prepared_minus_y},
      {"confined", PreparationContext::confined}};
  const std::map<std::string, SpinBasis> bases{{"z", SpinBasis::z},
                                               {"x", SpinBasis::x}};
  const std::map<std::string, int> outcomes{{"+1", 1}, {"1", 1}, {"-1", -1}};
  const std::map<std::string, KFactor> kfactors{
      {"unity", KFactor::unity}, {"sqrt", KFactor::sqrt_m_over_p0}};

  app.add_option("scenario", c.scenario, "angle|figure1|figure2|ratio|signaling|paradox")
      ->required()
      ->transform(CLI::CheckedTransformer(scenarios));

  double gamma_beta = 0, beta = 0, gamma_p = 0, v = 0, p = 0;
  long grid_points = 0;
  auto* o_gb = app.add_option("--gamma-beta", gamma_beta, "boost Lorentz factor");
  auto* o_b = app.add_option("--beta", beta, "boost speed (fraction of c)");
  o_gb->excludes(o_b);
  auto* o_gp = app.add_option("--gamma-p", gamma_p, "particle Lorentz factor");
  auto* o_v = app.add_option("--v", v, "particle speed (fraction of c)");
  auto* o_p = app.add_option("--p", p, "particle momentum (units of mc)");
  o_gp->excludes(o_v)->excludes(o_p);
  o_v->excludes(o_p);

  app.add_option("--w", c.w, "detector width (reduced Compton wavelengths)");
  app.add_option("--packet-width", c.packet_width, "Gaussian packet width W (1/mc)");
  app.add_option("--mode", c.mode, "linear|physical")
      ->transform(CLI::CheckedTransformer(modes));
  app.add_option("--prep", c.preparation, "plus_y|minus_y|confined")
      ->transform(CLI::CheckedTransformer(preps));
  app.add_option("--basis", c.basis, "z|x")->transform(CLI::CheckedTransformer(bases));
  app.add_option("--outcome", c.outcome, "+1|-1")
      ->transform(CLI::CheckedTransformer(outcomes));
  app.add_option("--k-factor", c.k_factor, "unity|sqrt")
      ->transform(CLI::CheckedTransformer(kfactors));
  auto* o_grid = app.add_option("--grid-points", grid_points, "y-grid sample count");
  app.add_option("--out", c.out_dir, "output directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  if (o_gb->count()) c.gamma_beta = gamma_beta;
  if (o_b->count()) c.beta = beta;
  if (o_gp->count()) c.gamma_p = gamma_p;
  if (o_v->count()) c.v = v;
  if (o_p->count()) c.p = p;
  if (o_grid->count()) c.grid_points = grid_points;
  return c;
}

std::vector<std::string> arguments_from_report(const std::string& report_text) {
  std::vector<std::string> args;
  std::string scenario;
  std::istringstream in(report_text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("config.", 0) != 0) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = trim(line.substr(7, eq - 7));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "scenario") {
      scenario = value;
      continue;
    }
    std::replace(key.begin(), key.end(), '_', '-');
    args.push_back("--" + key);
    args.push_back(value);
  }
  if (scenario.empty()) throw ConfigError("--config: report has no config.scenario");
  args.insert(args.begin(), scenario);
  return args;
}

}  // namespace wigrot
