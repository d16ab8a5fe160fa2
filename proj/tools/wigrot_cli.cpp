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

// wigrot <scenario> [options]
//
// Exit codes: 0 success, 2 configuration error, 3 numerical-contract
// violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wigrot/scenario.hpp"

namespace {

constexpr const char* kUsage =
    "usage: wigrot <angle|figure1|figure2|ratio|signaling|paradox>\n"
    "         [--gamma-beta F | --beta F] [--gamma-p F | --v F | --p F]\n"
    "         [--w F] [--packet-width F] [--mode linear|physical]\n"
    "         [--prep plus_y|minus_y|confined] [--basis z|x] [--outcome +1|-1]\n"
    "         [--k-factor unity|sqrt] [--grid-points N] [--out DIR]\n"
    "       wigrot --config REPORT [--out DIR]\n";

// `--config REPORT` replays the config echoed in an earlier report.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] != "--config") continue;
    if (i + 1 >= args.size()) throw wigrot::ConfigError("--config: missing file");
    std::ifstream in(args[i + 1], std::ios::binary);
    if (!in) throw wigrot::ConfigError("--config: cannot read " + args[i + 1]);
    std::stringstream text;
    text << in.rdbuf();
    std::vector<std::string> rest;
    for (std::size_t j = 0; j < args.size(); ++j) {
      if (j == i || j == i + 1) continue;
      if (args[j] != "--out") {
        throw wigrot::ConfigError("--config: only --out may accompany it");
      }
      rest.push_back(args[j]);
      if (j + 1 < args.size()) rest.push_back(args[++j]);
    }
    auto expanded = wigrot::arguments_from_report(text.str());
    expanded.insert(expanded.end(), rest.begin(), rest.end());
    return expanded;
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  for (const auto& a : args) {
    if (a == "-h" || a == "--help") {
      std::cout << kUsage;
      return 0;
    }
  }
  try {
    const wigrot::ScenarioConfig config =
        wigrot::parse_command_line(expand_config(std::move(args)));
    const wigrot::RunReport report = wigrot::run_scenario(config);
    if (!config.out_dir.empty()) wigrot::write_outputs(report, config.out_dir);
    std::cout << report.text();
    return 0;
  } catch (const wigrot::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n" << kUsage;
    return 2;
  } catch (const wigrot::NumericalContractError& e) {
    std::cerr << "numerical contract violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
