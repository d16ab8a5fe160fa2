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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "wigrot/scenario.hpp"

namespace wigrot {

void RunReport::add(std::string key, std::string value) {
  entries_.emplace_back(std::move(key), std::move(value));
}

void RunReport::add(std::string key, double value) {
  add(std::move(key), format_double(value));
}

void RunReport::add(std::string key, bool value) {
  add(std::move(key), std::string(value ? "true" : "false"));
}

void RunReport::add_file(CsvFile file) {
  add("file." + file.name, file.name);
  files_.push_back(std::move(file));
}

std::optional<std::string> RunReport::value(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string RunReport::text() const {
  std::string out = "# wigrot run report\n";
  for (const auto& [k, v] : entries_) {
    out += k;
    out += " = ";
    out += v;
    out += '\n';
  }
  return out;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_csv(const std::vector<std::string>& header,
                       const std::vector<const Eigen::VectorXd*>& columns) {
  if (header.size() != columns.size() || columns.empty()) {
    throw std::invalid_argument("format_csv: header/column mismatch");
  }
  const Eigen::Index rows = columns.front()->size();
  for (const auto* c : columns) {
    if (c->size() != rows) {
      throw std::invalid_argument("format_csv: ragged columns");
    }
  }
  std::string out;
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (j) out += ',';
    out += header[j];
  }
  out += '\n';
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (j) out += ',';
      out += format_double((*columns[j])[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::angle: return "angle";
    case Scenario::figure1: return "figure1";
    case Scenario::figure2: return "figure2";
    case Scenario::ratio: return "ratio";
    case Scenario::signaling: return "signaling";
    case Scenario::paradox: return "paradox";
  }
  return "?";
}

std::string to_string(BoostMode::Kind k) {
  return k == BoostMode::Kind::linear ? "linear" : "physical";
}

std::string to_string(PreparationContext p) {
  switch (p) {
    case PreparationContext::free: return "free";
    case PreparationContext::prepared_plus_y: return "plus_y";
    case PreparationContext::prepared_minus_y: return "minus_y";
    case PreparationContext::confined: return "confined";
  }
  return "?";
}

std::string to_string(SpinBasis b) { return b == SpinBasis::z ? "z" : "x"; }

std::string to_string(KFactor k) {
  return k == KFactor::unity ? "unity" : "sqrt";
}

void write_outputs(const RunReport& report, const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path root(dir);
  fs::create_directories(root);
  auto write = [&](const std::string& name, const std::string& content) {
    std::ofstream out(root / name, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + (root / name).string());
    out << content;
  };
  write("report.txt", report.text());
  for (const auto& f : report.files()) write(f.name, f.content);
}

}  // namespace wigrot
