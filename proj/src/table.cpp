// Copyright 2026 The cqkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cqkit/table.hpp"

#include <cmath>
#include <cstdio>

namespace cqkit {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out.push_back(c);
  }
  return out;
}

}  // namespace

std::string Table::to_csv() const {
  std::string out;
  auto emit = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out.push_back(',');
      out += csv_field(cells[i]);
    }
    out.push_back('\n');
  };
  emit(columns);
  for (const auto& r : rows) emit(r);
  return out;
}

std::string Table::to_markdown() const {
  std::string out;
  if (!title.empty()) out += "## " + title + "\n\n";
  out += "|";
  for (const auto& c : columns) out += " " + md_cell(c) + " |";
  out += "\n|";
  for (std::size_t i = 0; i < columns.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& r : rows) {
    out += "|";
    for (const auto& c : r) out += " " + md_cell(c) + " |";
    out += "\n";
  }
  return out;
}

std::string format_double(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string format_percent(double pct, int decimals) {
  return format_double(pct, decimals) + "%";
}

double percent(std::size_t numerator, std::size_t denominator) {
  if (denominator == 0) return 0.0;
  return 100.0 * static_cast<double>(numerator) / static_cast<double>(denominator);
}

std::string format_fraction(std::size_t numerator, std::size_t denominator) {
  return std::to_string(numerator) + "/" + std::to_string(denominator) + " (" +
         format_percent(percent(numerator, denominator)) + ")";
}

}  // namespace cqkit
