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

#ifndef CQKIT_TABLE_HPP_
#define CQKIT_TABLE_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace cqkit {

/// A titled grid of strings that every report is rendered through.
struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
  std::string to_markdown() const;
};

// "89.3%" style, one decimal unless asked otherwise.
std::string format_percent(double pct, int decimals = 1);

// "16/18 (88.9%)"; a zero denominator renders as "0/0 (0.0%)".
std::string format_fraction(std::size_t numerator, std::size_t denominator);

double percent(std::size_t numerator, std::size_t denominator);

std::string format_double(double value, int decimals);

}  // namespace cqkit

#endif  // CQKIT_TABLE_HPP_
