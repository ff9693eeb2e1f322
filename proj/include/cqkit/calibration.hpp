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

#ifndef CQKIT_CALIBRATION_HPP_
#define CQKIT_CALIBRATION_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

// Published reference values used for delta reports and acceptance checks.
// Ontology names follow the corpus short names (DemCare for Dem@Care).
namespace cqkit::reference {

struct TranslatabilityRef {
  std::string ontology;
  std::size_t cqs = 0;
  std::size_t translated = 0;
};
// Per-ontology rows then "Total".
const std::vector<TranslatabilityRef>& translatability();

struct KeywordRef {
  std::string keyword;
  std::size_t total = 0;
  std::map<std::string, std::size_t> per_ontology;
};
const std::vector<KeywordRef>& keywords();

struct CoverageRef {
  std::string ontology;
  std::size_t candidates = 0;
  std::size_t patterns = 0;
  std::size_t distinct = 0;
  double covered_percent = 0;
  std::size_t materialized = 0;
  std::size_t dematerialized = 0;
  std::size_t higher = 0;
};
const std::vector<CoverageRef>& coverage();

struct ReuseRef {
  std::string text;
  std::set<std::string> ontologies;
};
const std::vector<ReuseRef>& shared_patterns();
const std::vector<ReuseRef>& shared_higher_patterns();

struct SignalRef {
  std::string rule_id;
  std::size_t numerator = 0;
  std::size_t denominator = 0;
};
const std::vector<SignalRef>& signals();

inline constexpr std::size_t kSignatureCount = 46;
inline constexpr double kTop9Coverage = 63.1;
inline constexpr std::size_t kHigherLevelStated = 82;
inline constexpr double kDemCareHigherCoverage = 92.5;
inline constexpr double kOntoDtPatternAverage = 2.0;
inline constexpr double kOntoDtHigherAverage = 3.5;

// CQ text -> candidate pattern.
struct ChunkingExample {
  std::string cq_id;
  std::string text;
  std::string pattern;
};
const std::vector<ChunkingExample>& chunking_examples();

// Pattern variants that normalize to one higher-level pattern.
struct NormalizationFamily {
  std::string higher;
  std::vector<std::string> variants;
};
const std::vector<NormalizationFamily>& normalization_families();

}  // namespace cqkit::reference

#endif  // CQKIT_CALIBRATION_HPP_
