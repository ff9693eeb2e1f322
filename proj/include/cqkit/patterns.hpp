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

#ifndef CQKIT_PATTERNS_HPP_
#define CQKIT_PATTERNS_HPP_

#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cqkit/corpus.hpp"

namespace cqkit {

enum class PatternLevel { Candidate, Pattern, Higher };

std::string_view level_name(PatternLevel level);

struct Pattern {
  std::string text;
  PatternLevel level = PatternLevel::Candidate;
  std::vector<std::string> support;  // cq ids, corpus order
  std::set<std::string> ontologies;
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// One pattern candidate per CQ.
struct Candidate {
  std::string cq_id;
  std::string ontology;
  bool dematerialized = false;
  std::string text;
  bool overridden = false;
};

struct Rejection {
  std::string cq_id;
  std::string text;
  std::string reason;
};

struct FilterResult {
  std::vector<Candidate> accepted;
  std::vector<Rejection> rejected;
  std::vector<Pattern> patterns;  // distinct, level Pattern, first-seen order
};

// Comparison key: trimmed, trailing "?" removed, first letter upper-cased.
std::string pattern_key(std::string_view text);

// Dematerialized candidates always pass; materialized ones need another CQ
// (any ontology) with the same key.
FilterResult filter_candidates(const std::vector<Candidate>& candidates);

std::string normalize_pattern_text(std::string_view text);
Pattern normalize_pattern(const Pattern& pattern);

// Groups patterns by normalized text; supports and ontology sets are unioned.
std::vector<Pattern> higher_level_patterns(const std::vector<Pattern>& patterns);

// Count of "EC<k>" slot occurrences.
std::size_t ec_slot_count(std::string_view text);

struct CoverageRow {
  std::string ontology;  // "Total" for the last row
  std::size_t candidates = 0;
  std::size_t patterns = 0;
  std::size_t distinct = 0;
  double covered_percent = 0.0;
  std::size_t materialized = 0;
  std::size_t dematerialized = 0;
  std::size_t higher = 0;
};

std::vector<CoverageRow> coverage_stats(const Corpus& corpus, const std::vector<Candidate>& candidates,
                                        const FilterResult& filtered,
                                        const std::vector<Pattern>& higher);

struct ReuseRow {
  std::string text;
  std::set<std::string> ontologies;
};

std::vector<ReuseRow> cross_set_reuse(const std::vector<Pattern>& patterns);

struct AverageRow {
  std::string ontology;
  std::size_t covered = 0;
  std::size_t distinct = 0;
  double average = 0.0;
};

std::vector<AverageRow> avg_cqs_per_pattern(const Corpus& corpus, const std::vector<Pattern>& patterns);

// One JSON object per line: text, level, support, ontologies.
void write_patterns_jsonl(const std::vector<Pattern>& patterns, std::ostream& out);

// ---------------------------------------------------------------------------
// Question features

enum class QuestionType { Selection, Binary, Count };
enum class Polarity { Positive, Negative, Both };
enum class Modifier { None, Numeric, Superlative, Comparative, Difference, Extent };
enum class Dinde { Time, Location, Person, Period, Procedure };

struct CqFeatures {
  QuestionType question_type = QuestionType::Selection;
  Polarity polarity = Polarity::Positive;
  Modifier modifier = Modifier::None;
  std::set<Dinde> dinde;
  friend bool operator==(const CqFeatures&, const CqFeatures&) = default;
};

std::string_view feature_name(QuestionType v);
std::string_view feature_name(Polarity v);
std::string_view feature_name(Modifier v);
std::string_view feature_name(Dinde v);

// Works on raw CQ text or on pattern text ("NUM" counts as a number).
CqFeatures classify_cq(std::string_view text);

}  // namespace cqkit

#endif  // CQKIT_PATTERNS_HPP_
