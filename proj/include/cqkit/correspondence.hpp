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

#ifndef CQKIT_CORRESPONDENCE_HPP_
#define CQKIT_CORRESPONDENCE_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cqkit/corpus.hpp"
#include "cqkit/patterns.hpp"
#include "cqkit/signatures.hpp"

namespace cqkit {

struct MappingEdge {
  std::string pattern_text;
  PatternLevel pattern_level = PatternLevel::Pattern;
  std::string signature_id;
  std::vector<std::string> witness_cq_ids;
};

struct MappingSummary {
  std::size_t patterns = 0;  // patterns with at least one edge
  std::size_t signatures = 0;
  std::size_t edges = 0;
  std::size_t patterns_with_multiple_signatures = 0;
  std::size_t signatures_with_multiple_patterns = 0;
  std::map<std::size_t, std::size_t> pattern_degree_histogram;    // degree -> patterns
  std::map<std::size_t, std::size_t> signature_degree_histogram;  // degree -> signatures
};

struct Mapping {
  std::vector<MappingEdge> edges;  // pattern order, then signature rank
  MappingSummary summary;
};

Mapping build_mapping(const std::vector<Pattern>& patterns, const SignatureInventory& inventory);

// ---------------------------------------------------------------------------
// Signal rules

enum class MatcherKind { InitialWordClass, ContainsPhrase, ContainsWord };
enum class TargetKind { QueryVerb, KeywordPresent, SignatureSkeleton };

struct SignalMatcher {
  MatcherKind kind = MatcherKind::ContainsWord;
  std::set<std::string> words;  // InitialWordClass, lowercase
  std::string phrase;           // ContainsPhrase; "…" wildcard, "a/b" alternatives, EC/PC/NUM slots
  std::string word;             // ContainsWord, lowercase
};

struct SignalTarget {
  TargetKind kind = TargetKind::QueryVerb;
  sparql::QueryVerb verb = sparql::QueryVerb::Select;
  std::string keyword;         // keyword name, e.g. "owl:unionOf"
  std::string skeleton_query;  // source text of the target shape
  std::string where_skeleton;  // canonical form of skeleton_query
  // Further accepted shapes, same treatment.
  std::vector<std::string> alternative_queries;
  std::vector<std::string> alternative_skeletons;
};

struct SignalRule {
  std::string id;
  std::string signal;  // display text
  SignalMatcher matcher;
  SignalTarget target;
};

class RuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fills target.where_skeleton from target.skeleton_query.
void compile_target(SignalTarget& target);

// The ten rules of the two published signal tables.
const std::vector<SignalRule>& builtin_signal_rules();

// JSON array of {"id", "signal", "matcher": {"initial_words"|"phrase"|"word"},
// "target": {"verb"|"keyword"|"skeleton"}}.
std::vector<SignalRule> load_signal_rules(const std::filesystem::path& path);

// What the signal analyses need to know about one CQ.
struct CqEvidence {
  std::string cq_id;
  std::string ontology;
  std::string text;
  std::string pattern_text;  // candidate text; slots act as wildcards
  bool translated = false;
  sparql::QueryVerb verb = sparql::QueryVerb::Select;
  std::set<std::string> keywords;
  std::string signature_id;  // empty when the query was not grouped
  std::string where_skeleton;
};

// `pattern_text` maps cq id to candidate text.
std::vector<CqEvidence> collect_evidence(const Corpus& corpus, const std::vector<ParsedQuery>& parsed,
                                         const SignatureInventory& inventory,
                                         const std::map<std::string, std::string>& pattern_text);

bool matches(const SignalMatcher& matcher, const CqEvidence& cq);
bool satisfies(const SignalTarget& target, const CqEvidence& cq);

// Whitespace and punctuation tokenizer used by the matchers.
std::vector<std::string> signal_tokens(std::string_view text);
bool phrase_matches(std::string_view phrase, const std::vector<std::string>& tokens);

struct SignalResult {
  SignalRule rule;
  std::size_t numerator = 0;
  std::size_t denominator = 0;
  bool non_evidential = false;  // numerator <= 1
  std::vector<std::string> matched_cq_ids;
};

std::vector<SignalResult> mine_signals(const std::vector<CqEvidence>& evidence,
                                       const std::vector<SignalRule>& rules);

struct DiscoverOptions {
  std::size_t min_support = 2;
  std::size_t max_n = 6;
  std::set<std::string> stoplist;  // lowercase; empty means default_stoplist()
};

const std::set<std::string>& default_stoplist();
std::set<std::string> load_stoplist(const std::filesystem::path& path);

struct SignalCandidate {
  std::string ngram;
  std::size_t group_size = 0;
  std::size_t subgroup_size = 0;
  std::string signature_id;
  std::string skeleton;
  double ratio = 0.0;
};

// Throws RuleError when min_support < 2.
std::vector<SignalCandidate> discover_signals(const std::vector<CqEvidence>& evidence,
                                              const SignatureInventory& inventory,
                                              const DiscoverOptions& options = {});

}  // namespace cqkit

#endif  // CQKIT_CORRESPONDENCE_HPP_
