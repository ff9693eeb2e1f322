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

#ifndef CQKIT_PIPELINE_HPP_
#define CQKIT_PIPELINE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cqkit/corpus.hpp"
#include "cqkit/correspondence.hpp"
#include "cqkit/linguistics.hpp"
#include "cqkit/patterns.hpp"
#include "cqkit/signatures.hpp"
#include "cqkit/sparql/keywords.hpp"

namespace cqkit {

enum class TaggerKind { Builtin, Conllu };

struct PipelineConfig {
  TaggerKind tagger = TaggerKind::Builtin;
  std::filesystem::path conllu_path;  // file or directory
  ling::Overrides overrides;
  CanonicalizeOptions canonicalize;
  std::vector<SignalRule> rules = builtin_signal_rules();
  std::vector<sparql::KeywordSpec> keywords = sparql::default_keywords();
  DiscoverOptions discover;
};

struct CqAnnotation {
  std::string cq_id;
  std::optional<ling::AnnotatedSentence> sentence;
  std::string candidate;  // empty on failure
  bool overridden = false;
  std::string error;
};

struct AnalysisResult {
  std::vector<ParsedQuery> parsed;
  TranslatabilityReport translatability;
  sparql::KeywordReport keywords;

  std::vector<CqAnnotation> annotations;  // corpus order
  std::vector<Candidate> candidates;
  FilterResult filtered;
  std::vector<Pattern> higher;
  std::vector<CoverageRow> coverage;
  std::vector<ReuseRow> reuse_patterns;
  std::vector<ReuseRow> reuse_higher;
  std::vector<AverageRow> average_patterns;
  std::vector<AverageRow> average_higher;
  std::vector<std::pair<std::string, CqFeatures>> features;

  SignatureInventory signatures;
  Mapping mapping;
  std::vector<CqEvidence> evidence;
  std::vector<SignalResult> signals;
  std::vector<SignalCandidate> discovered;
};

// Annotation for one CQ under the configured tagger. Throws AnnotationError.
ling::AnnotatedSentence annotate_cq(const CompetencyQuestion& cq, const PipelineConfig& config,
                                    const ling::ConlluStore* store);

// Runs every stage. Per-CQ annotation failures are recorded, not thrown.
AnalysisResult run_pipeline(const Corpus& corpus, const PipelineConfig& config);

// Only the linguistic half (annotation, candidates, patterns, coverage).
void run_pattern_stages(const Corpus& corpus, const PipelineConfig& config, AnalysisResult& result);

// Only the query half (parse, translatability, keywords, signatures).
void run_query_stages(const Corpus& corpus, const PipelineConfig& config, AnalysisResult& result);

}  // namespace cqkit

#endif  // CQKIT_PIPELINE_HPP_
