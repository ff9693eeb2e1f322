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

#include "cqkit/pipeline.hpp"

#include <map>

namespace cqkit {

ling::AnnotatedSentence annotate_cq(const CompetencyQuestion& cq, const PipelineConfig& config,
                                    const ling::ConlluStore* store) {
  std::vector<ling::TokenAnnotation> tokens;
  if (config.tagger == TaggerKind::Conllu) {
    if (!store) throw ling::AnnotationError("no CoNLL-U annotations loaded");
    tokens = store->annotate(cq.id, cq.text);
  } else {
    tokens = ling::annotate_builtin(cq.text);
  }
  return ling::analyze(cq.id, std::move(tokens));
}

void run_pattern_stages(const Corpus& corpus, const PipelineConfig& config, AnalysisResult& r) {
  std::optional<ling::ConlluStore> store;
  if (config.tagger == TaggerKind::Conllu) store = ling::ConlluStore::load(config.conllu_path);

  r.annotations.clear();
  r.candidates.clear();
  r.features.clear();
  for (const auto& q : corpus.questions) {
    CqAnnotation a;
    a.cq_id = q.id;
    try {
      a.sentence = annotate_cq(q, config, store ? &*store : nullptr);
      a.candidate = ling::to_pattern_candidate(*a.sentence);
    } catch (const ling::AnnotationError& e) {
      a.error = e.what();
    }
    if (auto it = config.overrides.find(q.id); it != config.overrides.end()) {
      a.candidate = it->second;
      a.overridden = true;
      a.error.clear();
    }
    if (!a.candidate.empty())
      r.candidates.push_back({q.id, q.ontology, q.dematerialized(), a.candidate, a.overridden});
    r.features.emplace_back(q.id, classify_cq(q.text));
    r.annotations.push_back(std::move(a));
  }

  r.filtered = filter_candidates(r.candidates);
  r.higher = higher_level_patterns(r.filtered.patterns);
  r.coverage = coverage_stats(corpus, r.candidates, r.filtered, r.higher);
  r.reuse_patterns = cross_set_reuse(r.filtered.patterns);
  r.reuse_higher = cross_set_reuse(r.higher);
  r.average_patterns = avg_cqs_per_pattern(corpus, r.filtered.patterns);
  r.average_higher = avg_cqs_per_pattern(corpus, r.higher);
}

void run_query_stages(const Corpus& corpus, const PipelineConfig& config, AnalysisResult& r) {
  r.parsed = parse_queries(corpus);
  r.translatability = translatability_report(corpus, r.parsed);
  r.keywords = sparql::keyword_report(corpus, r.parsed, config.keywords);
  r.signatures = group_by_signature(r.parsed, config.canonicalize);
}

AnalysisResult run_pipeline(const Corpus& corpus, const PipelineConfig& config) {
  AnalysisResult r;
  run_query_stages(corpus, config, r);
  run_pattern_stages(corpus, config, r);

  r.mapping = build_mapping(r.filtered.patterns, r.signatures);
  std::map<std::string, std::string> text_of;
  for (const auto& a : r.annotations)
    if (!a.candidate.empty()) text_of[a.cq_id] = a.candidate;
  r.evidence = collect_evidence(corpus, r.parsed, r.signatures, text_of);
  r.signals = mine_signals(r.evidence, config.rules);
  r.discovered = discover_signals(r.evidence, r.signatures, config.discover);
  return r;
}

}  // namespace cqkit
