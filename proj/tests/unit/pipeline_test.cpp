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


#include <gtest/gtest.h>

#include <algorithm>

#include "cqkit/pipeline.hpp"
#include "cqkit/reports.hpp"

namespace cqkit {
namespace {

using namespace reports;

const std::filesystem::path kData = CQKIT_TEST_DATA;

const AnalysisResult& fixture_result() {
  static const AnalysisResult r = [] {
    auto corpus = load_corpus(kData / "examples.jsonl", CorpusFormat::Jsonl);
    return run_pipeline(corpus, PipelineConfig{});
  }();
  return r;
}

TEST(Pipeline, FixtureStages) {
  const auto& r = fixture_result();
  EXPECT_EQ(r.annotations.size(), 34u);
  EXPECT_EQ(r.features.size(), 34u);
  EXPECT_EQ(r.parsed.size(), 20u);
  EXPECT_EQ(r.translatability.rows.back().translated_count, 20u);
  EXPECT_EQ(r.signatures.total, 20u);
  EXPECT_EQ(r.evidence.size(), 34u);
  EXPECT_EQ(r.signals.size(), builtin_signal_rules().size());
  for (const auto& a : r.annotations) {
    EXPECT_TRUE(a.error.empty()) << a.cq_id << ": " << a.error;
    EXPECT_FALSE(a.candidate.empty()) << a.cq_id;
  }
  EXPECT_EQ(r.candidates.size(), 34u);
  EXPECT_EQ(r.filtered.accepted.size() + r.filtered.rejected.size(), r.candidates.size());
  ASSERT_FALSE(r.coverage.empty());
  EXPECT_EQ(r.coverage.back().ontology, "Total");
  EXPECT_EQ(r.coverage.back().candidates, 34u);
}

TEST(Pipeline, MappingEdgesAreWitnessed) {
  const auto& r = fixture_result();
  std::map<std::string, const Pattern*> by_text;
  for (const auto& p : r.filtered.patterns) by_text[p.text] = &p;
  for (const auto& p : r.higher) by_text.emplace(p.text, &p);
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : r.mapping.edges) {
    EXPECT_TRUE(seen.insert({e.pattern_text, e.signature_id}).second);
    ASSERT_TRUE(by_text.count(e.pattern_text)) << e.pattern_text;
    ASSERT_FALSE(e.witness_cq_ids.empty());
    for (const auto& id : e.witness_cq_ids) {
      const auto& sup = by_text[e.pattern_text]->support;
      EXPECT_NE(std::find(sup.begin(), sup.end(), id), sup.end()) << id;
      EXPECT_EQ(r.signatures.group_of(id), e.signature_id);
    }
  }
}

TEST(Pipeline, SignalsCountTranslatedOnly) {
  const auto& r = fixture_result();
  for (const auto& s : r.signals) {
    EXPECT_LE(s.numerator, s.denominator);
    EXPECT_LE(s.denominator, 20u);
    EXPECT_EQ(s.matched_cq_ids.size(), s.denominator);
  }
}

TEST(Pipeline, ReportTablesHaveRows) {
  auto corpus = load_corpus(kData / "examples.jsonl", CorpusFormat::Jsonl);
  const auto& r = fixture_result();
  std::vector<Table> tables = {translatability_table(r.translatability),
                               keyword_table(r.keywords),
                               candidates_table(corpus, r.annotations),
                               patterns_table(r.filtered.patterns),
                               coverage_table(r.coverage),
                               reuse_table(r.reuse_patterns, PatternLevel::Pattern),
                               average_table(r.average_patterns, r.average_higher),
                               features_table(r.features),
                               features_summary_table(r.features),
                               signatures_table(r.signatures),
                               signature_members_table(r.signatures),
                               mapping_edges_table(r.mapping),
                               mapping_summary_table(r.mapping),
                               signals_table(r.signals)};
  for (const auto& t : tables) {
    EXPECT_FALSE(t.title.empty());
    EXPECT_FALSE(t.columns.empty()) << t.title;
    EXPECT_FALSE(t.rows.empty()) << t.title;
    for (const auto& row : t.rows) EXPECT_EQ(row.size(), t.columns.size()) << t.title;
  }
}

TEST(Pipeline, OverridesReplaceCandidate) {
  auto corpus = load_corpus(kData / "examples.jsonl", CorpusFormat::Jsonl);
  PipelineConfig config;
  config.overrides = ling::load_overrides(kData / "overrides.json");
  AnalysisResult r;
  run_pattern_stages(corpus, config, r);
  auto it = std::find_if(r.annotations.begin(), r.annotations.end(),
                         [](const CqAnnotation& a) { return a.cq_id == "awo_2"; });
  ASSERT_NE(it, r.annotations.end());
  EXPECT_TRUE(it->overridden);
  EXPECT_EQ(it->candidate, "Which EC1 PC1 EC2");
  EXPECT_EQ(r.signatures.total, 0u);
}

TEST(Pipeline, ConlluTagger) {
  auto corpus = load_corpus(kData / "conllu_corpus.jsonl", CorpusFormat::Jsonl);
  PipelineConfig config;
  config.tagger = TaggerKind::Conllu;
  config.conllu_path = kData / "sample.conllu";
  auto r = run_pipeline(corpus, config);
  ASSERT_EQ(r.annotations.size(), 1u);
  EXPECT_TRUE(r.annotations[0].error.empty()) << r.annotations[0].error;
  EXPECT_EQ(r.annotations[0].candidate, "What EC1 PC1 EC2 PC1");
}

TEST(Pipeline, ConlluMissingSentenceIsRecorded) {
  auto corpus = load_corpus(kData / "examples.jsonl", CorpusFormat::Jsonl);
  PipelineConfig config;
  config.tagger = TaggerKind::Conllu;
  config.conllu_path = kData / "sample.conllu";
  AnalysisResult r;
  run_pattern_stages(corpus, config, r);
  ASSERT_EQ(r.annotations.size(), corpus.questions.size());
  std::size_t failed = 0;
  for (const auto& a : r.annotations)
    if (!a.error.empty()) ++failed;
  EXPECT_EQ(failed, corpus.questions.size() - 1);
  auto it = std::find_if(r.annotations.begin(), r.annotations.end(),
                         [](const CqAnnotation& a) { return a.cq_id == "swo82"; });
  ASSERT_NE(it, r.annotations.end());
  EXPECT_TRUE(it->error.empty());
}

}  // namespace
}  // namespace cqkit
