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

#include <regex>
#include <set>

#include "cqkit/calibration.hpp"
#include "cqkit/corpus.hpp"
#include "cqkit/linguistics.hpp"
#include "cqkit/text.hpp"

namespace cqkit::ling {
namespace {

AnnotatedSentence run(const std::string& text) { return analyze("t", annotate_builtin(text)); }
std::string candidate(const std::string& text) { return to_pattern_candidate(run(text)); }

std::vector<std::string> surfaces(const std::vector<TokenAnnotation>& toks) {
  std::vector<std::string> out;
  for (const auto& t : toks) out.push_back(t.surface);
  return out;
}

TEST(Tokenize, PlaceholdersCliticsAndQuotes) {
  EXPECT_EQ(surfaces(tokenize("Is [this animal] a herbivore?")),
            (std::vector<std::string>{"Is", "[this animal]", "a", "herbivore", "?"}));
  EXPECT_EQ(surfaces(tokenize("Where's the list of \"algorithms\"?")),
            (std::vector<std::string>{"Where", "'s", "the", "list", "of", "algorithms", "?"}));
  EXPECT_EQ(surfaces(tokenize("Why don't state-of-the-art tools read .cel files?")),
            (std::vector<std::string>{"Why", "do", "n't", "state-of-the-art", "tools", "read", ".cel", "files",
                                      "?"}));
  auto t = tokenize("A, b");
  EXPECT_FALSE(t[0].space_after);
  EXPECT_TRUE(t[1].space_after);
  EXPECT_FALSE(t[2].space_after);
}

TEST(Tagger, Awo6Tags) {
  auto toks = annotate_builtin("Which plants eat animals?");
  ASSERT_EQ(toks.size(), 5u);
  EXPECT_EQ(toks[0].pos, Pos::PRON);
  EXPECT_EQ(toks[1].pos, Pos::NOUN);
  EXPECT_EQ(toks[2].pos, Pos::VERB);
  EXPECT_EQ(toks[3].pos, Pos::NOUN);
  EXPECT_EQ(toks[4].pos, Pos::PUNCT);
  EXPECT_EQ(toks[2].head, 2);
}

TEST(Tagger, Awo4AuxLink) {
  auto toks = annotate_builtin("Does a lion eat plants or plant parts?");
  EXPECT_EQ(toks[0].pos, Pos::AUX);
  EXPECT_EQ(toks[0].deprel, "aux");
  EXPECT_EQ(toks[0].head, 3);
  EXPECT_EQ(toks[3].pos, Pos::VERB);
}

TEST(Tagger, AuxCopulaAndLightVerbAttachment) {
  auto toks = annotate_builtin("Does [this animal] have legs?");
  EXPECT_EQ(toks[0].pos, Pos::AUX);
  EXPECT_EQ(toks[0].head, 2);
  EXPECT_EQ(to_pattern_candidate(analyze("t", toks)), "Does EC1 have EC2");
  auto trailing = annotate_builtin("What inputs does [this software] have?");
  EXPECT_EQ(to_pattern_candidate(analyze("t", trailing)), "What EC1 does EC2 have");
  auto copula = annotate_builtin("Is [this animal] a herbivore?");
  EXPECT_NE(copula[0].deprel, "aux");
  auto light = annotate_builtin("Which stuffs have parts?");
  EXPECT_EQ(light[2].pos, Pos::VERB);
}

TEST(Tagger, EmptyInputIsAnError) {
  EXPECT_THROW(annotate_builtin(""), AnnotationError);
  EXPECT_THROW(annotate_builtin("   "), AnnotationError);
}

TEST(Tagger, SingleRootAndHeadsInRange) {
  Corpus c = load_corpus(std::string(CQKIT_TEST_DATA) + "/examples.jsonl", CorpusFormat::Jsonl);
  for (const auto& q : c.questions) {
    auto toks = annotate_builtin(q.text);
    int roots = 0;
    for (const auto& t : toks) {
      ASSERT_GE(t.head, 0) << q.id;
      ASSERT_LT(t.head, static_cast<int>(toks.size())) << q.id;
      if (t.head == t.index) ++roots;
      if (t.deprel == "aux") {
        EXPECT_EQ(t.pos, Pos::AUX) << q.id;
        EXPECT_EQ(toks[t.head].pos, Pos::VERB) << q.id;
      }
    }
    EXPECT_EQ(roots, 1) << q.id;
  }
}

TEST(Chunks, Awo6) {
  auto s = run("Which plants eat animals?");
  ASSERT_EQ(s.chunks.size(), 3u);
  EXPECT_EQ(s.chunks[0].kind, ChunkKind::EC);
  EXPECT_EQ(s.chunks[0].surface_text, "plants");
  EXPECT_EQ(s.chunks[1].kind, ChunkKind::PC);
  EXPECT_EQ(s.chunks[1].surface_text, "eat");
  EXPECT_EQ(s.chunks[2].surface_text, "animals");
}

TEST(Chunks, Awo4DiscontinuousPc) {
  auto s = run("Does a lion eat plants or plant parts?");
  const Chunk* pc = nullptr;
  std::vector<std::string> ecs;
  for (const auto& c : s.chunks) {
    if (c.kind == ChunkKind::PC) pc = &c;
    else ecs.push_back(c.surface_text);
  }
  ASSERT_NE(pc, nullptr);
  EXPECT_EQ(pc->spans, (std::vector<TokenRange>{{0, 1}, {3, 4}}));
  EXPECT_EQ(ecs, (std::vector<std::string>{"a lion", "plants", "plant parts"}));
}

TEST(Chunks, DemCare51PcWithPreposition) {
  auto s = run("What data are measured for neuromuscular impairment in speech production mechanism?");
  std::vector<std::string> got;
  for (const auto& c : s.chunks) got.push_back(c.surface_text);
  EXPECT_EQ(got, (std::vector<std::string>{"data", "are measured for", "neuromuscular impairment",
                                           "speech production mechanism"}));
}

TEST(Candidate, WorkedExamples) {
  for (const auto& ex : reference::chunking_examples()) EXPECT_EQ(candidate(ex.text), ex.pattern) << ex.cq_id;
}

TEST(Candidate, MoreShapes) {
  EXPECT_EQ(candidate("[X]?"), "EC1");
  EXPECT_EQ(candidate("Are there any animals for carnivores?"), "Are there any EC1 for EC2");
  EXPECT_EQ(candidate("Which are the parts of [a plant]?"), "Which are EC1 of EC2");
  EXPECT_EQ(candidate("Where can I find a tutorial of [this software]?"), "Where PC1 I PC1 EC1 of EC2");
  EXPECT_EQ(candidate("How long has [this software] been used?"), "How long PC1 EC1 PC1");
  EXPECT_EQ(candidate("How long has [this software] been around?"), "How long PC1 EC1 PC1");
  EXPECT_EQ(candidate("Which stuffs have as part exactly two substuffs?"), "Which EC1 have as EC2 exactly two EC3");
  EXPECT_EQ(candidate("What software can read a .cel file?"), "What EC1 PC1 EC2");
  EXPECT_EQ(candidate("Where's the homepage of [this software]?"), "Where's EC1 of EC2");
}

// Properties over the fixture corpus.

TEST(ChunkProperties, SpansSoundAndOrdinalsDense) {
  Corpus c = load_corpus(std::string(CQKIT_TEST_DATA) + "/examples.jsonl", CorpusFormat::Jsonl);
  std::regex slot("(EC|PC)([0-9]+)");
  for (const auto& q : c.questions) {
    auto s = run(q.text);
    std::vector<int> owner(s.tokens.size(), -1);
    std::map<ChunkKind, int> max_ord;
    for (std::size_t k = 0; k < s.chunks.size(); ++k) {
      const auto& ch = s.chunks[k];
      if (ch.kind == ChunkKind::EC) {
        EXPECT_EQ(ch.spans.size(), 1u) << q.id;
      }
      for (const auto& r : ch.spans) {
        ASSERT_GE(r.begin, 0);
        ASSERT_LE(r.end, static_cast<int>(s.tokens.size()));
        ASSERT_LT(r.begin, r.end);
        for (int i = r.begin; i < r.end; ++i) {
          EXPECT_EQ(owner[i], -1) << q.id << " overlapping chunks at token " << i;
          owner[i] = static_cast<int>(k);
        }
      }
      EXPECT_EQ(ch.ordinal, max_ord[ch.kind] + 1) << q.id;
      max_ord[ch.kind] = ch.ordinal;
    }
    // Chunk surfaces interleaved with the uncovered tokens give back the tokens.
    std::vector<std::string> rebuilt;
    std::set<int> done;
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (owner[i] < 0) {
        rebuilt.push_back(s.tokens[i].surface);
      } else if (done.insert(owner[i]).second) {
        for (const auto& w : text::split_ws(s.chunks[owner[i]].surface_text)) rebuilt.push_back(w);
      }
    }
    std::vector<std::string> original;
    for (std::size_t i = 0; i < s.tokens.size(); ++i)
      if (owner[i] < 0) original.push_back(s.tokens[i].surface);
      else
        for (const auto& w : text::split_ws(s.tokens[i].surface)) original.push_back(w);
    std::vector<std::string> sorted_a = rebuilt, sorted_b = original;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    EXPECT_EQ(sorted_a, sorted_b) << q.id;

    std::string cand = to_pattern_candidate(s);
    std::map<std::string, std::set<int>> seen;
    for (std::sregex_iterator it(cand.begin(), cand.end(), slot), end; it != end; ++it)
      seen[(*it)[1]].insert(std::stoi((*it)[2]));
    for (const auto& [kind, ords] : seen) {
      EXPECT_EQ(*ords.rbegin(), static_cast<int>(ords.size())) << q.id << ": " << cand;
    }
  }
}

TEST(ChunkProperties, Deterministic) {
  auto toks = annotate_builtin("What data are measured for neuromuscular impairment in speech production mechanism?");
  EXPECT_EQ(identify_chunks(toks), identify_chunks(toks));
  EXPECT_EQ(annotate_builtin("Which plants eat animals?"), annotate_builtin("Which plants eat animals?"));
}

TEST(ChunkProperties, MaterializationCoherence) {
  Corpus c = load_corpus(std::string(CQKIT_TEST_DATA) + "/examples.jsonl", CorpusFormat::Jsonl);
  const std::vector<std::string> fillers = {"Weka", "lion", "water"};
  std::size_t checked = 0;
  for (const auto& q : c.questions) {
    if (!q.dematerialized()) continue;
    std::string base = candidate(q.text);
    for (const auto& f : fillers) {
      std::string t = q.text;
      for (auto it = q.placeholders.rbegin(); it != q.placeholders.rend(); ++it)
        t.replace(it->begin, it->end - it->begin, f);
      EXPECT_EQ(candidate(t), base) << q.id << " with " << f;
      ++checked;
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(Overrides, LoadsObject) {
  auto o = load_overrides(std::string(CQKIT_TEST_DATA) + "/overrides.json");
  ASSERT_EQ(o.size(), 1u);
  EXPECT_EQ(o.at("awo_2"), "Which EC1 PC1 EC2");
  EXPECT_THROW(load_overrides(std::string(CQKIT_TEST_DATA) + "/absent.json"), AnnotationError);
}

}  // namespace
}  // namespace cqkit::ling
