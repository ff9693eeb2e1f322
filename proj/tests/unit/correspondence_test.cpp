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

#include <filesystem>
#include <fstream>

#include "cqkit/calibration.hpp"
#include "cqkit/correspondence.hpp"
#include "cqkit/sparql/parser.hpp"

namespace cqkit {
namespace {

sparql::PrefixTable prefixes() {
  auto t = sparql::standard_prefixes();
  t["ex"] = "http://example.org/#";
  return t;
}

ParsedQuery pq(std::string id, const std::string& text) {
  ParsedQuery p;
  p.id = std::move(id);
  p.ast = sparql::parse_query(text, prefixes());
  return p;
}

Pattern pat(std::string text, std::vector<std::string> support) {
  return {std::move(text), PatternLevel::Pattern, std::move(support), {"SWO"}};
}

const char* kShared =
    "SELECT * WHERE { ?x rdfs:subClassOf _:b2, [ owl:onProperty _:b3 ; owl:someValuesFrom ?w ] . "
    "?y rdfs:subClassOf _:b2, [ owl:onProperty _:b3 ; owl:someValuesFrom ?w ] . "
    "?w rdfs:subClassOf ?z FILTER ( ?w != ?z && ?x != ?y) }";
const char* kSharedRenamed =
    "SELECT * WHERE { ?a rdfs:subClassOf _:k, [ owl:onProperty _:p ; owl:someValuesFrom ?c ] . "
    "?b rdfs:subClassOf _:k, [ owl:onProperty _:p ; owl:someValuesFrom ?c ] . "
    "?c rdfs:subClassOf ?d FILTER ( ?a != ?b && ?c != ?d) }";

TEST(Mapping, TwoPatternsOneSignature) {
  auto inv = group_by_signature({pq("q1", kShared), pq("q2", kSharedRenamed)});
  ASSERT_EQ(inv.groups.size(), 1u);
  auto m = build_mapping({pat("What EC1 to EC2 are there", {"q1"}), pat("What are EC1 to EC2", {"q2"})}, inv);
  EXPECT_EQ(m.edges.size(), 2u);
  EXPECT_EQ(m.summary.signatures_with_multiple_patterns, 1u);
  EXPECT_EQ(m.summary.patterns_with_multiple_signatures, 0u);
  EXPECT_EQ(m.summary.signature_degree_histogram.at(2), 1u);
}

TEST(Mapping, OnePatternTwoSignatures) {
  auto inv = group_by_signature({pq("d1", "SELECT ?x WHERE { ex:Droid ex:input ?x }"),
                                 pq("d2", "SELECT ?x WHERE { ex:Droid rdfs:subClassOf [ owl:onProperty ex:input ; "
                                          "owl:someValuesFrom ?x ] }")});
  ASSERT_EQ(inv.groups.size(), 2u);
  auto m = build_mapping({pat("What is EC1 of EC2", {"d1", "d2"})}, inv);
  EXPECT_EQ(m.edges.size(), 2u);
  EXPECT_EQ(m.summary.patterns_with_multiple_signatures, 1u);
  EXPECT_EQ(m.summary.pattern_degree_histogram.at(2), 1u);
  for (const auto& e : m.edges) EXPECT_EQ(e.witness_cq_ids.size(), 1u);
}

TEST(Mapping, SingleEdgeAndUntranslated) {
  auto inv = group_by_signature({pq("q1", "SELECT ?x WHERE { ?x a ex:C }")});
  auto m = build_mapping({pat("What is EC1", {"q1", "q9"})}, inv);
  ASSERT_EQ(m.edges.size(), 1u);
  EXPECT_EQ(m.edges[0].witness_cq_ids, (std::vector<std::string>{"q1"}));
  EXPECT_EQ(m.summary.edges, 1u);
  EXPECT_EQ(m.summary.patterns, 1u);
  EXPECT_EQ(m.summary.signatures, 1u);
}

TEST(Phrase, SlotsWildcardsAndAlternatives) {
  auto toks = signal_tokens("What are the main types of EC1?");
  EXPECT_TRUE(phrase_matches("What are the main types of ...", toks));
  EXPECT_TRUE(phrase_matches("what ARE the main types of EC", toks));
  EXPECT_FALSE(phrase_matches("What are the possible types ...", toks));
  EXPECT_TRUE(phrase_matches("Which/what kind of ... is/are ...", signal_tokens("What kind of EC1 are EC2")));
  EXPECT_TRUE(phrase_matches("Which/what kind of ... is/are ...", signal_tokens("Which kind of EC1 is EC2")));
  EXPECT_FALSE(phrase_matches("Which/what kind of ... is/are ...", signal_tokens("What kind of EC1 PC1 EC2")));
  EXPECT_TRUE(phrase_matches("exactly NUM EC", signal_tokens("Which EC1 have as EC2 exactly two EC3")));
  EXPECT_TRUE(phrase_matches("exactly NUM EC", signal_tokens("Which EC1 PC1 exactly 3 EC2")));
  EXPECT_FALSE(phrase_matches("exactly NUM EC", signal_tokens("Which EC1 PC1 exactly EC2")));
  EXPECT_TRUE(phrase_matches("What types of … is/are …", signal_tokens("What types of EC1 are EC2")));
}

CqEvidence ev(std::string id, std::string text, bool translated, sparql::QueryVerb verb = sparql::QueryVerb::Select,
              std::set<std::string> keywords = {}) {
  CqEvidence e;
  e.cq_id = std::move(id);
  e.text = e.pattern_text = std::move(text);
  e.translated = translated;
  e.verb = verb;
  e.keywords = std::move(keywords);
  return e;
}

TEST(Matcher, WordsAreWholeTokens) {
  SignalMatcher m;
  m.kind = MatcherKind::ContainsWord;
  m.word = "or";
  EXPECT_TRUE(matches(m, ev("a", "Is it free or not?", true)));
  EXPECT_TRUE(matches(m, ev("a", "Is it free OR not?", true)));
  EXPECT_FALSE(matches(m, ev("a", "What is the input for the ordering?", true)));
  SignalMatcher init;
  init.kind = MatcherKind::InitialWordClass;
  init.words = {"which"};
  EXPECT_TRUE(matches(init, ev("a", "Which plants eat animals?", true)));
  EXPECT_FALSE(matches(init, ev("a", "Plants which eat animals?", true)));
}

TEST(Mine, DenominatorCountsTranslatedOnly) {
  std::vector<CqEvidence> e = {ev("1", "What is EC1?", true), ev("2", "Which EC1 PC1 EC2", true),
                               ev("3", "Who PC1 EC1", false), ev("4", "Is EC1 EC2?", true, sparql::QueryVerb::Ask),
                               ev("5", "Is EC1 EC2 or EC3?", true, sparql::QueryVerb::Select, {"owl:unionOf"}),
                               ev("6", "What EC1 or EC2", true)};
  auto results = mine_signals(e, builtin_signal_rules());
  std::map<std::string, SignalResult> by;
  for (const auto& r : results) by[r.rule.id] = r;
  EXPECT_EQ(by["wh-initial"].numerator, 3u);
  EXPECT_EQ(by["wh-initial"].denominator, 3u);
  EXPECT_EQ(by["yes-no-initial"].numerator, 1u);
  EXPECT_EQ(by["yes-no-initial"].denominator, 2u);
  EXPECT_TRUE(by["yes-no-initial"].non_evidential);
  EXPECT_EQ(by["or-union"].numerator, 1u);
  EXPECT_EQ(by["or-union"].denominator, 2u);
  for (const auto& r : results) EXPECT_LE(r.numerator, r.denominator);
}

TEST(Rules, BuiltinsCompileAndMatchReferenceIds) {
  const auto& rules = builtin_signal_rules();
  ASSERT_EQ(rules.size(), reference::signals().size());
  for (std::size_t i = 0; i < rules.size(); ++i) {
    EXPECT_EQ(rules[i].id, reference::signals()[i].rule_id);
    if (rules[i].target.kind == TargetKind::SignatureSkeleton) {
      EXPECT_FALSE(rules[i].target.where_skeleton.empty()) << rules[i].id;
      EXPECT_EQ(rules[i].target.where_skeleton.find("?x"), std::string::npos) << rules[i].id;
    }
  }
}

TEST(Rules, SkeletonTargetMatchesCanonicalQuery) {
  const SignalRule* main_types = nullptr;
  for (const auto& r : builtin_signal_rules())
    if (r.id == "main-types") main_types = &r;
  ASSERT_NE(main_types, nullptr);
  auto q = pq("m", "SELECT ?c WHERE { ?c rdfs:subClassOf ex:Entity . FILTER NOT EXISTS { ?c rdfs:subClassOf ?d . "
                   "?d rdfs:subClassOf ex:Entity } FILTER(?c != ex:Entity && ?c != owl:Nothing) }");
  EXPECT_EQ(canonicalize(*q.ast).where_skeleton, main_types->target.where_skeleton);
  CqEvidence e;
  e.translated = true;
  auto nested = pq("n", "SELECT ?x WHERE { ?x rdfs:subClassOf ex:Entity . FILTER NOT EXISTS { ?x rdfs:subClassOf ?y . "
                        "?y rdfs:subClassOf ex:Entity . FILTER(?y != ex:Entity && ?x != ?y) } "
                        "FILTER(?x != ex:Entity && ?x != owl:Nothing) }");
  e.where_skeleton = canonicalize(*nested.ast).where_skeleton;
  EXPECT_TRUE(satisfies(main_types->target, e));
  e.where_skeleton = canonicalize(*q.ast).where_skeleton;
  EXPECT_TRUE(satisfies(main_types->target, e));
  e.where_skeleton = "{ ?v1 a :URI }";
  EXPECT_FALSE(satisfies(main_types->target, e));
}

TEST(Rules, LoadFromJson) {
  auto dir = std::filesystem::temp_directory_path() / "cqkit_rules_test";
  std::filesystem::create_directories(dir);
  auto good = dir / "rules.json";
  std::ofstream(good) << R"([
    {"id": "w", "matcher": {"initial_words": ["Which"]}, "target": {"verb": "SELECT"}},
    {"id": "p", "matcher": {"phrase": "What is EC"}, "target": {"skeleton": "{ ?x a :URI }"}},
    {"id": "k", "signal": "not", "matcher": {"word": "Not"}, "target": {"keyword": "owl:complementOf"}},
    {"id": "m", "matcher": {"word": "a"}, "target": {"skeleton": ["{ ?x a :URI }", "{ ?y a :URI }", "{ ?x a owl:Class }"]}}
  ])";
  auto rules = load_signal_rules(good);
  ASSERT_EQ(rules.size(), 4u);
  EXPECT_EQ(rules[3].target.alternative_skeletons, (std::vector<std::string>{"{ ?v1 a owl:Class }"}));
  EXPECT_EQ(rules[0].matcher.kind, MatcherKind::InitialWordClass);
  EXPECT_TRUE(rules[0].matcher.words.count("which"));
  EXPECT_EQ(rules[1].target.where_skeleton, "{ ?v1 a :URI }");
  EXPECT_EQ(rules[2].matcher.word, "not");
  EXPECT_EQ(rules[2].signal, "not");

  auto bad_verb = dir / "bad_verb.json";
  std::ofstream(bad_verb) << R"([{"id": "x", "matcher": {"word": "a"}, "target": {"verb": "CONSTRUCT"}}])";
  EXPECT_THROW(load_signal_rules(bad_verb), RuleError);
  auto bad_json = dir / "bad.json";
  std::ofstream(bad_json) << "[{";
  EXPECT_THROW(load_signal_rules(bad_json), RuleError);
  auto bad_skel = dir / "bad_skel.json";
  std::ofstream(bad_skel) << R"([{"id": "x", "matcher": {"word": "a"}, "target": {"skeleton": "{ ?x"}}])";
  EXPECT_THROW(load_signal_rules(bad_skel), RuleError);
  EXPECT_THROW(load_signal_rules(dir / "absent.json"), RuleError);
  std::filesystem::remove_all(dir);
}

TEST(Discover, SubgroupsStoplistAndDeterminism) {
  auto inv = group_by_signature({pq("a", "SELECT ?x WHERE { ?x rdfs:subClassOf ex:A }"),
                                 pq("b", "SELECT ?x WHERE { ?x rdfs:subClassOf ex:B }"),
                                 pq("c", "SELECT ?x WHERE { ?x rdfs:subClassOf ex:C }"),
                                 pq("d", "ASK WHERE { ex:D rdfs:subClassOf ex:E }")});
  std::vector<CqEvidence> e;
  for (const auto& [id, text] : std::vector<std::pair<std::string, std::string>>{
           {"a", "What are the possible types of EC1"},
           {"b", "What are the possible types of EC1 in EC2"},
           {"c", "What are the possible types of EC1"},
           {"d", "Is EC1 the EC2"}}) {
    CqEvidence x = ev(id, text, true);
    x.signature_id = inv.group_of(id);
    e.push_back(x);
  }
  DiscoverOptions opts;
  auto out = discover_signals(e, inv, opts);
  ASSERT_FALSE(out.empty());
  bool found = false;
  for (const auto& c : out) {
    EXPECT_NE(c.ngram, "the");
    EXPECT_GE(c.subgroup_size, 2u);
    EXPECT_LE(c.subgroup_size, c.group_size);
    if (c.ngram == "possible types") {
      found = true;
      EXPECT_EQ(c.subgroup_size, 3u);
      EXPECT_DOUBLE_EQ(c.ratio, 1.0);
    }
  }
  EXPECT_TRUE(found);
  auto again = discover_signals(e, inv, opts);
  ASSERT_EQ(again.size(), out.size());
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(again[i].ngram, out[i].ngram);
  for (std::size_t i = 1; i < out.size(); ++i) EXPECT_GE(out[i - 1].ratio, out[i].ratio);
  opts.min_support = 1;
  EXPECT_THROW(discover_signals(e, inv, opts), RuleError);
}

TEST(Stoplist, DefaultAndFile) {
  EXPECT_TRUE(default_stoplist().count("the"));
  auto path = std::filesystem::temp_directory_path() / "cqkit_stoplist.txt";
  std::ofstream(path) << "The\n\n  of \n";
  auto s = load_stoplist(path);
  EXPECT_EQ(s, (std::set<std::string>{"the", "of"}));
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace cqkit
