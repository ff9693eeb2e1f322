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

#include "cqkit/corpus.hpp"
#include "cqkit/signatures.hpp"
#include "cqkit/sparql/parser.hpp"

namespace cqkit {
namespace {

using sparql::parse_query;

sparql::PrefixTable prefixes() {
  auto t = sparql::standard_prefixes();
  t["awo"] = "http://www.meteck.org/teaching/ontologies/AfricanWildlifeOntology1.owl#";
  t["stuff"] = "http://www.meteck.org/files/ontologies/stuff.owl#";
  t["ex"] = "http://example.org/#";
  return t;
}

Signature sig(const std::string& q) { return canonicalize(parse_query(q, prefixes())); }

TEST(Signature, DomainIrisAbstracted) {
  Signature a = sig("SELECT ?x WHERE { ?x rdfs:subClassOf awo:plant }");
  Signature b = sig("SELECT ?y WHERE { ?y rdfs:subClassOf stuff:Stuff }");
  EXPECT_EQ(a.skeleton, b.skeleton);
  EXPECT_EQ(a.where_skeleton, "{ ?v1 rdfs:subClassOf :URI }");
  EXPECT_EQ(a.skeleton, "SELECT ... WHERE { ?v1 rdfs:subClassOf :URI }");
}

TEST(Signature, PlaceholderBecomesUri) {
  EXPECT_EQ(sig("ASK WHERE { $sw rdfs:subClassOf ex:C }").where_skeleton, "{ :URI rdfs:subClassOf :URI }");
}

TEST(Signature, LiteralsKeepDatatype) {
  Signature s = sig("SELECT * WHERE { ?x owl:cardinality \"2\"^^xsd:nonNegativeInteger }");
  EXPECT_NE(s.where_skeleton.find(":LIT^^xsd:nonNegativeInteger"), std::string::npos);
}

TEST(Signature, TripleOrdersAndBlankSwaps) {
  std::vector<std::string> triples = {"?x rdfs:subClassOf _:A", "_:A owl:onProperty ex:p",
                                      "_:B owl:someValuesFrom ?x", "_:B owl:onProperty _:A"};
  std::vector<std::size_t> order = {0, 1, 2, 3};
  std::set<std::string> seen;
  do {
    for (int swap = 0; swap < 2; ++swap) {
      std::string body;
      for (std::size_t i : order) body += (body.empty() ? "" : " . ") + triples[i];
      if (swap) {
        std::string tmp = body;
        std::size_t pos;
        while ((pos = tmp.find("_:A")) != std::string::npos) tmp.replace(pos, 3, "_:T");
        while ((pos = tmp.find("_:B")) != std::string::npos) tmp.replace(pos, 3, "_:A");
        while ((pos = tmp.find("_:T")) != std::string::npos) tmp.replace(pos, 3, "_:B");
        body = tmp;
      }
      seen.insert(sig("SELECT * WHERE { " + body + " }").skeleton);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_EQ(seen.size(), 1u);
}

TEST(Signature, FilterNormalization) {
  Signature a = sig("SELECT ?x WHERE { ?x rdfs:subClassOf ex:C . FILTER(?x != ex:C && ?x != owl:Nothing) }");
  Signature b = sig("SELECT ?x WHERE { ?x rdfs:subClassOf ex:D . FILTER(owl:Nothing != ?x && ex:D != ?x) }");
  EXPECT_EQ(a.skeleton, b.skeleton);
}

TEST(Signature, Sensitivity) {
  std::string body = "{ ?x rdfs:subClassOf [ owl:onProperty ex:p ; owl:someValuesFrom ex:C ] }";
  Signature base = sig("SELECT ?x WHERE " + body);
  EXPECT_NE(base.skeleton, sig("ASK WHERE " + body).skeleton);
  EXPECT_NE(base.skeleton, sig("SELECT DISTINCT ?x WHERE " + body).skeleton);
  EXPECT_NE(base.skeleton,
            sig("SELECT ?x WHERE { ?x rdfs:subClassOf [ owl:onProperty ex:p ; owl:allValuesFrom ex:C ] }").skeleton);
  EXPECT_NE(base.skeleton,
            sig("SELECT ?x WHERE { ?x rdfs:subClassOf [ owl:onProperty ex:p ; owl:hasValue ex:C ] }").skeleton);
  EXPECT_NE(base.skeleton,
            sig("SELECT ?x WHERE { ?x rdfs:subClassOf [ owl:onProperty ex:p ; owl:someValuesFrom ex:C ] "
                "FILTER NOT EXISTS { ?x a ex:D } }")
                .skeleton);
  EXPECT_NE(base.skeleton,
            sig("SELECT ?x WHERE { { ?x rdfs:subClassOf ex:C } UNION { ?x rdfs:subClassOf ex:D } }").skeleton);
}

TEST(Signature, SharedBlankListing) {
  // Two subclass-of-restriction branches sharing labeled blanks.
  const char* a =
      "SELECT * WHERE { ?x rdfs:subClassOf _:b2, [ owl:onProperty _:b3 ; owl:someValuesFrom ?w ] . "
      "?y rdfs:subClassOf _:b2, [ owl:onProperty _:b3 ; owl:someValuesFrom ?w ] . "
      "?w rdfs:subClassOf ?z FILTER ( ?w != ?z && ?x != ?y) }";
  const char* b =
      "SELECT * WHERE { ?q rdfs:subClassOf [ owl:someValuesFrom ?k ; owl:onProperty _:n ] , _:m . "
      "?k rdfs:subClassOf ?j . "
      "?p rdfs:subClassOf _:m, [ owl:onProperty _:n ; owl:someValuesFrom ?k ] "
      "FILTER ( ?q != ?p && ?j != ?k) }";
  Signature sa = sig(a), sb = sig(b);
  EXPECT_EQ(sa.skeleton, sb.skeleton);
  EXPECT_TRUE(sa.exact);
  EXPECT_NE(sa.where_skeleton.find("_:b1"), std::string::npos);
}

TEST(Signature, DeterministicAndBounded) {
  auto ast = parse_query("SELECT * WHERE { ?a ex:p ?b . ?b ex:p ?c . ?c ex:p ?a }", prefixes());
  EXPECT_EQ(canonicalize(ast).skeleton, canonicalize(ast).skeleton);
  CanonicalizeOptions opts;
  opts.max_triples = 2;
  EXPECT_THROW(canonicalize(ast, opts), SignatureError);
}

TEST(Inventory, SingleQuery) {
  ParsedQuery p;
  p.id = "q1";
  p.ast = parse_query("SELECT ?x WHERE { ?x a ex:C }", prefixes());
  auto inv = group_by_signature({p});
  ASSERT_EQ(inv.groups.size(), 1u);
  EXPECT_EQ(inv.groups[0].id, "S1");
  EXPECT_EQ(inv.groups[0].count, 1u);
  EXPECT_DOUBLE_EQ(inv.groups[0].cumulative_percent, 100.0);
  EXPECT_DOUBLE_EQ(inv.top_coverage(9), 100.0);
  EXPECT_EQ(inv.group_of("q1"), "S1");
  EXPECT_EQ(inv.group_of("q2"), "");
}

TEST(Inventory, PartitionAndSkips) {
  Corpus c = load_corpus(std::string(CQKIT_TEST_DATA) + "/examples.jsonl", CorpusFormat::Jsonl);
  auto parsed = parse_queries(c);
  auto inv = group_by_signature(parsed);
  std::size_t members = 0;
  std::set<std::string> ids;
  for (const auto& g : inv.groups) {
    EXPECT_EQ(g.count, g.signature.member_query_ids.size());
    members += g.count;
    for (const auto& id : g.signature.member_query_ids) EXPECT_TRUE(ids.insert(id).second) << id;
  }
  EXPECT_EQ(members, inv.total);
  EXPECT_EQ(members, 20u);
  for (std::size_t i = 1; i < inv.groups.size(); ++i)
    EXPECT_GE(inv.groups[i - 1].count, inv.groups[i].count);
  EXPECT_NEAR(inv.groups.back().cumulative_percent, 100.0, 1e-9);

  CanonicalizeOptions small;
  small.max_triples = 4;
  auto bounded = group_by_signature(parsed, small);
  EXPECT_FALSE(bounded.skipped.empty());
  EXPECT_EQ(bounded.total + bounded.skipped.size(), 20u);
}

}  // namespace
}  // namespace cqkit
