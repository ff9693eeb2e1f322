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

#include "cqkit/corpus.hpp"
#include "cqkit/sparql/keywords.hpp"
#include "cqkit/sparql/parser.hpp"

namespace cqkit::sparql {
namespace {

const std::string kData = CQKIT_TEST_DATA;

const char* kAwo6 =
    "SELECT DISTINCT ?eats WHERE { ?eats rdfs:subClassOf awo:plant, [ a owl:Restriction ; "
    "owl:onProperty awo:eats; owl:someValuesFrom awo:animal ] . FILTER(?eats != owl:Nothing) }";

PrefixTable awo_prefixes() {
  PrefixTable t = standard_prefixes();
  t["awo"] = "http://www.meteck.org/teaching/ontologies/AfricanWildlifeOntology1.owl#";
  return t;
}

TEST(Parser, Awo6Structure) {
  QueryAst q = parse_query(kAwo6, awo_prefixes());
  EXPECT_EQ(q.verb, QueryVerb::Select);
  EXPECT_TRUE(q.distinct);
  EXPECT_FALSE(q.star);
  ASSERT_EQ(q.projection.size(), 1u);
  EXPECT_EQ(q.projection[0].name, "eats");

  const auto& group = std::get<Group>(q.where.node);
  ASSERT_EQ(group.elements.size(), 2u);
  const auto& bgp = std::get<Bgp>(group.elements[0].node);
  ASSERT_EQ(bgp.triples.size(), 1u);
  ASSERT_EQ(bgp.triples[0].predicates.size(), 1u);
  const auto& objects = bgp.triples[0].predicates[0].objects;
  ASSERT_EQ(objects.size(), 2u);
  const auto& nested = std::get<Box<BlankPropertyList>>(objects[1]);
  EXPECT_EQ(nested->entries.size(), 3u);
  EXPECT_TRUE(std::holds_alternative<Filter>(group.elements[1].node));
  EXPECT_EQ(count_atomic_triples(q.where), 5u);
}

TEST(Parser, AskPlaceholderAndCollection) {
  QueryAst q = parse_query(
      "ASK WHERE { $sw rdfs:subClassOf [ owl:intersectionOf ( ex:a [ owl:onProperty ex:p ] ) ] }",
      {{"ex", "http://example.org/#"}, {"rdfs", std::string(kRdfsNs)}, {"owl", std::string(kOwlNs)}});
  EXPECT_EQ(q.verb, QueryVerb::Ask);
  EXPECT_TRUE(q.projection.empty());
  const auto& bgp = std::get<Bgp>(std::get<Group>(q.where.node).elements[0].node);
  const auto& subject = std::get<Term>(bgp.triples[0].subject);
  EXPECT_EQ(std::get<Variable>(subject).marker, VarMarker::Placeholder);
}

TEST(Parser, CommentsPathsAndBind) {
  QueryAst q = parse_query(
      "SELECT ?r WHERE {\n"
      "  # a comment\n"
      "  ?c owl:unionOf/rdf:rest*/rdf:first ?d .\n"
      "  ?c ex:date ?date\n"
      "  BIND(now() - xsd:dateTime(?date) AS ?r)\n"
      "}",
      [] {
        PrefixTable t = standard_prefixes();
        t["ex"] = "http://example.org/#";
        return t;
      }());
  auto& elements = std::get<Group>(q.where.node).elements;
  ASSERT_EQ(elements.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<Bind>(elements[1].node));
  const auto& path = std::get<Bgp>(elements[0].node).triples[0].predicates[0].verb;
  ASSERT_TRUE(std::holds_alternative<PathSequence>(path.node));
  EXPECT_EQ(std::get<PathSequence>(path.node).steps.size(), 3u);
}

TEST(Parser, PrefixDeclarationsOverlay) {
  QueryAst q = parse_query("PREFIX ex: <http://other.org/> SELECT * WHERE { ?x a ex:C }",
                           {{"ex", "http://example.org/#"}});
  EXPECT_EQ(q.prefix_table.at("ex"), "http://other.org/");
  ASSERT_EQ(q.declared_prefixes.size(), 1u);
  EXPECT_TRUE(q.star);
}

TEST(Parser, ErrorsAreReportedNotSkipped) {
  EXPECT_THROW(parse_query("SELECT ?x WHERE { ?x"), ParseError);
  EXPECT_THROW(parse_query("SELECT ?x WHERE { ?x a ?y } ORDER BY ?x"), ParseError);
  EXPECT_THROW(parse_query("SELECT ?x WHERE { OPTIONAL { ?x a ?y } }"), ParseError);
  EXPECT_THROW(parse_query("SELECT ?x WHERE { ?x a \"unterminated }"), ParseError);
  try {
    parse_query("SELECT ?x WHERE {\n ?x ?p }");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::Grammar);
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Parser, UnresolvedPrefixWhenResolving) {
  ParseOptions opts;
  opts.resolve_prefixes = true;
  try {
    parse_query("SELECT ?x WHERE { ?x a nope:C }", standard_prefixes(), opts);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::UnresolvedPrefix);
  }
  EXPECT_NO_THROW(parse_query("SELECT ?x WHERE { ?x a nope:C }", standard_prefixes()));
}

TEST(Parser, RoundTripOverFixtureQueries) {
  Corpus c = load_corpus(kData + "/examples.jsonl", CorpusFormat::Jsonl);
  std::size_t n = 0;
  for (const auto& p : parse_queries(c)) {
    ASSERT_TRUE(p.ast) << p.id << ": " << p.error;
    std::string text = serialize_query(*p.ast);
    QueryAst again = parse_query(text, p.ast->prefix_table);
    again.prefix_table = p.ast->prefix_table;
    EXPECT_EQ(again, *p.ast) << p.id << "\n" << text;
    EXPECT_EQ(serialize_query(again), text) << p.id;
    ++n;
  }
  EXPECT_EQ(n, 20u);
}

TEST(Parser, ResolveIri) {
  PrefixTable t = awo_prefixes();
  EXPECT_EQ(resolve_iri(PrefixedName{"owl", "Nothing"}, t), std::string(kOwlNs) + "Nothing");
  EXPECT_EQ(resolve_iri(KeywordA{}, t), std::string(kRdfNs) + "type");
  EXPECT_FALSE(resolve_iri(Variable{"x"}, t).has_value());
  EXPECT_FALSE(resolve_iri(PrefixedName{"zz", "a"}, t).has_value());
}

TEST(Keywords, Awo6Presence) {
  auto present = keyword_presence(parse_query(kAwo6, awo_prefixes()));
  std::set<std::string> expected = {"WHERE",           "SELECT",        "DISTINCT",
                                    "rdfs:subClassOf", "rdf:type / a",  "owl:Restriction",
                                    "owl:onProperty",  "owl:someValuesFrom", "FILTER",
                                    "owl:Nothing"};
  EXPECT_EQ(present, expected);
}

TEST(Keywords, MatchingUsesResolvedIris) {
  const char* a = "SELECT * WHERE { ?x <http://www.w3.org/2002/07/owl#hasValue> ?y }";
  const char* b = "PREFIX o: <http://www.w3.org/2002/07/owl#> SELECT * WHERE { ?x o:hasValue ?y }";
  EXPECT_EQ(keyword_presence(parse_query(a)), keyword_presence(parse_query(b)));
  EXPECT_TRUE(keyword_presence(parse_query(a)).count("owl:hasValue"));
}

TEST(Keywords, NotExistsAlsoCountsFilter) {
  auto present = keyword_presence(
      parse_query("SELECT * WHERE { ?x a ?y FILTER NOT EXISTS { ?x a ?z } }", standard_prefixes()));
  EXPECT_TRUE(present.count("NOT EXISTS"));
  EXPECT_TRUE(present.count("FILTER"));
}

TEST(Keywords, FixtureReport) {
  Corpus c = load_corpus(kData + "/examples.jsonl", CorpusFormat::Jsonl);
  auto parsed = parse_queries(c);
  auto report = keyword_report(c, parsed);
  std::map<std::string, std::size_t> total;
  for (const auto& r : report.rows) total[r.keyword] = r.total;
  EXPECT_EQ(report.parsed, 20u);
  EXPECT_EQ(total["WHERE"], 20u);
  EXPECT_EQ(total["ASK"], 2u);
  EXPECT_EQ(total["owl:hasValue"], 3u);
  EXPECT_EQ(total["owl:Nothing"], 4u);
  EXPECT_EQ(total["UNION"], 1u);
  EXPECT_EQ(total["NOT EXISTS"], 1u);
  EXPECT_EQ(total["rdf:first"], 1u);
  EXPECT_EQ(total["rdf:rest"], 1u);
  EXPECT_EQ(total["owl:cardinality"], 0u);
  for (std::size_t i = 1; i < report.rows.size(); ++i)
    EXPECT_GE(report.rows[i - 1].total, report.rows[i].total);
}

}  // namespace
}  // namespace cqkit::sparql
