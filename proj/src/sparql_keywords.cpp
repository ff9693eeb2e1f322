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

#include "cqkit/sparql/keywords.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "cqkit/sparql/parser.hpp"
#include "json.hpp"

namespace cqkit::sparql {

namespace {

std::string rdf(const char* local) { return std::string(kRdfNs) + local; }
std::string rdfs(const char* local) { return std::string(kRdfsNs) + local; }
std::string owl(const char* local) { return std::string(kOwlNs) + local; }

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

struct Collector {
  const PrefixTable& prefixes;
  std::set<std::string> iris;
  std::set<StructuralKeyword> structure;

  void term(const Term& t) {
    if (auto iri = resolve_iri(t, prefixes)) iris.insert(*iri);
  }

  void path(const PropertyPath& p) {
    std::visit(Overload{
                   [&](const PathAtom& a) { term(a.term); },
                   [&](const PathSequence& s) {
                     for (const auto& step : s.steps) path(step);
                   },
                   [&](const PathAlternative& a) {
                     for (const auto& o : a.options) path(o);
                   },
                   [&](const auto& wrapped) { path(*wrapped.inner); },
               },
               p.node);
  }

  void node(const Node& n) {
    std::visit(Overload{
                   [&](const Term& t) { term(t); },
                   [&](const Box<BlankPropertyList>& b) { entries(b->entries); },
                   [&](const Box<Collection>& c) {
                     for (const auto& item : c->items) node(item);
                   },
               },
               n);
  }

  void entries(const std::vector<PredicateObjects>& list) {
    for (const auto& po : list) {
      path(po.verb);
      for (const auto& o : po.objects) node(o);
    }
  }

  void expr(const Expr& e) {
    std::visit(Overload{
                   [&](const Compare& c) {
                     expr(*c.lhs);
                     expr(*c.rhs);
                   },
                   [&](const And& a) {
                     for (const auto& o : a.operands) expr(o);
                   },
                   [&](const Or& o) {
                     for (const auto& x : o.operands) expr(x);
                   },
                   [&](const Not& n) { expr(*n.operand); },
                   [&](const In& in) {
                     expr(*in.subject);
                     for (const auto& x : in.items) expr(x);
                   },
                   [&](const FnCall& f) {
                     for (const auto& a : f.args) expr(a);
                   },
                   [&](const Arith& a) {
                     expr(*a.lhs);
                     expr(*a.rhs);
                   },
                   [&](const TermRef& t) { term(t.term); },
                   [&](const Paren& p) { expr(*p.inner); },
               },
               e.node);
  }

  void pattern(const GraphPattern& g) {
    std::visit(Overload{
                   [&](const Bgp& bgp) {
                     for (const auto& t : bgp.triples) {
                       node(t.subject);
                       entries(t.predicates);
                     }
                   },
                   [&](const Group& grp) {
                     for (const auto& e : grp.elements) pattern(e);
                   },
                   [&](const Filter& f) {
                     structure.insert(StructuralKeyword::Filter);
                     expr(f.expr);
                   },
                   [&](const Union& u) {
                     structure.insert(StructuralKeyword::Union);
                     pattern(*u.left);
                     pattern(*u.right);
                   },
                   [&](const NotExists& n) {
                     structure.insert(StructuralKeyword::Filter);
                     structure.insert(StructuralKeyword::NotExists);
                     pattern(*n.group);
                   },
                   [&](const Bind& b) { expr(b.expr); },
               },
               g.node);
  }
};

}  // namespace

const std::vector<KeywordSpec>& default_keywords() {
  using S = StructuralKeyword;
  static const std::vector<KeywordSpec> specs = {
      {"WHERE", S::Where, {}},
      {"rdfs:subClassOf", std::nullopt, {rdfs("subClassOf")}},
      {"SELECT", S::Select, {}},
      {"owl:onProperty", std::nullopt, {owl("onProperty")}},
      {"owl:someValuesFrom", std::nullopt, {owl("someValuesFrom")}},
      {"rdf:type / a", std::nullopt, {rdf("type")}},
      {"DISTINCT", S::Distinct, {}},
      {"owl:Restriction", std::nullopt, {owl("Restriction")}},
      {"FILTER", S::Filter, {}},
      {"owl:Nothing", std::nullopt, {owl("Nothing")}},
      {"ASK", S::Ask, {}},
      {"owl:hasValue", std::nullopt, {owl("hasValue")}},
      {"NOT EXISTS", S::NotExists, {}},
      {"owl:intersectionOf", std::nullopt, {owl("intersectionOf")}},
      {"owl:unionOf", std::nullopt, {owl("unionOf")}},
      {"UNION", S::Union, {}},
      {"owl:disjointWith", std::nullopt, {owl("disjointWith")}},
      {"owl:allValuesFrom", std::nullopt, {owl("allValuesFrom")}},
      {"owl:cardinality", std::nullopt, {owl("cardinality")}},
      {"rdf:first", std::nullopt, {rdf("first")}},
      {"rdf:rest", std::nullopt, {rdf("rest")}},
  };
  return specs;
}

std::vector<KeywordSpec> load_keyword_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open keyword config");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": invalid JSON: " + e.what());
  }
  if (!j.is_array()) throw std::runtime_error(path + ": expected an array of keywords");
  std::vector<KeywordSpec> specs = default_keywords();
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("name") || !item["name"].is_string() ||
        !item.contains("iris") || !item["iris"].is_array())
      throw std::runtime_error(path + ": each keyword needs a name and an iris array");
    KeywordSpec spec{item["name"].get<std::string>(), std::nullopt, {}};
    for (const auto& iri : item["iris"]) {
      if (!iri.is_string()) throw std::runtime_error(path + ": iris must be strings");
      spec.iris.push_back(iri.get<std::string>());
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

std::set<std::string> keyword_presence(const QueryAst& ast, const std::vector<KeywordSpec>& specs) {
  Collector c{ast.prefix_table, {}, {}};
  c.pattern(ast.where);
  c.structure.insert(StructuralKeyword::Where);
  c.structure.insert(ast.verb == QueryVerb::Select ? StructuralKeyword::Select
                                                    : StructuralKeyword::Ask);
  if (ast.distinct) c.structure.insert(StructuralKeyword::Distinct);

  std::set<std::string> out;
  for (const auto& spec : specs) {
    if (spec.structural) {
      if (c.structure.count(*spec.structural)) out.insert(spec.name);
      continue;
    }
    for (const auto& iri : spec.iris) {
      if (c.iris.count(iri)) {
        out.insert(spec.name);
        break;
      }
    }
  }
  return out;
}

KeywordReport keyword_report(const Corpus& corpus, const std::vector<ParsedQuery>& parsed,
                             const std::vector<KeywordSpec>& specs) {
  KeywordReport report;
  std::map<std::string, KeywordRow> rows;
  for (const auto& spec : specs) rows[spec.name].keyword = spec.name;
  std::set<std::string> used;
  for (const auto& p : parsed) {
    if (!p.ast) {
      report.excluded.push_back(p);
      continue;
    }
    ++report.parsed;
    used.insert(p.ontology);
    for (const auto& kw : keyword_presence(*p.ast, specs)) {
      ++rows[kw].total;
      ++rows[kw].per_ontology[p.ontology];
    }
  }
  for (const auto& o : corpus.ontologies)
    if (used.count(o.short_name)) report.ontologies.push_back(o.short_name);
  if (report.parsed == 0) return report;
  for (const auto& spec : specs) report.rows.push_back(rows[spec.name]);
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const KeywordRow& a, const KeywordRow& b) { return a.total > b.total; });
  return report;
}

}  // namespace cqkit::sparql
