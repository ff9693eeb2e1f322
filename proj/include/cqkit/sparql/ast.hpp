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

#ifndef CQKIT_SPARQL_AST_HPP_
#define CQKIT_SPARQL_AST_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cqkit/box.hpp"

// Syntax tree for the SPARQL-OWL subset: SELECT/ASK over group graph
// patterns whose triples carry OWL axioms in Turtle form.
namespace cqkit::sparql {

using PrefixTable = std::map<std::string, std::string>;

struct Iri {
  std::string value;
  friend bool operator==(const Iri&, const Iri&) = default;
};

struct PrefixedName {
  std::string prefix;
  std::string local;
  friend bool operator==(const PrefixedName&, const PrefixedName&) = default;
};

struct BlankLabel {
  std::string label;
  friend bool operator==(const BlankLabel&, const BlankLabel&) = default;
};

// `[]`; ids are assigned in parse order, so re-parsing serialized text
// reproduces them.
struct AnonBlank {
  int id = 0;
  friend bool operator==(const AnonBlank&, const AnonBlank&) = default;
};

enum class VarMarker { Question, Placeholder };

struct Variable {
  std::string name;
  VarMarker marker = VarMarker::Question;
  friend bool operator==(const Variable&, const Variable&) = default;
};

struct Literal {
  std::string lexical;
  std::optional<std::variant<Iri, PrefixedName>> datatype;
  std::optional<std::string> language;
  // Written without quotes in the source (numbers, booleans).
  bool bare = false;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct KeywordA {
  friend bool operator==(const KeywordA&, const KeywordA&) = default;
};

using Term = std::variant<Iri, PrefixedName, BlankLabel, AnonBlank, Variable, Literal, KeywordA>;

// ---------------------------------------------------------------------------
// Property paths

struct PropertyPath;

struct PathSequence {
  std::vector<PropertyPath> steps;
  friend bool operator==(const PathSequence&, const PathSequence&) = default;
};
struct PathAlternative {
  std::vector<PropertyPath> options;
  friend bool operator==(const PathAlternative&, const PathAlternative&) = default;
};
struct PathZeroOrMore {
  Box<PropertyPath> inner;
  friend bool operator==(const PathZeroOrMore&, const PathZeroOrMore&) = default;
};
struct PathOneOrMore {
  Box<PropertyPath> inner;
  friend bool operator==(const PathOneOrMore&, const PathOneOrMore&) = default;
};
struct PathZeroOrOne {
  Box<PropertyPath> inner;
  friend bool operator==(const PathZeroOrOne&, const PathZeroOrOne&) = default;
};
struct PathInverse {
  Box<PropertyPath> inner;
  friend bool operator==(const PathInverse&, const PathInverse&) = default;
};
struct PathAtom {
  Term term;
  friend bool operator==(const PathAtom&, const PathAtom&) = default;
};
// Parenthesized group, kept so serialization reproduces the source shape.
struct PathGroup {
  Box<PropertyPath> inner;
  friend bool operator==(const PathGroup&, const PathGroup&) = default;
};

struct PropertyPath {
  std::variant<PathAtom, PathSequence, PathAlternative, PathZeroOrMore, PathOneOrMore,
               PathZeroOrOne, PathInverse, PathGroup>
      node;

  bool is_atom() const { return std::holds_alternative<PathAtom>(node); }
  const Term* atom() const {
    auto* a = std::get_if<PathAtom>(&node);
    return a ? &a->term : nullptr;
  }
  friend bool operator==(const PropertyPath&, const PropertyPath&) = default;
};

inline PropertyPath atom_path(Term t) { return PropertyPath{PathAtom{std::move(t)}}; }

// ---------------------------------------------------------------------------
// Triples

struct BlankPropertyList;
struct Collection;

// Subject or object position: a term, `[ ... ]`, or `( ... )`.
using Node = std::variant<Term, Box<BlankPropertyList>, Box<Collection>>;

struct PredicateObjects {
  PropertyPath verb;
  std::vector<Node> objects;
  friend bool operator==(const PredicateObjects&, const PredicateObjects&) = default;
};

struct BlankPropertyList {
  std::vector<PredicateObjects> entries;
  friend bool operator==(const BlankPropertyList&, const BlankPropertyList&) = default;
};

struct Collection {
  std::vector<Node> items;
  friend bool operator==(const Collection&, const Collection&) = default;
};

// One subject with its `;`-separated predicate list, each predicate with a
// `,`-separated object list. `predicates` may be empty only when the subject
// is a blank property list.
struct TriplePattern {
  Node subject;
  std::vector<PredicateObjects> predicates;
  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

// ---------------------------------------------------------------------------
// Expressions

struct Expr;

enum class CompareOp { Eq, Ne, Lt, Gt, Le, Ge };

struct Compare {
  CompareOp op = CompareOp::Eq;
  Box<Expr> lhs;
  Box<Expr> rhs;
  friend bool operator==(const Compare&, const Compare&) = default;
};
// `a && b && c` is one And with three operands.
struct And {
  std::vector<Expr> operands;
  friend bool operator==(const And&, const And&) = default;
};
struct Or {
  std::vector<Expr> operands;
  friend bool operator==(const Or&, const Or&) = default;
};
struct Not {
  Box<Expr> operand;
  friend bool operator==(const Not&, const Not&) = default;
};
struct In {
  Box<Expr> subject;
  std::vector<Expr> items;
  bool negated = false;
  friend bool operator==(const In&, const In&) = default;
};
// Builtin calls carry an uppercase name; casts and extension functions carry
// the IRI term instead.
struct FnCall {
  std::variant<std::string, Term> callee;
  std::vector<Expr> args;
  friend bool operator==(const FnCall&, const FnCall&) = default;
};
struct Arith {
  char op = '+';
  Box<Expr> lhs;
  Box<Expr> rhs;
  friend bool operator==(const Arith&, const Arith&) = default;
};
struct TermRef {
  Term term;
  friend bool operator==(const TermRef&, const TermRef&) = default;
};
struct Paren {
  Box<Expr> inner;
  friend bool operator==(const Paren&, const Paren&) = default;
};

struct Expr {
  std::variant<Compare, And, Or, Not, In, FnCall, Arith, TermRef, Paren> node;
  friend bool operator==(const Expr&, const Expr&) = default;
};

// ---------------------------------------------------------------------------
// Graph patterns

struct GraphPattern;

struct Bgp {
  std::vector<TriplePattern> triples;
  friend bool operator==(const Bgp&, const Bgp&) = default;
};
struct Group {
  std::vector<GraphPattern> elements;
  friend bool operator==(const Group&, const Group&) = default;
};
struct Filter {
  Expr expr;
  friend bool operator==(const Filter&, const Filter&) = default;
};
// `{ a } UNION { b } UNION { c }` nests to the left.
struct Union {
  Box<GraphPattern> left;
  Box<GraphPattern> right;
  friend bool operator==(const Union&, const Union&) = default;
};
// `FILTER NOT EXISTS { ... }`; `group` always holds a Group.
struct NotExists {
  Box<GraphPattern> group;
  friend bool operator==(const NotExists&, const NotExists&) = default;
};
struct Bind {
  Expr expr;
  Variable var;
  friend bool operator==(const Bind&, const Bind&) = default;
};

struct GraphPattern {
  std::variant<Bgp, Group, Filter, Union, NotExists, Bind> node;
  friend bool operator==(const GraphPattern&, const GraphPattern&) = default;
};

// ---------------------------------------------------------------------------

enum class QueryVerb { Select, Ask };

struct QueryAst {
  QueryVerb verb = QueryVerb::Select;
  bool distinct = false;
  bool star = false;
  std::vector<Variable> projection;
  GraphPattern where{Group{}};
  // Effective prefixes (injected table overlaid by PREFIX declarations).
  PrefixTable prefix_table;
  // Only the PREFIX lines present in the source, in order.
  std::vector<std::pair<std::string, std::string>> declared_prefixes;

  friend bool operator==(const QueryAst&, const QueryAst&) = default;
};

}  // namespace cqkit::sparql

#endif  // CQKIT_SPARQL_AST_HPP_
