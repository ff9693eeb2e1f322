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

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "cqkit/sparql/parser.hpp"
#include "cqkit/text.hpp"
#include "sparql_lexer.hpp"

namespace cqkit::sparql {

ParseError::ParseError(Kind kind, std::size_t offset, std::size_t line, std::size_t column,
                       std::string message, std::vector<std::string> expected)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         message),
      kind_(kind),
      offset_(offset),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

const PrefixTable& standard_prefixes() {
  static const PrefixTable table = {
      {"rdf", std::string(kRdfNs)},
      {"rdfs", std::string(kRdfsNs)},
      {"owl", std::string(kOwlNs)},
      {"xsd", std::string(kXsdNs)},
  };
  return table;
}

std::optional<std::string> resolve_iri(const Term& term, const PrefixTable& prefixes) {
  if (auto* iri = std::get_if<Iri>(&term)) return iri->value;
  if (auto* pn = std::get_if<PrefixedName>(&term)) {
    auto it = prefixes.find(pn->prefix);
    if (it == prefixes.end()) return std::nullopt;
    return it->second + pn->local;
  }
  if (std::holds_alternative<KeywordA>(term)) return std::string(kRdfNs) + "type";
  return std::nullopt;
}

namespace {

using detail::Tok;
using detail::Token;

constexpr std::array<std::string_view, 52> kBuiltins = {
    "STR",       "LANG",     "LANGMATCHES", "DATATYPE", "BOUND",     "IRI",     "URI",
    "BNODE",     "RAND",     "ABS",         "CEIL",     "FLOOR",     "ROUND",   "CONCAT",
    "STRLEN",    "UCASE",    "LCASE",       "ENCODE_FOR_URI", "CONTAINS", "STRSTARTS",
    "STRENDS",   "STRBEFORE", "STRAFTER",   "YEAR",     "MONTH",     "DAY",     "HOURS",
    "MINUTES",   "SECONDS",  "TIMEZONE",    "TZ",       "NOW",       "UUID",    "STRUUID",
    "MD5",       "SHA1",     "SHA256",      "SHA384",   "SHA512",    "COALESCE", "IF",
    "STRLANG",   "STRDT",    "SAMETERM",    "ISIRI",    "ISURI",     "ISBLANK", "ISLITERAL",
    "ISNUMERIC", "REGEX",    "SUBSTR",      "REPLACE"};

bool is_builtin(const std::string& upper) {
  return std::find(kBuiltins.begin(), kBuiltins.end(), upper) != kBuiltins.end();
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const PrefixTable& injected, const ParseOptions& options)
      : text_(text), toks_(detail::tokenize(text)), options_(options) {
    ast_.prefix_table = injected;
  }

  QueryAst run() {
    prologue();
    if (word_is("SELECT")) {
      select_clause();
    } else if (word_is("ASK")) {
      advance();
      ast_.verb = QueryVerb::Ask;
    } else {
      fail_expected({"SELECT", "ASK", "PREFIX"});
    }
    if (word_is("WHERE")) advance();
    if (!punct_is("{")) fail_expected({"{"});
    ast_.where = GraphPattern{group()};
    if (cur().kind != Tok::Eof) {
      if (cur().kind == Tok::Word) fail("unsupported solution modifier '" + cur().text + "'");
      fail_expected({"end of query"});
    }
    return std::move(ast_);
  }

 private:
  // ---- token helpers -----------------------------------------------------

  const Token& cur() const { return toks_[pos_]; }
  const Token& ahead(std::size_t n) const {
    return toks_[std::min(pos_ + n, toks_.size() - 1)];
  }
  void advance() {
    if (pos_ + 1 < toks_.size()) ++pos_;
  }
  bool punct_is(std::string_view p) const {
    return cur().kind == Tok::Punct && cur().text == p;
  }
  bool word_is(std::string_view w) const {
    return cur().kind == Tok::Word && text::iequals(cur().text, w);
  }
  void expect_punct(std::string_view p) {
    if (!punct_is(p)) fail_expected({std::string(p)});
    advance();
  }

  [[noreturn]] void fail(const std::string& message) {
    std::size_t line = 0, col = 0;
    detail::locate(text_, cur().offset, line, col);
    throw ParseError(ParseError::Kind::Grammar, cur().offset, line, col, message);
  }

  [[noreturn]] void fail_expected(std::vector<std::string> expected) {
    std::size_t line = 0, col = 0;
    detail::locate(text_, cur().offset, line, col);
    std::string found = cur().kind == Tok::Eof ? "end of input" : "'" + cur().text + "'";
    throw ParseError(ParseError::Kind::Grammar, cur().offset, line, col,
                     "expected " + text::join(expected, " or ") + ", found " + found,
                     std::move(expected));
  }

  // ---- prologue and clauses ---------------------------------------------

  void prologue() {
    for (;;) {
      if (word_is("PREFIX")) {
        advance();
        if (cur().kind != Tok::PName || cur().text.back() != ':')
          fail_expected({"prefix name"});
        std::string prefix = cur().text.substr(0, cur().text.size() - 1);
        advance();
        if (cur().kind != Tok::IriRef) fail_expected({"IRI"});
        ast_.prefix_table[prefix] = cur().text;
        ast_.declared_prefixes.emplace_back(prefix, cur().text);
        advance();
      } else if (word_is("BASE")) {
        fail("BASE declarations are not supported");
      } else {
        return;
      }
    }
  }

  void select_clause() {
    advance();
    ast_.verb = QueryVerb::Select;
    if (word_is("DISTINCT")) {
      ast_.distinct = true;
      advance();
    } else if (word_is("REDUCED")) {
      fail("REDUCED is not supported");
    }
    if (punct_is("*")) {
      ast_.star = true;
      advance();
      return;
    }
    if (cur().kind != Tok::Var) fail_expected({"*", "variable"});
    while (cur().kind == Tok::Var) {
      ast_.projection.push_back(variable());
    }
    if (punct_is("(")) fail("projection expressions are not supported");
  }

  Variable variable() {
    Variable v{cur().text, cur().placeholder ? VarMarker::Placeholder : VarMarker::Question};
    advance();
    return v;
  }

  // ---- graph patterns ----------------------------------------------------

  Group group() {
    expect_punct("{");
    Group g;
    for (;;) {
      if (punct_is("}")) break;
      if (starts_triple()) {
        g.elements.push_back(GraphPattern{triples_block()});
        if (starts_triple()) fail_expected({"."});
        continue;
      }
      if (punct_is("{")) {
        g.elements.push_back(group_or_union());
      } else if (word_is("FILTER")) {
        g.elements.push_back(filter());
      } else if (word_is("BIND")) {
        g.elements.push_back(bind());
      } else if (word_is("OPTIONAL") || word_is("MINUS") || word_is("GRAPH") ||
                 word_is("SERVICE") || word_is("VALUES")) {
        fail(upper(cur().text) + " is not supported");
      } else {
        fail_expected({"triple pattern", "FILTER", "BIND", "{", "}"});
      }
      if (punct_is(".")) advance();
    }
    expect_punct("}");
    if (g.elements.empty()) g.elements.push_back(GraphPattern{Bgp{}});
    return g;
  }

  GraphPattern group_or_union() {
    GraphPattern left{group()};
    while (word_is("UNION")) {
      advance();
      GraphPattern right{group()};
      left = GraphPattern{Union{Box<GraphPattern>(std::move(left)), Box<GraphPattern>(std::move(right))}};
    }
    return left;
  }

  GraphPattern filter() {
    advance();
    if (word_is("NOT") && ahead(1).kind == Tok::Word && text::iequals(ahead(1).text, "EXISTS")) {
      advance();
      advance();
      if (!punct_is("{")) fail_expected({"{"});
      return GraphPattern{NotExists{Box<GraphPattern>(GraphPattern{group()})}};
    }
    if (word_is("EXISTS")) fail("FILTER EXISTS is not supported");
    if (punct_is("(")) {
      advance();
      Expr e = expression();
      expect_punct(")");
      return GraphPattern{Filter{std::move(e)}};
    }
    if (cur().kind == Tok::Word || cur().kind == Tok::PName || cur().kind == Tok::IriRef) {
      Expr e = primary();
      if (!std::holds_alternative<FnCall>(e.node)) fail_expected({"("});
      return GraphPattern{Filter{std::move(e)}};
    }
    fail_expected({"(", "NOT EXISTS", "function call"});
  }

  GraphPattern bind() {
    advance();
    expect_punct("(");
    Expr e = expression();
    if (!word_is("AS")) fail_expected({"AS"});
    advance();
    if (cur().kind != Tok::Var) fail_expected({"variable"});
    Variable v = variable();
    expect_punct(")");
    return GraphPattern{Bind{std::move(e), std::move(v)}};
  }

  bool starts_term() const {
    switch (cur().kind) {
      case Tok::IriRef:
      case Tok::PName:
      case Tok::BlankLabel:
      case Tok::Var:
      case Tok::String:
      case Tok::Integer:
      case Tok::Decimal:
      case Tok::Double:
        return true;
      case Tok::Word:
        return word_is("true") || word_is("false");
      case Tok::Punct:
        return cur().text == "[" || cur().text == "(";
      default:
        return false;
    }
  }

  bool starts_triple() const { return starts_term(); }

  Bgp triples_block() {
    Bgp bgp;
    while (starts_triple()) {
      bgp.triples.push_back(triples_same_subject());
      if (!punct_is(".")) break;
      advance();
    }
    return bgp;
  }

  TriplePattern triples_same_subject() {
    TriplePattern t;
    bool subject_is_list = punct_is("[") && !(ahead(1).kind == Tok::Punct && ahead(1).text == "]");
    if (punct_is("(")) fail("a collection cannot be a subject");
    t.subject = node();
    if (subject_is_list) {
      if (starts_verb()) t.predicates = property_list();
    } else {
      if (!starts_verb()) fail_expected({"predicate"});
      t.predicates = property_list();
    }
    return t;
  }

  bool starts_verb() const {
    if (cur().kind == Tok::IriRef || cur().kind == Tok::PName || cur().kind == Tok::Var) return true;
    if (cur().kind == Tok::Word && cur().text == "a") return true;
    return punct_is("^") || punct_is("(");
  }

  std::vector<PredicateObjects> property_list() {
    std::vector<PredicateObjects> out;
    for (;;) {
      PredicateObjects po;
      po.verb = path();
      po.objects.push_back(node());
      while (punct_is(",")) {
        advance();
        po.objects.push_back(node());
      }
      out.push_back(std::move(po));
      if (!punct_is(";")) break;
      while (punct_is(";")) advance();
      if (!starts_verb()) break;
    }
    return out;
  }

  Node node() {
    if (punct_is("[")) {
      advance();
      if (punct_is("]")) {
        advance();
        return Node{Term{AnonBlank{next_anon_++}}};
      }
      BlankPropertyList list;
      list.entries = property_list();
      expect_punct("]");
      return Node{Box<BlankPropertyList>(std::move(list))};
    }
    if (punct_is("(")) {
      advance();
      Collection c;
      while (!punct_is(")")) {
        if (!starts_term()) fail_expected({"collection item", ")"});
        c.items.push_back(node());
      }
      advance();
      return Node{Box<Collection>(std::move(c))};
    }
    return Node{term()};
  }

  Term term() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::IriRef: {
        Term out = Iri{t.text};
        advance();
        return out;
      }
      case Tok::PName: {
        Term out = prefixed(t);
        advance();
        return out;
      }
      case Tok::BlankLabel: {
        Term out = BlankLabel{t.text};
        advance();
        return out;
      }
      case Tok::Var:
        return variable();
      case Tok::String:
        return literal();
      case Tok::Integer:
      case Tok::Decimal:
      case Tok::Double: {
        static const char* names[] = {"integer", "decimal", "double"};
        int k = t.kind == Tok::Integer ? 0 : t.kind == Tok::Decimal ? 1 : 2;
        Literal lit{t.text, PrefixedName{"xsd", names[k]}, std::nullopt, true};
        advance();
        return lit;
      }
      case Tok::Word:
        if (t.text == "true" || t.text == "false") {
          Literal lit{t.text, PrefixedName{"xsd", "boolean"}, std::nullopt, true};
          advance();
          return lit;
        }
        break;
      default:
        break;
    }
    fail_expected({"term"});
  }

  PrefixedName prefixed(const Token& t) {
    auto colon = t.text.find(':');
    PrefixedName pn{t.text.substr(0, colon), t.text.substr(colon + 1)};
    if (options_.resolve_prefixes && !ast_.prefix_table.count(pn.prefix)) {
      std::size_t line = 0, col = 0;
      detail::locate(text_, t.offset, line, col);
      throw ParseError(ParseError::Kind::UnresolvedPrefix, t.offset, line, col,
                       "unresolved prefix '" + pn.prefix + ":'");
    }
    return pn;
  }

  Literal literal() {
    Literal lit;
    lit.lexical = cur().text;
    advance();
    if (cur().kind == Tok::LangTag) {
      lit.language = cur().text;
      advance();
    } else if (punct_is("^^")) {
      advance();
      if (cur().kind == Tok::IriRef) {
        lit.datatype = Iri{cur().text};
      } else if (cur().kind == Tok::PName) {
        lit.datatype = prefixed(cur());
      } else {
        fail_expected({"datatype IRI"});
      }
      advance();
    }
    return lit;
  }

  // ---- property paths ----------------------------------------------------

  PropertyPath path() {
    PropertyPath first = path_sequence();
    if (!punct_is("|")) return first;
    PathAlternative alt;
    alt.options.push_back(std::move(first));
    while (punct_is("|")) {
      advance();
      alt.options.push_back(path_sequence());
    }
    return PropertyPath{std::move(alt)};
  }

  PropertyPath path_sequence() {
    PropertyPath first = path_elt_or_inverse();
    if (!punct_is("/")) return first;
    PathSequence seq;
    seq.steps.push_back(std::move(first));
    while (punct_is("/")) {
      advance();
      seq.steps.push_back(path_elt_or_inverse());
    }
    return PropertyPath{std::move(seq)};
  }

  PropertyPath path_elt_or_inverse() {
    if (punct_is("^")) {
      advance();
      return PropertyPath{PathInverse{Box<PropertyPath>(path_elt())}};
    }
    return path_elt();
  }

  PropertyPath path_elt() {
    PropertyPath p = path_primary();
    if (punct_is("*")) {
      advance();
      return PropertyPath{PathZeroOrMore{Box<PropertyPath>(std::move(p))}};
    }
    if (punct_is("+")) {
      advance();
      return PropertyPath{PathOneOrMore{Box<PropertyPath>(std::move(p))}};
    }
    if (punct_is("?")) {
      advance();
      return PropertyPath{PathZeroOrOne{Box<PropertyPath>(std::move(p))}};
    }
    return p;
  }

  PropertyPath path_primary() {
    if (cur().kind == Tok::Word && cur().text == "a") {
      advance();
      return atom_path(KeywordA{});
    }
    if (cur().kind == Tok::IriRef || cur().kind == Tok::PName || cur().kind == Tok::Var)
      return atom_path(term());
    if (punct_is("(")) {
      advance();
      PropertyPath inner = path();
      expect_punct(")");
      return PropertyPath{PathGroup{Box<PropertyPath>(std::move(inner))}};
    }
    fail_expected({"predicate"});
  }

  // ---- expressions -------------------------------------------------------

  Expr expression() {
    Expr first = conjunction();
    if (!punct_is("||")) return first;
    Or o;
    o.operands.push_back(std::move(first));
    while (punct_is("||")) {
      advance();
      o.operands.push_back(conjunction());
    }
    return Expr{std::move(o)};
  }

  Expr conjunction() {
    Expr first = relational();
    if (!punct_is("&&")) return first;
    And a;
    a.operands.push_back(std::move(first));
    while (punct_is("&&")) {
      advance();
      a.operands.push_back(relational());
    }
    return Expr{std::move(a)};
  }

  Expr relational() {
    Expr lhs = additive();
    static const std::pair<std::string_view, CompareOp> ops[] = {
        {"=", CompareOp::Eq}, {"!=", CompareOp::Ne}, {"<", CompareOp::Lt},
        {">", CompareOp::Gt}, {"<=", CompareOp::Le}, {">=", CompareOp::Ge}};
    for (const auto& [text, op] : ops) {
      if (punct_is(text)) {
        advance();
        Expr rhs = additive();
        return Expr{Compare{op, Box<Expr>(std::move(lhs)), Box<Expr>(std::move(rhs))}};
      }
    }
    bool negated = false;
    if (word_is("NOT") && ahead(1).kind == Tok::Word && text::iequals(ahead(1).text, "IN")) {
      negated = true;
      advance();
    }
    if (word_is("IN")) {
      advance();
      expect_punct("(");
      In in{Box<Expr>(std::move(lhs)), {}, negated};
      if (punct_is(")")) fail("IN list must not be empty");
      in.items.push_back(expression());
      while (punct_is(",")) {
        advance();
        in.items.push_back(expression());
      }
      expect_punct(")");
      return Expr{std::move(in)};
    }
    return lhs;
  }

  Expr additive() {
    Expr lhs = multiplicative();
    while (punct_is("+") || punct_is("-")) {
      char op = cur().text[0];
      advance();
      Expr rhs = multiplicative();
      lhs = Expr{Arith{op, Box<Expr>(std::move(lhs)), Box<Expr>(std::move(rhs))}};
    }
    return lhs;
  }

  Expr multiplicative() {
    Expr lhs = unary();
    while (punct_is("*") || punct_is("/")) {
      char op = cur().text[0];
      advance();
      Expr rhs = unary();
      lhs = Expr{Arith{op, Box<Expr>(std::move(lhs)), Box<Expr>(std::move(rhs))}};
    }
    return lhs;
  }

  Expr unary() {
    if (punct_is("!")) {
      advance();
      return Expr{Not{Box<Expr>(unary())}};
    }
    return primary();
  }

  Expr primary() {
    if (punct_is("(")) {
      advance();
      Expr inner = expression();
      expect_punct(")");
      return Expr{Paren{Box<Expr>(std::move(inner))}};
    }
    if (cur().kind == Tok::Word && !(word_is("true") || word_is("false"))) {
      std::string name = upper(cur().text);
      if (name == "EXISTS" || name == "NOT") fail("EXISTS inside expressions is not supported");
      if (!is_builtin(name)) fail("unknown function '" + cur().text + "'");
      advance();
      return Expr{FnCall{name, call_args()}};
    }
    if (cur().kind == Tok::IriRef || cur().kind == Tok::PName) {
      Term t = term();
      if (punct_is("(")) return Expr{FnCall{std::move(t), call_args()}};
      return Expr{TermRef{std::move(t)}};
    }
    if (starts_term() && !punct_is("[") && !punct_is("(")) {
      if (cur().kind == Tok::BlankLabel) fail("blank nodes are not allowed in expressions");
      return Expr{TermRef{term()}};
    }
    fail_expected({"expression"});
  }

  std::vector<Expr> call_args() {
    expect_punct("(");
    std::vector<Expr> args;
    if (punct_is(")")) {
      advance();
      return args;
    }
    args.push_back(expression());
    while (punct_is(",")) {
      advance();
      args.push_back(expression());
    }
    expect_punct(")");
    return args;
  }

  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ParseOptions options_;
  QueryAst ast_;
  int next_anon_ = 1;
};

}  // namespace

QueryAst parse_query(std::string_view text, const PrefixTable& prefixes,
                     const ParseOptions& options) {
  if (text::trim(text).empty()) throw ParseError(ParseError::Kind::Grammar, 0, 1, 1, "empty query");
  return Parser(text, prefixes, options).run();
}

}  // namespace cqkit::sparql
