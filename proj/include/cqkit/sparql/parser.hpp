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

#ifndef CQKIT_SPARQL_PARSER_HPP_
#define CQKIT_SPARQL_PARSER_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cqkit/sparql/ast.hpp"

namespace cqkit::sparql {

/// Raised for lexical errors, grammar errors and (when requested)
/// unresolvable prefixes. `line`/`column` are 1-based.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Lexical, Grammar, UnresolvedPrefix };

  ParseError(Kind kind, std::size_t offset, std::size_t line, std::size_t column,
             std::string message, std::vector<std::string> expected = {});

  Kind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  Kind kind_;
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

struct ParseOptions {
  // Fail when a prefixed name has no entry in the effective prefix table.
  bool resolve_prefixes = false;
};

/// Parses one query. `prefixes` is injected underneath any PREFIX lines
/// in the text, since corpus queries usually omit their preamble.
QueryAst parse_query(std::string_view text, const PrefixTable& prefixes = {},
                     const ParseOptions& options = {});

/// Canonical pretty-printed text; parse_query(serialize_query(q)) == q for
/// every q produced by parse_query (given the same injected prefixes).
std::string serialize_query(const QueryAst& ast);

std::string serialize_term(const Term& term);
std::string serialize_path(const PropertyPath& path);
std::string serialize_expr(const Expr& expr);

/// Absolute IRI for an IRI or prefixed name; nullopt for other terms or
/// unknown prefixes.
std::optional<std::string> resolve_iri(const Term& term, const PrefixTable& prefixes);

// Namespaces every query may use without declaring them.
const PrefixTable& standard_prefixes();

inline constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema#";

/// Number of atomic (subject, predicate, object) triples the pattern
/// denotes once property and object lists and collections are expanded.
std::size_t count_atomic_triples(const GraphPattern& pattern);

}  // namespace cqkit::sparql

#endif  // CQKIT_SPARQL_PARSER_HPP_
