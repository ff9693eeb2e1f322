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

#ifndef CQKIT_SIGNATURES_HPP_
#define CQKIT_SIGNATURES_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cqkit/corpus.hpp"
#include "cqkit/sparql/ast.hpp"

namespace cqkit {

// URI-agnostic canonical form of a query.
struct Signature {
  sparql::QueryVerb verb = sparql::QueryVerb::Select;
  bool distinct = false;
  bool star = false;
  std::string skeleton;        // header + " WHERE " + where_skeleton
  std::string where_skeleton;  // "{ ... }"
  // False when the labeling space was too large to search exhaustively.
  bool exact = true;
  std::vector<std::string> member_query_ids;
};

struct CanonicalizeOptions {
  std::size_t max_triples = 16;
  // Upper bound on labelings tried by brute force.
  std::size_t max_labelings = 40320;
};

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws SignatureError when the query exceeds `max_triples` atomic triples.
Signature canonicalize(const sparql::QueryAst& ast, const CanonicalizeOptions& options = {});

struct SignatureGroup {
  std::string id;  // "S1", "S2", ... by rank
  Signature signature;
  std::size_t count = 0;
  double cumulative_percent = 0;
};

struct SkippedQuery {
  std::string id;
  std::string reason;
};

struct SignatureInventory {
  std::vector<SignatureGroup> groups;  // count desc, then skeleton
  std::vector<SkippedQuery> skipped;
  std::size_t total = 0;               // queries grouped

  // Group id of a query, or empty.
  std::string group_of(const std::string& query_id) const;
  double top_coverage(std::size_t k) const;
};

SignatureInventory group_by_signature(const std::vector<ParsedQuery>& parsed,
                                      const CanonicalizeOptions& options = {});

}  // namespace cqkit

#endif  // CQKIT_SIGNATURES_HPP_
