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

#ifndef CQKIT_SPARQL_KEYWORDS_HPP_
#define CQKIT_SPARQL_KEYWORDS_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cqkit/corpus.hpp"
#include "cqkit/sparql/ast.hpp"

namespace cqkit::sparql {

enum class StructuralKeyword { Where, Select, Ask, Distinct, Filter, Union, NotExists };

// A keyword is either structural (matched on AST nodes) or a vocabulary
// term matched against any of `iris` after prefix resolution.
struct KeywordSpec {
  std::string name;
  std::optional<StructuralKeyword> structural;
  std::vector<std::string> iris;
};

// The 21 keywords tracked by default, in table order.
const std::vector<KeywordSpec>& default_keywords();

// Reads [{"name": ..., "iris": [...]}, ...] and appends to the defaults.
std::vector<KeywordSpec> load_keyword_config(const std::string& path);

std::set<std::string> keyword_presence(const QueryAst& ast,
                                       const std::vector<KeywordSpec>& specs = default_keywords());

struct KeywordRow {
  std::string keyword;
  std::size_t total = 0;
  std::map<std::string, std::size_t> per_ontology;
};

struct KeywordReport {
  std::vector<std::string> ontologies;  // column order
  std::vector<KeywordRow> rows;         // count desc, then spec order
  std::vector<ParsedQuery> excluded;    // unparseable
  std::size_t parsed = 0;
};

KeywordReport keyword_report(const Corpus& corpus, const std::vector<ParsedQuery>& parsed,
                             const std::vector<KeywordSpec>& specs = default_keywords());

}  // namespace cqkit::sparql

#endif  // CQKIT_SPARQL_KEYWORDS_HPP_
