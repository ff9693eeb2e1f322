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

#ifndef CQKIT_CORPUS_HPP_
#define CQKIT_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cqkit/sparql/ast.hpp"

namespace cqkit {

struct OntologyId {
  std::string short_name;
  sparql::PrefixTable prefix_table;
  friend bool operator==(const OntologyId&, const OntologyId&) = default;
};

// Byte range [begin, end) into the CQ text, brackets included.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

struct CompetencyQuestion {
  std::string id;
  std::string ontology;
  std::string text;
  std::vector<Span> placeholders;
  std::optional<std::string> query_text;
  std::optional<std::vector<std::string>> expected_answers;

  bool dematerialized() const { return !placeholders.empty(); }
  friend bool operator==(const CompetencyQuestion&, const CompetencyQuestion&) = default;
};

struct Corpus {
  std::vector<OntologyId> ontologies;
  std::vector<CompetencyQuestion> questions;

  const OntologyId* find_ontology(std::string_view short_name) const;
  const CompetencyQuestion* find_question(std::string_view id) const;
  friend bool operator==(const Corpus&, const Corpus&) = default;
};

enum class CorpusFormat { Jsonl, DatasetDir };

// Validation failure while loading. `line` is 0 when not line-oriented.
class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::string file, std::size_t line, std::string field, std::string id,
              const std::string& message);

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }
  const std::string& id() const { return id_; }

 private:
  std::string file_;
  std::size_t line_;
  std::string field_;
  std::string id_;
};

class PlaceholderError : public std::invalid_argument {
 public:
  PlaceholderError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Scans for `[...]` segments. Throws PlaceholderError on nested or
// unbalanced brackets.
std::vector<Span> find_placeholders(std::string_view text);

// SWO, Stuff, AWO, DemCare (also "Dem@Care") and OntoDT resolve without a
// declaration. Lookup ignores case and non-alphanumerics.
std::optional<OntologyId> builtin_ontology(std::string_view name);

// Ontology prefixes overlaid on rdf/rdfs/owl/xsd.
sparql::PrefixTable effective_prefixes(const OntologyId& ontology);

Corpus parse_jsonl(std::istream& in, const std::string& source_name = "<input>");
void write_jsonl(const Corpus& corpus, std::ostream& out);
Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format);

// Throws CorpusError on duplicate ids, unknown ontologies or placeholder
// spans that disagree with the text.
void validate_corpus(const Corpus& corpus, const std::string& source_name = "<corpus>");

struct ParsedQuery {
  std::size_t question_index = 0;
  std::string id;
  std::string ontology;
  std::optional<sparql::QueryAst> ast;
  std::string error;  // set when ast is empty
};

// One entry per CQ carrying query text, in corpus order.
std::vector<ParsedQuery> parse_queries(const Corpus& corpus);

struct TranslatabilityRow {
  std::string ontology;  // "Total" for the totals row
  std::size_t cq_count = 0;
  std::size_t translated_count = 0;
};

struct TranslatabilityReport {
  std::vector<TranslatabilityRow> rows;  // totals row last
  std::vector<ParsedQuery> failures;     // query text present but unparseable
};

TranslatabilityReport translatability_report(const Corpus& corpus,
                                             const std::vector<ParsedQuery>& parsed);
TranslatabilityReport translatability_report(const Corpus& corpus);

}  // namespace cqkit

#endif  // CQKIT_CORPUS_HPP_
