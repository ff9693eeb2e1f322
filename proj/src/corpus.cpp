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

#include "cqkit/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "cqkit/sparql/parser.hpp"
#include "cqkit/text.hpp"

namespace cqkit {

namespace fs = std::filesystem;
using nlohmann::json;

CorpusError::CorpusError(std::string file, std::size_t line, std::string field, std::string id,
                         const std::string& message)
    : std::runtime_error([&] {
        std::string where = file;
        if (line) where += ":" + std::to_string(line);
        std::string out = where + ": ";
        if (!id.empty()) out += "[" + id + "] ";
        if (!field.empty()) out += "field '" + field + "': ";
        return out + message;
      }()),
      file_(std::move(file)),
      line_(line),
      field_(std::move(field)),
      id_(std::move(id)) {}

PlaceholderError::PlaceholderError(std::size_t offset, const std::string& message)
    : std::invalid_argument(message + " at offset " + std::to_string(offset)), offset_(offset) {}

const OntologyId* Corpus::find_ontology(std::string_view short_name) const {
  for (const auto& o : ontologies)
    if (o.short_name == short_name) return &o;
  return nullptr;
}

const CompetencyQuestion* Corpus::find_question(std::string_view id) const {
  for (const auto& q : questions)
    if (q.id == id) return &q;
  return nullptr;
}

std::vector<Span> find_placeholders(std::string_view text) {
  std::vector<Span> spans;
  std::optional<std::size_t> open;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '[') {
      if (open) throw PlaceholderError(i, "nested '['");
      open = i;
    } else if (text[i] == ']') {
      if (!open) throw PlaceholderError(i, "unbalanced ']'");
      spans.push_back({*open, i + 1});
      open.reset();
    }
  }
  if (open) throw PlaceholderError(*open, "unclosed '['");
  return spans;
}

namespace {

std::string fold_name(std::string_view name) {
  std::string out;
  for (char c : name)
    if (std::isalnum(static_cast<unsigned char>(c)))
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::optional<OntologyId> builtin_ontology(std::string_view name) {
  std::string key = fold_name(name);
  if (key == "swo")
    return OntologyId{"SWO",
                      {{"swo", "http://www.ebi.ac.uk/swo/"},
                       {"efo-swo", "http://www.ebi.ac.uk/efo/swo/"},
                       {"maturity", "http://www.ebi.ac.uk/swo/maturity/"},
                       {"interface", "http://www.ebi.ac.uk/swo/interface/"},
                       {"obo", "http://purl.obolibrary.org/obo/"}}};
  if (key == "stuff")
    return OntologyId{"Stuff",
                      {{"stuff", "http://www.meteck.org/files/ontologies/stuff.owl#"},
                       {"", "http://www.meteck.org/files/ontologies/stuff.owl#"}}};
  if (key == "awo" || key == "africanwildlifeontology")
    return OntologyId{
        "AWO", {{"awo", "http://www.meteck.org/teaching/ontologies/AfricanWildlifeOntology1.owl#"}}};
  if (key == "demcare")
    return OntologyId{"DemCare",
                      {{"event", "http://www.demcare.eu/ontologies/event.owl#"},
                       {"exch", "http://www.demcare.eu/ontologies/exchangemodel.owl#"},
                       {"home", "http://www.demcare.eu/ontologies/home.owl#"},
                       {"lab", "http://www.demcare.eu/ontologies/lab.owl#"}}};
  if (key == "ontodt")
    return OntologyId{"OntoDT",
                      {{"OntoDT", "http://www.ontodm.com/OntoDT#"},
                       {"OntoDT2", "http://ontodm.com/OntoDT#"}}};
  return std::nullopt;
}

sparql::PrefixTable effective_prefixes(const OntologyId& ontology) {
  sparql::PrefixTable table = sparql::standard_prefixes();
  for (const auto& [k, v] : ontology.prefix_table) table[k] = v;
  return table;
}

namespace {

bool valid_prefix_label(const std::string& p) {
  if (p.empty()) return true;
  if (!std::isalpha(static_cast<unsigned char>(p.front()))) return false;
  for (char c : p)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_' && c != '.')
      return false;
  return p.back() != '.';
}

bool absolute_iri(const std::string& iri) {
  auto colon = iri.find(':');
  if (colon == std::string::npos || colon == 0) return false;
  if (!std::isalpha(static_cast<unsigned char>(iri[0]))) return false;
  for (std::size_t i = 0; i < colon; ++i) {
    char c = iri[i];
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
      return false;
  }
  return true;
}

sparql::PrefixTable read_prefixes(const json& j, const std::string& file, std::size_t line,
                                  const std::string& id) {
  if (!j.is_object()) throw CorpusError(file, line, "prefixes", id, "expected an object");
  sparql::PrefixTable table;
  for (const auto& [k, v] : j.items()) {
    if (!valid_prefix_label(k))
      throw CorpusError(file, line, "prefixes", id, "invalid prefix label '" + k + "'");
    if (!v.is_string() || !absolute_iri(v.get<std::string>()))
      throw CorpusError(file, line, "prefixes", id, "prefix '" + k + "' needs an absolute IRI");
    table[k] = v.get<std::string>();
  }
  return table;
}

// Collects ontology references in first-mention order and resolves them at
// the end, so declarations may follow their use.
class OntologyRegistry {
 public:
  std::string declare(const std::string& name, sparql::PrefixTable table, const std::string& file,
                      std::size_t line) {
    if (name.empty()) throw CorpusError(file, line, "ontology", "", "empty ontology name");
    auto builtin = builtin_ontology(name);
    std::string key = builtin ? builtin->short_name : name;
    if (declared_.count(key))
      throw CorpusError(file, line, "ontology", "", "ontology '" + name + "' declared twice");
    declared_[key] = std::move(table);
    note(key);
    return key;
  }

  std::string reference(const std::string& name) {
    auto builtin = builtin_ontology(name);
    std::string key = builtin ? builtin->short_name : name;
    note(key);
    return key;
  }

  std::vector<OntologyId> resolve(const std::string& file,
                                  const std::map<std::string, std::pair<std::size_t, std::string>>&
                                      first_use) {
    std::vector<OntologyId> out;
    for (const auto& key : order_) {
      auto d = declared_.find(key);
      if (d != declared_.end()) {
        out.push_back({key, d->second});
        continue;
      }
      if (auto builtin = builtin_ontology(key)) {
        out.push_back(*builtin);
        continue;
      }
      auto use = first_use.find(key);
      std::size_t line = use == first_use.end() ? 0 : use->second.first;
      std::string id = use == first_use.end() ? "" : use->second.second;
      throw CorpusError(file, line, "ontology", id, "unresolvable ontology '" + key + "'");
    }
    return out;
  }

 private:
  void note(const std::string& key) {
    if (std::find(order_.begin(), order_.end(), key) == order_.end()) order_.push_back(key);
  }
  std::vector<std::string> order_;
  std::map<std::string, sparql::PrefixTable> declared_;
};

std::string require_string(const json& j, const char* field, const std::string& file,
                           std::size_t line, const std::string& id) {
  auto it = j.find(field);
  if (it == j.end()) throw CorpusError(file, line, field, id, "missing");
  if (!it->is_string()) throw CorpusError(file, line, field, id, "expected a string");
  return it->get<std::string>();
}

CompetencyQuestion make_question(std::string id, std::string ontology, std::string text,
                                 const std::string& file, std::size_t line) {
  CompetencyQuestion q;
  q.id = std::move(id);
  q.ontology = std::move(ontology);
  q.text = std::move(text);
  if (text::trim(q.text).empty()) throw CorpusError(file, line, "cq", q.id, "empty question text");
  try {
    q.placeholders = find_placeholders(q.text);
  } catch (const PlaceholderError& e) {
    throw CorpusError(file, line, "cq", q.id, e.what());
  }
  return q;
}

void check_unique(const std::vector<CompetencyQuestion>& questions,
                  const std::vector<std::size_t>& lines, const std::string& file) {
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < questions.size(); ++i) {
    auto [it, inserted] = seen.emplace(questions[i].id, i);
    if (!inserted)
      throw CorpusError(file, lines.empty() ? 0 : lines[i], "id", questions[i].id,
                        "duplicate id '" + questions[i].id + "'");
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError(path.string(), 0, "", "", "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Corpus load_dataset_dir(const fs::path& root) {
  if (!fs::is_directory(root))
    throw CorpusError(root.string(), 0, "", "", "not a directory");
  std::vector<fs::path> dirs;
  for (const auto& entry : fs::directory_iterator(root))
    if (entry.is_directory() && fs::exists(entry.path() / "manifest.json"))
      dirs.push_back(entry.path());
  std::sort(dirs.begin(), dirs.end(), [](const fs::path& a, const fs::path& b) {
    return text::natural_less(a.filename().string(), b.filename().string());
  });

  Corpus corpus;
  std::vector<std::size_t> no_lines;
  for (const auto& dir : dirs) {
    fs::path manifest_path = dir / "manifest.json";
    json manifest;
    try {
      manifest = json::parse(read_file(manifest_path));
    } catch (const json::exception& e) {
      throw CorpusError(manifest_path.string(), 0, "", "", std::string("invalid JSON: ") + e.what());
    }
    if (!manifest.is_object())
      throw CorpusError(manifest_path.string(), 0, "", "", "manifest must be an object");
    std::string name = require_string(manifest, "ontology", manifest_path.string(), 0, "");
    sparql::PrefixTable table;
    if (manifest.contains("prefixes"))
      table = read_prefixes(manifest["prefixes"], manifest_path.string(), 0, "");
    auto builtin = builtin_ontology(name);
    std::string key = builtin ? builtin->short_name : name;
    if (corpus.find_ontology(key))
      throw CorpusError(manifest_path.string(), 0, "ontology", "", "ontology '" + name + "' declared twice");
    if (table.empty() && builtin) table = builtin->prefix_table;
    corpus.ontologies.push_back({key, table});

    std::vector<fs::path> files;
    if (fs::is_directory(dir / "questions"))
      for (const auto& entry : fs::directory_iterator(dir / "questions"))
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
          files.push_back(entry.path());
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
      return text::natural_less(a.stem().string(), b.stem().string());
    });
    for (const auto& file : files) {
      std::string id = file.stem().string();
      std::string body(text::trim(read_file(file)));
      CompetencyQuestion q = make_question(id, key, body, file.string(), 0);
      fs::path query = dir / "queries" / (id + ".rq");
      if (fs::exists(query)) q.query_text = read_file(query);
      corpus.questions.push_back(std::move(q));
    }
    if (fs::is_directory(dir / "queries")) {
      for (const auto& entry : fs::directory_iterator(dir / "queries")) {
        if (entry.path().extension() != ".rq") continue;
        if (!fs::exists(dir / "questions" / (entry.path().stem().string() + ".txt")))
          throw CorpusError(entry.path().string(), 0, "query", entry.path().stem().string(),
                            "query without a matching question file");
      }
    }
  }
  check_unique(corpus.questions, no_lines, root.string());
  return corpus;
}

}  // namespace

Corpus parse_jsonl(std::istream& in, const std::string& source_name) {
  Corpus corpus;
  OntologyRegistry registry;
  std::map<std::string, std::pair<std::size_t, std::string>> first_use;
  std::vector<std::size_t> lines;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (text::trim(raw).empty()) continue;
    json j;
    try {
      j = json::parse(raw);
    } catch (const json::exception& e) {
      throw CorpusError(source_name, line_no, "", "", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw CorpusError(source_name, line_no, "", "", "expected a JSON object");

    if (j.contains("prefixes") && !j.contains("id")) {
      std::string name = require_string(j, "ontology", source_name, line_no, "");
      registry.declare(name, read_prefixes(j["prefixes"], source_name, line_no, ""), source_name,
                       line_no);
      continue;
    }

    std::string id = require_string(j, "id", source_name, line_no, "");
    if (id.empty()) throw CorpusError(source_name, line_no, "id", "", "empty id");
    std::string ontology = require_string(j, "ontology", source_name, line_no, id);
    std::string cq = require_string(j, "cq", source_name, line_no, id);
    for (const auto& [key, value] : j.items()) {
      static const std::set<std::string> known = {"id", "ontology", "cq", "query", "answers"};
      if (!known.count(key)) throw CorpusError(source_name, line_no, key, id, "unknown field");
    }
    std::string key = registry.reference(ontology);
    first_use.emplace(key, std::make_pair(line_no, id));
    CompetencyQuestion q = make_question(id, key, cq, source_name, line_no);
    if (auto it = j.find("query"); it != j.end() && !it->is_null()) {
      if (!it->is_string()) throw CorpusError(source_name, line_no, "query", id, "expected a string");
      q.query_text = it->get<std::string>();
    }
    if (auto it = j.find("answers"); it != j.end() && !it->is_null()) {
      if (!it->is_array()) throw CorpusError(source_name, line_no, "answers", id, "expected an array");
      std::vector<std::string> answers;
      for (const auto& a : *it) {
        if (!a.is_string())
          throw CorpusError(source_name, line_no, "answers", id, "expected strings");
        answers.push_back(a.get<std::string>());
      }
      q.expected_answers = std::move(answers);
    }
    corpus.questions.push_back(std::move(q));
    lines.push_back(line_no);
  }
  corpus.ontologies = registry.resolve(source_name, first_use);
  check_unique(corpus.questions, lines, source_name);
  return corpus;
}

void write_jsonl(const Corpus& corpus, std::ostream& out) {
  for (const auto& o : corpus.ontologies) {
    json j;
    j["ontology"] = o.short_name;
    j["prefixes"] = json::object();
    for (const auto& [k, v] : o.prefix_table) j["prefixes"][k] = v;
    out << j.dump() << "\n";
  }
  for (const auto& q : corpus.questions) {
    json j;
    j["id"] = q.id;
    j["ontology"] = q.ontology;
    j["cq"] = q.text;
    if (q.query_text) j["query"] = *q.query_text;
    if (q.expected_answers) j["answers"] = *q.expected_answers;
    out << j.dump() << "\n";
  }
}

Corpus load_corpus(const fs::path& path, CorpusFormat format) {
  if (!fs::exists(path)) throw CorpusError(path.string(), 0, "", "", "path does not exist");
  if (format == CorpusFormat::DatasetDir) return load_dataset_dir(path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError(path.string(), 0, "", "", "cannot open file");
  return parse_jsonl(in, path.string());
}

void validate_corpus(const Corpus& corpus, const std::string& source_name) {
  std::set<std::string> names;
  for (const auto& o : corpus.ontologies) {
    if (o.short_name.empty()) throw CorpusError(source_name, 0, "ontology", "", "empty short name");
    if (!names.insert(o.short_name).second)
      throw CorpusError(source_name, 0, "ontology", "", "duplicate ontology '" + o.short_name + "'");
  }
  std::set<std::string> ids;
  for (const auto& q : corpus.questions) {
    if (!ids.insert(q.id).second)
      throw CorpusError(source_name, 0, "id", q.id, "duplicate id '" + q.id + "'");
    if (!names.count(q.ontology))
      throw CorpusError(source_name, 0, "ontology", q.id, "unresolvable ontology '" + q.ontology + "'");
    std::vector<Span> spans;
    try {
      spans = find_placeholders(q.text);
    } catch (const PlaceholderError& e) {
      throw CorpusError(source_name, 0, "cq", q.id, e.what());
    }
    if (spans != q.placeholders)
      throw CorpusError(source_name, 0, "cq", q.id, "placeholder spans disagree with text");
  }
}

std::vector<ParsedQuery> parse_queries(const Corpus& corpus) {
  std::map<std::string, sparql::PrefixTable> tables;
  for (const auto& o : corpus.ontologies) tables[o.short_name] = effective_prefixes(o);
  std::vector<ParsedQuery> out;
  for (std::size_t i = 0; i < corpus.questions.size(); ++i) {
    const auto& q = corpus.questions[i];
    if (!q.query_text) continue;
    ParsedQuery p;
    p.question_index = i;
    p.id = q.id;
    p.ontology = q.ontology;
    try {
      p.ast = sparql::parse_query(*q.query_text, tables[q.ontology]);
    } catch (const sparql::ParseError& e) {
      p.error = e.what();
    }
    out.push_back(std::move(p));
  }
  return out;
}

TranslatabilityReport translatability_report(const Corpus& corpus,
                                             const std::vector<ParsedQuery>& parsed) {
  TranslatabilityReport report;
  std::map<std::string, TranslatabilityRow> rows;
  for (const auto& o : corpus.ontologies) rows[o.short_name].ontology = o.short_name;
  for (const auto& q : corpus.questions) ++rows[q.ontology].cq_count;
  for (const auto& p : parsed) {
    if (p.ast)
      ++rows[p.ontology].translated_count;
    else
      report.failures.push_back(p);
  }
  TranslatabilityRow total{"Total", 0, 0};
  for (const auto& o : corpus.ontologies) {
    report.rows.push_back(rows[o.short_name]);
    total.cq_count += rows[o.short_name].cq_count;
    total.translated_count += rows[o.short_name].translated_count;
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const TranslatabilityRow& a, const TranslatabilityRow& b) {
                     return a.cq_count > b.cq_count;
                   });
  report.rows.push_back(total);
  return report;
}

TranslatabilityReport translatability_report(const Corpus& corpus) {
  return translatability_report(corpus, parse_queries(corpus));
}

}  // namespace cqkit
