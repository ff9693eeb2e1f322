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

// cqkit: competency question and SPARQL-OWL corpus analysis.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cqkit/calibration.hpp"
#include "cqkit/corpus.hpp"
#include "cqkit/correspondence.hpp"
#include "cqkit/linguistics.hpp"
#include "cqkit/patterns.hpp"
#include "cqkit/pipeline.hpp"
#include "cqkit/reports.hpp"
#include "cqkit/signatures.hpp"
#include "cqkit/sparql/parser.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using cqkit::Table;

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kInternal = 2;

// Thrown for bad user input (missing files, bad options).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string corpus;
  std::string format = "auto";
  std::string tagger = "builtin";
  std::string conllu_dir;
  std::string overrides;
  std::string out = "cqkit_out";
  std::vector<std::string> emit = {"csv", "md"};
  std::size_t max_triples = 16;
  std::string stoplist;
  std::size_t min_support = 2;
  std::string rules;
  bool calibrate = false;
};

class Writer {
 public:
  Writer(const RunConfig& config, std::string command) : config_(config), command_(std::move(command)) {
    std::error_code ec;
    fs::create_directories(config.out, ec);
    if (ec) throw UsageError("cannot create output directory '" + config.out + "': " + ec.message());
  }

  void table(const std::string& name, const Table& t) {
    for (const auto& fmt : config_.emit) {
      if (fmt == "csv")
        file(name + ".csv", t.to_csv());
      else if (fmt == "md")
        file(name + ".md", t.to_markdown());
    }
  }

  void file(const std::string& name, const std::string& content) {
    fs::path p = fs::path(config_.out) / name;
    std::ofstream out(p, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + p.string() + "'");
    out << content;
    files_.insert(name);
  }

  void manifest() {
    nlohmann::json j;
    j["tool"] = "cqkit";
    j["command"] = command_;
    j["config"] = {{"corpus", config_.corpus},
                   {"format", config_.format},
                   {"tagger", config_.tagger},
                   {"conllu_dir", config_.conllu_dir},
                   {"overrides", config_.overrides},
                   {"emit", config_.emit},
                   {"max_triples", config_.max_triples},
                   {"stoplist", config_.stoplist},
                   {"min_support", config_.min_support},
                   {"rules", config_.rules},
                   {"paper_calibration", config_.calibrate}};
    j["files"] = std::vector<std::string>(files_.begin(), files_.end());
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["generated_at"] = buf;
    std::ofstream out(fs::path(config_.out) / "run_manifest.json");
    out << j.dump(2) << '\n';
  }

 private:
  const RunConfig& config_;
  std::string command_;
  std::set<std::string> files_;
};

cqkit::Corpus load(const RunConfig& c) {
  if (c.corpus.empty()) throw UsageError("--corpus is required");
  cqkit::CorpusFormat fmt;
  if (c.format == "jsonl")
    fmt = cqkit::CorpusFormat::Jsonl;
  else if (c.format == "dataset")
    fmt = cqkit::CorpusFormat::DatasetDir;
  else
    fmt = fs::is_directory(c.corpus) ? cqkit::CorpusFormat::DatasetDir : cqkit::CorpusFormat::Jsonl;
  auto corpus = cqkit::load_corpus(c.corpus, fmt);
  cqkit::validate_corpus(corpus, c.corpus);
  return corpus;
}

cqkit::PipelineConfig pipeline_config(const RunConfig& c) {
  cqkit::PipelineConfig p;
  if (c.tagger == "conllu") {
    if (c.conllu_dir.empty()) throw UsageError("--tagger conllu needs --conllu-dir");
    p.tagger = cqkit::TaggerKind::Conllu;
    p.conllu_path = c.conllu_dir;
  } else if (c.tagger != "builtin") {
    throw UsageError("--tagger must be builtin or conllu");
  }
  if (!c.overrides.empty()) p.overrides = cqkit::ling::load_overrides(c.overrides);
  if (c.max_triples == 0) throw UsageError("--max-triples must be positive");
  p.canonicalize.max_triples = c.max_triples;
  if (!c.stoplist.empty()) p.discover.stoplist = cqkit::load_stoplist(c.stoplist);
  if (c.min_support < 2) throw UsageError("--min-support must be at least 2");
  p.discover.min_support = c.min_support;
  if (!c.rules.empty()) p.rules = cqkit::load_signal_rules(c.rules);
  return p;
}

// ---------------------------------------------------------------------------
// Emitters

void emit_chunks(Writer& w, const cqkit::Corpus& corpus, const cqkit::AnalysisResult& r) {
  std::ostringstream jsonl;
  for (const auto& a : r.annotations) {
    nlohmann::json j;
    j["id"] = a.cq_id;
    j["candidate"] = a.candidate;
    if (!a.error.empty()) j["error"] = a.error;
    if (a.overridden) j["overridden"] = true;
    if (a.sentence) {
      auto& toks = j["tokens"];
      toks = nlohmann::json::array();
      for (const auto& t : a.sentence->tokens)
        toks.push_back({{"form", t.surface},
                        {"upos", std::string(cqkit::ling::pos_name(t.pos))},
                        {"head", t.head},
                        {"deprel", t.deprel}});
      auto& chunks = j["chunks"];
      chunks = nlohmann::json::array();
      for (const auto& c : a.sentence->chunks) {
        nlohmann::json spans = nlohmann::json::array();
        for (const auto& s : c.spans) spans.push_back({s.begin, s.end});
        chunks.push_back({{"kind", c.kind == cqkit::ling::ChunkKind::EC ? "EC" : "PC"},
                          {"ordinal", c.ordinal},
                          {"text", c.surface_text},
                          {"spans", spans}});
      }
    }
    jsonl << j.dump() << '\n';
  }
  w.file("chunks.jsonl", jsonl.str());
  w.table("candidates", cqkit::reports::candidates_table(corpus, r.annotations));
}

void emit_patterns(Writer& w, const RunConfig& c, const cqkit::AnalysisResult& r) {
  std::ostringstream p, h;
  cqkit::write_patterns_jsonl(r.filtered.patterns, p);
  cqkit::write_patterns_jsonl(r.higher, h);
  w.file("patterns.jsonl", p.str());
  w.file("higher_patterns.jsonl", h.str());
  w.table("patterns", cqkit::reports::patterns_table(r.filtered.patterns));
  w.table("higher_patterns", cqkit::reports::patterns_table(r.higher));
  w.table("rejected_candidates", cqkit::reports::rejections_table(r.filtered));
  w.table("coverage", cqkit::reports::coverage_table(r.coverage, c.calibrate));
  w.table("shared_patterns",
          cqkit::reports::reuse_table(r.reuse_patterns, cqkit::PatternLevel::Pattern, c.calibrate));
  w.table("shared_higher_patterns",
          cqkit::reports::reuse_table(r.reuse_higher, cqkit::PatternLevel::Higher, c.calibrate));
  w.table("average_cqs_per_pattern",
          cqkit::reports::average_table(r.average_patterns, r.average_higher));
}

void emit_classify(Writer& w, const cqkit::AnalysisResult& r) {
  w.table("features", cqkit::reports::features_table(r.features));
  w.table("feature_combinations", cqkit::reports::features_summary_table(r.features));
}

void emit_parse(Writer& w, const RunConfig& c, const cqkit::AnalysisResult& r) {
  std::ostringstream jsonl;
  for (const auto& p : r.parsed) {
    nlohmann::json j;
    j["id"] = p.id;
    j["ontology"] = p.ontology;
    if (p.ast)
      j["query"] = cqkit::sparql::serialize_query(*p.ast);
    else
      j["error"] = p.error;
    jsonl << j.dump() << '\n';
  }
  w.file("parsed_queries.jsonl", jsonl.str());
  w.table("translatability", cqkit::reports::translatability_table(r.translatability, c.calibrate));
  w.table("parse_errors", cqkit::reports::parse_failures_table(r.translatability));
  for (const auto& f : r.translatability.failures)
    std::cerr << "parse error: [" << f.id << "] " << f.error << '\n';
}

void emit_keywords(Writer& w, const RunConfig& c, const cqkit::AnalysisResult& r) {
  w.table("keywords", cqkit::reports::keyword_table(r.keywords, c.calibrate));
}

void emit_signatures(Writer& w, const RunConfig& c, const cqkit::AnalysisResult& r) {
  std::ostringstream jsonl;
  for (const auto& g : r.signatures.groups) {
    nlohmann::json j;
    j["id"] = g.id;
    j["skeleton"] = g.signature.skeleton;
    j["verb"] = g.signature.verb == cqkit::sparql::QueryVerb::Ask ? "ASK" : "SELECT";
    j["distinct"] = g.signature.distinct;
    j["exact"] = g.signature.exact;
    j["members"] = g.signature.member_query_ids;
    j["count"] = g.count;
    jsonl << j.dump() << '\n';
  }
  w.file("signatures.jsonl", jsonl.str());
  w.table("signatures", cqkit::reports::signatures_table(r.signatures, c.calibrate));
  w.table("signature_members", cqkit::reports::signature_members_table(r.signatures));
  w.table("skipped_queries", cqkit::reports::skipped_queries_table(r.signatures));
  for (const auto& s : r.signatures.skipped) std::cerr << "skipped: [" << s.id << "] " << s.reason << '\n';
}

void emit_map(Writer& w, const cqkit::AnalysisResult& r) {
  w.table("mapping", cqkit::reports::mapping_edges_table(r.mapping));
  w.table("mapping_summary", cqkit::reports::mapping_summary_table(r.mapping));
}

void emit_signals(Writer& w, const RunConfig& c, const cqkit::AnalysisResult& r) {
  w.table("signals", cqkit::reports::signals_table(r.signals, c.calibrate));
  w.table("signal_candidates", cqkit::reports::discovery_table(r.discovered));
}

void print_annotation_errors(const cqkit::AnalysisResult& r) {
  for (const auto& a : r.annotations)
    if (!a.error.empty()) std::cerr << "annotation error: [" << a.cq_id << "] " << a.error << '\n';
}

int run(const std::string& command, const RunConfig& c) {
  auto corpus = load(c);
  if (command == "validate") {
    std::size_t queries = 0;
    for (const auto& q : corpus.questions) queries += q.query_text.has_value();
    std::cerr << "ok: " << corpus.questions.size() << " questions, " << queries << " queries, "
              << corpus.ontologies.size() << " ontologies\n";
    return kOk;
  }

  auto config = pipeline_config(c);
  Writer w(c, command);
  cqkit::AnalysisResult r;
  if (command == "chunk" || command == "patterns" || command == "classify") {
    cqkit::run_pattern_stages(corpus, config, r);
    print_annotation_errors(r);
    if (command == "chunk") emit_chunks(w, corpus, r);
    if (command == "patterns") emit_patterns(w, c, r);
    if (command == "classify") emit_classify(w, r);
  } else if (command == "parse" || command == "keywords" || command == "signatures") {
    cqkit::run_query_stages(corpus, config, r);
    if (command == "parse") emit_parse(w, c, r);
    if (command == "keywords") emit_keywords(w, c, r);
    if (command == "signatures") emit_signatures(w, c, r);
  } else {
    r = cqkit::run_pipeline(corpus, config);
    print_annotation_errors(r);
    if (command == "map") emit_map(w, r);
    if (command == "signals") emit_signals(w, c, r);
    if (command == "report") {
      emit_chunks(w, corpus, r);
      emit_patterns(w, c, r);
      emit_classify(w, r);
      emit_parse(w, c, r);
      emit_keywords(w, c, r);
      emit_signatures(w, c, r);
      emit_map(w, r);
      emit_signals(w, c, r);
    }
  }
  w.manifest();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Competency question and SPARQL-OWL corpus analysis"};
  app.require_subcommand(1);
  RunConfig config;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "Check corpus integrity"},
      {"chunk", "Annotate CQs and write chunks and pattern candidates"},
      {"patterns", "Pattern inventories, coverage, reuse and averages"},
      {"classify", "Question type, polarity, modifier and domain-independent features"},
      {"parse", "Parse queries and list parse errors"},
      {"keywords", "Keyword usage across queries"},
      {"signatures", "Group queries by canonical signature"},
      {"map", "Pattern to signature mapping"},
      {"signals", "Mine signal rules and discover candidate signals"},
      {"report", "Every report in one pass"}};

  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--corpus", config.corpus, "Corpus JSONL file or dataset directory")->required();
    sub->add_option("--format", config.format, "jsonl, dataset or auto")
        ->check(CLI::IsMember({"auto", "jsonl", "dataset"}));
    if (name == "validate") continue;
    sub->add_option("--tagger", config.tagger, "builtin or conllu")
        ->check(CLI::IsMember({"builtin", "conllu"}));
    sub->add_option("--conllu-dir", config.conllu_dir, "CoNLL-U file or directory");
    sub->add_option("--overrides", config.overrides, "JSON object of cq id -> pattern");
    sub->add_option("--out", config.out, "Output directory");
    sub->add_option("--emit", config.emit, "Report formats")
        ->delimiter(',')
        ->check(CLI::IsMember({"csv", "md"}));
    sub->add_option("--max-triples", config.max_triples, "Signature triple bound");
    sub->add_option("--stoplist", config.stoplist, "Stop-word file, one per line");
    sub->add_option("--min-support", config.min_support, "Minimum subgroup size for discovery");
    sub->add_option("--rules", config.rules, "Signal rules JSON file");
    sub->add_flag("--paper-calibration", config.calibrate, "Add published reference values and deltas");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, config);
  } catch (const cqkit::CorpusError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const cqkit::ling::AnnotationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const cqkit::RuleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
