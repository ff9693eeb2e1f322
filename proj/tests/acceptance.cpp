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


// Acceptance runner. One line per criterion.
//
//   cqkit_acceptance [--dataset PATH] [--strict] [--seed N]
//
// PATH is a dataset directory or a JSONL corpus; CQKIT_PUBLISHED_DATASET is
// read when the flag is absent. Criteria that need the published dataset
// report FAIL when it is missing; they only affect the exit code with
// --strict.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cqkit/calibration.hpp"
#include "cqkit/pipeline.hpp"
#include "cqkit/reports.hpp"
#include "cqkit/sparql/parser.hpp"
#include "cqkit/table.hpp"
#include "cqkit/text.hpp"
#include "properties.hpp"

namespace fs = std::filesystem;
using namespace cqkit;

namespace {

constexpr std::size_t kKeywordRowsRequired = 18;
constexpr std::size_t kVerbSlack = 2;
constexpr std::size_t kSignatureMin = 40;
constexpr std::size_t kSignatureMax = 55;
constexpr double kTop9Slack = 8.0;
constexpr double kInventorySlack = 0.15;
constexpr std::size_t kPatternsRef = 106;
constexpr std::size_t kHigherRef = 81;
constexpr std::size_t kTrials = 1000;
constexpr std::size_t kFilterCorpusMax = 50;

struct Outcome {
  bool pass = false;
  bool evaluated = true;
  std::string detail;
  std::vector<std::string> notes;
};

struct Runner {
  bool any_evaluated_failure = false;
  bool any_failure = false;

  template <typename F>
  void run(int number, const std::string& name, F&& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("error: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) {
      any_failure = true;
      if (o.evaluated) any_evaluated_failure = true;
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << number << "] " << name << ": " << o.detail << " ("
              << format_double(secs, 2) << "s)\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
};

Outcome missing_dataset() {
  Outcome o;
  o.evaluated = false;
  o.detail = "published dataset not found (pass --dataset or set CQKIT_PUBLISHED_DATASET)";
  return o;
}

std::string fraction(std::size_t n, std::size_t d) { return std::to_string(n) + "/" + std::to_string(d); }

bool within(std::size_t got, std::size_t want, std::size_t slack) {
  return got + slack >= want && got <= want + slack;
}

Outcome translatability(const AnalysisResult& r) {
  Outcome o;
  std::size_t exact = 0;
  const auto& ref = reference::translatability();
  for (const auto& want : ref) {
    const TranslatabilityRow* got = nullptr;
    for (const auto& row : r.translatability.rows)
      if (row.ontology == want.ontology) got = &row;
    if (got && got->cq_count == want.cqs && got->translated_count == want.translated) {
      ++exact;
    } else {
      o.notes.push_back(want.ontology + ": expected (" + std::to_string(want.cqs) + "," +
                        std::to_string(want.translated) + ") got " +
                        (got ? "(" + std::to_string(got->cq_count) + "," + std::to_string(got->translated_count) + ")"
                             : std::string("nothing")));
    }
  }
  o.pass = exact == ref.size();
  o.detail = std::to_string(exact) + "/" + std::to_string(ref.size()) + " rows exact";
  return o;
}

Outcome keywords(const AnalysisResult& r) {
  Outcome o;
  std::size_t exact = 0;
  const auto& ref = reference::keywords();
  for (const auto& want : ref) {
    const sparql::KeywordRow* got = nullptr;
    for (const auto& row : r.keywords.rows)
      if (row.keyword == want.keyword) got = &row;
    bool same = got && got->total == want.total;
    if (same) {
      for (const auto& ont : r.keywords.ontologies) {
        auto a = got->per_ontology.count(ont) ? got->per_ontology.at(ont) : 0;
        auto b = want.per_ontology.count(ont) ? want.per_ontology.at(ont) : 0;
        if (a != b) same = false;
      }
    }
    if (same) {
      ++exact;
      continue;
    }
    std::ostringstream s;
    s << want.keyword << ": expected " << want.total << " got " << (got ? got->total : 0);
    if (got)
      for (const auto& [ont, n] : got->per_ontology) s << " " << ont << "=" << n;
    o.notes.push_back(s.str());
  }
  o.pass = exact >= kKeywordRowsRequired;
  o.detail = std::to_string(exact) + "/" + std::to_string(ref.size()) + " rows exact (need " +
             std::to_string(kKeywordRowsRequired) + ")";
  return o;
}

Outcome verb_rules(const AnalysisResult& r) {
  Outcome o;
  o.pass = true;
  std::vector<std::string> parts;
  for (const auto& want : reference::signals()) {
    std::size_t slack;
    if (want.rule_id == "wh-initial" || want.rule_id == "yes-no-initial") slack = kVerbSlack;
    else if (want.rule_id == "or-union" || want.rule_id == "and-intersection") slack = 0;
    else continue;
    const SignalResult* got = nullptr;
    for (const auto& s : r.signals)
      if (s.rule.id == want.rule_id) got = &s;
    bool ok = got && within(got->numerator, want.numerator, slack) && within(got->denominator, want.denominator, slack);
    if (!ok) o.pass = false;
    parts.push_back(want.rule_id + " " + (got ? fraction(got->numerator, got->denominator) : "-") + " vs " +
                    fraction(want.numerator, want.denominator) + (ok ? "" : " (off)"));
  }
  o.detail = text::join(parts, ", ");
  return o;
}

Outcome parser_totality(const AnalysisResult& r) {
  Outcome o;
  std::size_t parsed = 0, round = 0;
  for (const auto& p : r.parsed) {
    if (!p.ast) {
      o.notes.push_back(p.id + ": " + p.error);
      continue;
    }
    ++parsed;
    try {
      auto again = sparql::parse_query(sparql::serialize_query(*p.ast), p.ast->prefix_table);
      again.prefix_table = p.ast->prefix_table;
      if (again == *p.ast) ++round;
      else o.notes.push_back(p.id + ": round trip changed the tree");
    } catch (const std::exception& e) {
      o.notes.push_back(p.id + ": reparse failed: " + e.what());
    }
  }
  const std::size_t want = reference::translatability().back().translated;
  o.pass = parsed == want && round == want && r.parsed.size() == want;
  o.detail = "parsed " + fraction(parsed, r.parsed.size()) + ", round trip " + fraction(round, parsed) +
             " (expected " + std::to_string(want) + ")";
  return o;
}

Outcome signatures(const AnalysisResult& r) {
  Outcome o;
  const auto& inv = r.signatures;
  std::size_t n = inv.groups.size();
  double top9 = inv.top_coverage(9);
  auto members = reports::signature_members_table(inv);
  std::set<std::string> listed;
  for (const auto& row : members.rows)
    if (!row.empty()) listed.insert(row[0]);
  bool all_listed = true;
  for (const auto& g : inv.groups)
    if (!listed.count(g.id)) all_listed = false;
  bool count_ok = n >= kSignatureMin && n <= kSignatureMax;
  bool cov_ok = std::fabs(top9 - reference::kTop9Coverage) <= kTop9Slack;
  o.pass = count_ok && cov_ok && all_listed && inv.skipped.empty();
  o.detail = std::to_string(n) + " signatures (ref " + std::to_string(reference::kSignatureCount) + "), top-9 " +
             format_percent(top9) + " (ref " + format_percent(reference::kTop9Coverage) + ")" +
             (all_listed ? "" : ", member listing incomplete") +
             (inv.skipped.empty() ? "" : ", " + std::to_string(inv.skipped.size()) + " skipped");
  std::size_t inexact = 0;
  for (const auto& g : inv.groups)
    if (!g.signature.exact) ++inexact;
  if (inexact) o.notes.push_back(std::to_string(inexact) + " groups canonicalized without exhaustive search");
  return o;
}

Outcome worked_examples() {
  Outcome o;
  std::size_t ok = 0, total = 0;
  for (const auto& ex : reference::chunking_examples()) {
    ++total;
    std::string got;
    try {
      got = ling::to_pattern_candidate(ling::analyze(ex.cq_id, ling::annotate_builtin(ex.text)));
    } catch (const std::exception& e) {
      got = std::string("error: ") + e.what();
    }
    if (got == ex.pattern) ++ok;
    else o.notes.push_back(ex.cq_id + ": expected '" + ex.pattern + "' got '" + got + "'");
  }
  for (const auto& fam : reference::normalization_families()) {
    for (const auto& v : fam.variants) {
      ++total;
      auto got = normalize_pattern_text(v);
      if (got == fam.higher) ++ok;
      else o.notes.push_back("'" + v + "' -> '" + got + "', expected '" + fam.higher + "'");
    }
  }
  o.pass = ok == total;
  o.detail = "worked examples " + fraction(ok, total);
  return o;
}

bool near(std::size_t got, std::size_t want) {
  return std::fabs(static_cast<double>(got) - static_cast<double>(want)) <= kInventorySlack * want;
}

Outcome pattern_inventory(const AnalysisResult* r) {
  Outcome examples = worked_examples();
  Outcome o;
  o.notes = examples.notes;
  if (!r) {
    o.evaluated = !examples.pass;
    o.detail = "published dataset not found; " + examples.detail;
    return o;
  }
  const auto& total = r->coverage.back();
  bool pat_ok = near(total.distinct, kPatternsRef);
  bool hi_ok = near(total.higher, kHigherRef);
  o.pass = pat_ok && hi_ok && examples.pass;
  o.detail = std::to_string(total.distinct) + " patterns (ref " + std::to_string(kPatternsRef) + "), " +
             std::to_string(total.higher) + " higher-level (ref " + std::to_string(kHigherRef) + "); " +
             examples.detail;
  return o;
}

Outcome property(const testing::PropertyReport& r, const std::string& what) {
  Outcome o;
  o.pass = r.ok();
  o.detail = what + " " + fraction(r.passed, r.trials);
  o.notes = r.failures;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cqkit acceptance runner"};
  std::string dataset;
  bool strict = false;
  std::uint64_t seed = 20190101;
  app.add_option("--dataset", dataset, "published dataset directory or JSONL corpus");
  app.add_flag("--strict", strict, "nonzero exit on any FAIL");
  app.add_option("--seed", seed, "seed for the randomized criteria");
  CLI11_PARSE(app, argc, argv);

  if (dataset.empty())
    if (const char* env = std::getenv("CQKIT_PUBLISHED_DATASET")) dataset = env;

  auto start = std::chrono::steady_clock::now();
  std::optional<AnalysisResult> result;
  if (!dataset.empty()) {
    if (!fs::exists(dataset)) {
      std::cerr << "dataset path does not exist: " << dataset << "\n";
      return 2;
    }
    auto format = fs::is_directory(dataset) ? CorpusFormat::DatasetDir : CorpusFormat::Jsonl;
    auto corpus = load_corpus(dataset, format);
    validate_corpus(corpus, dataset);
    result = run_pipeline(corpus, PipelineConfig{});
    std::cout << "dataset: " << dataset << " (" << corpus.questions.size() << " questions)\n";
  } else {
    std::cout << "dataset: none\n";
  }
  const AnalysisResult* r = result ? &*result : nullptr;

  Runner run;
  run.run(1, "translatability", [&] { return r ? translatability(*r) : missing_dataset(); });
  run.run(2, "keyword usage", [&] { return r ? keywords(*r) : missing_dataset(); });
  run.run(3, "signal verb rules", [&] { return r ? verb_rules(*r) : missing_dataset(); });
  run.run(4, "parser totality and round trip", [&] { return r ? parser_totality(*r) : missing_dataset(); });
  run.run(5, "signature inventory", [&] { return r ? signatures(*r) : missing_dataset(); });
  run.run(6, "pattern inventory", [&] { return pattern_inventory(r); });

  testing::Rng rng(seed);
  run.run(7, "signature invariance", [&] {
    auto inv = testing::check_signature_invariance(rng, kTrials);
    auto min = testing::check_canonical_minimum(rng, kTrials);
    Outcome o;
    o.pass = inv.ok() && min.ok();
    o.detail = "invariant " + fraction(inv.passed, inv.trials) + ", brute-force minimum " +
               fraction(min.passed, min.trials);
    o.notes = inv.failures;
    o.notes.insert(o.notes.end(), min.failures.begin(), min.failures.end());
    return o;
  });
  run.run(8, "normalization idempotence and EC monotonicity",
          [&] { return property(testing::check_normalization(rng, kTrials), "patterns"); });
  run.run(9, "filter monotonicity and dematerialized acceptance",
          [&] { return property(testing::check_filter(rng, kTrials, kFilterCorpusMax), "corpora"); });

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "total " << format_double(secs, 2) << "s\n";
  if (run.any_evaluated_failure) return 1;
  if (strict && run.any_failure) return 1;
  return 0;
}
