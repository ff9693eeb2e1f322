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

#include "cqkit/reports.hpp"

#include <map>
#include <string>

#include "cqkit/calibration.hpp"
#include "cqkit/text.hpp"

namespace cqkit::reports {

namespace {

std::string num(std::size_t n) { return std::to_string(n); }

std::string delta(long long ours, long long ref) {
  long long d = ours - ref;
  return d > 0 ? "+" + std::to_string(d) : std::to_string(d);
}

std::string delta(double ours, double ref) {
  double d = ours - ref;
  return (d > 0 ? "+" : "") + format_double(d, 1);
}

std::string join_set(const std::set<std::string>& s) {
  return text::join(std::vector<std::string>(s.begin(), s.end()), ", ");
}

std::string verb_name(sparql::QueryVerb v) { return v == sparql::QueryVerb::Ask ? "ASK" : "SELECT"; }

std::string target_label(const SignalTarget& t) {
  switch (t.kind) {
    case TargetKind::QueryVerb:
      return verb_name(t.verb);
    case TargetKind::KeywordPresent:
      return t.keyword;
    case TargetKind::SignatureSkeleton: {
      std::string out = t.where_skeleton;
      for (const auto& alt : t.alternative_skeletons) out += " or " + alt;
      return out;
    }
  }
  return "";
}

}  // namespace

Table translatability_table(const TranslatabilityReport& report, bool calibrate) {
  Table t{"Translatability of competency questions", {"Ontology", "CQs", "Translated"}, {}};
  if (calibrate)
    t.columns.insert(t.columns.end(), {"Published CQs", "Published translated", "Delta CQs",
                                       "Delta translated"});
  for (const auto& r : report.rows) {
    std::vector<std::string> row = {r.ontology, num(r.cq_count), num(r.translated_count)};
    if (calibrate) {
      const reference::TranslatabilityRef* ref = nullptr;
      for (const auto& x : reference::translatability())
        if (x.ontology == r.ontology) ref = &x;
      if (ref)
        row.insert(row.end(), {num(ref->cqs), num(ref->translated),
                               delta(static_cast<long long>(r.cq_count), static_cast<long long>(ref->cqs)),
                               delta(static_cast<long long>(r.translated_count),
                                     static_cast<long long>(ref->translated))});
      else
        row.insert(row.end(), {"", "", "", ""});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table parse_failures_table(const TranslatabilityReport& report) {
  Table t{"Queries that failed to parse", {"CQ", "Ontology", "Error"}, {}};
  for (const auto& f : report.failures) t.rows.push_back({f.id, f.ontology, f.error});
  return t;
}

Table keyword_table(const sparql::KeywordReport& report, bool calibrate) {
  Table t{"Keywords usage among SPARQL-OWL queries", {"Keyword", "Count"}, {}};
  for (const auto& o : report.ontologies) t.columns.push_back(o);
  if (calibrate) t.columns.insert(t.columns.end(), {"Published count", "Delta", "Per-ontology match"});
  for (const auto& r : report.rows) {
    std::vector<std::string> row = {r.keyword, num(r.total)};
    for (const auto& o : report.ontologies) {
      auto it = r.per_ontology.find(o);
      row.push_back(num(it == r.per_ontology.end() ? 0 : it->second));
    }
    if (calibrate) {
      const reference::KeywordRef* ref = nullptr;
      for (const auto& k : reference::keywords())
        if (k.keyword == r.keyword) ref = &k;
      if (ref) {
        bool same = true;
        for (const auto& o : report.ontologies) {
          auto a = r.per_ontology.find(o);
          auto b = ref->per_ontology.find(o);
          std::size_t x = a == r.per_ontology.end() ? 0 : a->second;
          std::size_t y = b == ref->per_ontology.end() ? 0 : b->second;
          same = same && x == y;
        }
        row.insert(row.end(), {num(ref->total),
                               delta(static_cast<long long>(r.total), static_cast<long long>(ref->total)),
                               same ? "yes" : "no"});
      } else {
        row.insert(row.end(), {"", "", ""});
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table candidates_table(const Corpus& corpus, const std::vector<CqAnnotation>& annotations) {
  Table t{"Pattern candidates", {"CQ", "Ontology", "Dematerialized", "Question", "Candidate", "Source"}, {}};
  for (const auto& a : annotations) {
    const auto* q = corpus.find_question(a.cq_id);
    std::string source = a.overridden ? "override" : a.error.empty() ? "tagger" : "error: " + a.error;
    t.rows.push_back({a.cq_id, q ? q->ontology : "", q && q->dematerialized() ? "yes" : "no",
                      q ? q->text : "", a.candidate, source});
  }
  return t;
}

Table rejections_table(const FilterResult& filtered) {
  Table t{"Rejected pattern candidates", {"CQ", "Candidate", "Reason"}, {}};
  for (const auto& r : filtered.rejected) t.rows.push_back({r.cq_id, r.text, r.reason});
  return t;
}

Table patterns_table(const std::vector<Pattern>& patterns) {
  Table t{"Pattern inventory", {"Pattern", "Level", "Support", "Ontologies", "CQs"}, {}};
  for (const auto& p : patterns)
    t.rows.push_back({p.text, std::string(level_name(p.level)), num(p.support.size()),
                      join_set(p.ontologies), text::join(p.support, " ")});
  return t;
}

Table coverage_table(const std::vector<CoverageRow>& rows, bool calibrate) {
  Table t{"Number of pattern candidates and actual patterns",
          {"Ontology", "Candidates", "Patterns", "Distinct patterns", "CQs covered",
           "Materialized", "Dematerialized", "Distinct higher-level"},
          {}};
  if (calibrate)
    t.columns.insert(t.columns.end(), {"Published distinct", "Delta distinct", "Published covered",
                                       "Delta covered", "Published higher-level", "Delta higher-level"});
  for (const auto& r : rows) {
    std::vector<std::string> row = {r.ontology, num(r.candidates), num(r.patterns), num(r.distinct),
                                    format_percent(r.covered_percent), num(r.materialized),
                                    num(r.dematerialized), num(r.higher)};
    if (calibrate) {
      const reference::CoverageRef* ref = nullptr;
      for (const auto& x : reference::coverage())
        if (x.ontology == r.ontology) ref = &x;
      if (ref)
        row.insert(row.end(),
                   {num(ref->distinct),
                    delta(static_cast<long long>(r.distinct), static_cast<long long>(ref->distinct)),
                    format_percent(ref->covered_percent), delta(r.covered_percent, ref->covered_percent),
                    num(ref->higher),
                    delta(static_cast<long long>(r.higher), static_cast<long long>(ref->higher))});
      else
        row.insert(row.end(), 6, "");
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table reuse_table(const std::vector<ReuseRow>& rows, PatternLevel level, bool calibrate) {
  bool higher = level == PatternLevel::Higher;
  Table t{higher ? "Higher-level patterns shared by several CQ sets"
                 : "Patterns shared by several CQ sets",
          {"Pattern", "Ontologies"},
          {}};
  if (calibrate) t.columns.push_back("Published");
  const auto& refs = higher ? reference::shared_higher_patterns() : reference::shared_patterns();
  auto published = [&](const std::string& text, const std::set<std::string>& onts) {
    for (const auto& r : refs)
      if (r.text == text) return r.ontologies == onts ? std::string("same") : "as " + join_set(r.ontologies);
    return std::string("not listed");
  };
  for (const auto& r : rows) {
    std::vector<std::string> row = {r.text, join_set(r.ontologies)};
    if (calibrate) row.push_back(published(r.text, r.ontologies));
    t.rows.push_back(std::move(row));
  }
  if (calibrate)
    for (const auto& ref : refs) {
      bool found = false;
      for (const auto& r : rows) found = found || r.text == ref.text;
      if (!found) t.rows.push_back({ref.text, "", "missing (published " + join_set(ref.ontologies) + ")"});
    }
  return t;
}

Table average_table(const std::vector<AverageRow>& patterns, const std::vector<AverageRow>& higher) {
  Table t{"Average CQs covered by a single pattern",
          {"Ontology", "CQs covered", "Distinct patterns", "Average", "Distinct higher-level",
           "Average higher-level"},
          {}};
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const auto& p = patterns[i];
    std::vector<std::string> row = {p.ontology, num(p.covered), num(p.distinct), format_double(p.average, 2)};
    if (i < higher.size()) {
      row.push_back(num(higher[i].distinct));
      row.push_back(format_double(higher[i].average, 2));
    } else {
      row.insert(row.end(), {"", ""});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

std::string dinde_text(const std::set<Dinde>& d) {
  std::vector<std::string> parts;
  for (auto x : d) parts.emplace_back(feature_name(x));
  return text::join(parts, " ");
}

}  // namespace

Table features_table(const std::vector<std::pair<std::string, CqFeatures>>& features) {
  Table t{"Question features", {"CQ", "QT", "QP", "MOD", "DINDE"}, {}};
  for (const auto& [id, f] : features)
    t.rows.push_back({id, std::string(feature_name(f.question_type)), std::string(feature_name(f.polarity)),
                      std::string(feature_name(f.modifier)), dinde_text(f.dinde)});
  return t;
}

Table features_summary_table(const std::vector<std::pair<std::string, CqFeatures>>& features) {
  std::map<std::vector<std::string>, std::size_t> counts;
  for (const auto& [id, f] : features)
    counts[{std::string(feature_name(f.question_type)), std::string(feature_name(f.polarity)),
            std::string(feature_name(f.modifier)), dinde_text(f.dinde)}]++;
  Table t{"Question feature combinations", {"QT", "QP", "MOD", "DINDE", "CQs"}, {}};
  for (const auto& [k, n] : counts) {
    auto row = k;
    row.push_back(num(n));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table signatures_table(const SignatureInventory& inventory, bool calibrate) {
  Table t{"Query signatures", {"Signature", "Count", "Share", "Cumulative", "Exact", "Skeleton"}, {}};
  for (const auto& g : inventory.groups)
    t.rows.push_back({g.id, num(g.count), format_percent(percent(g.count, inventory.total)),
                      format_percent(g.cumulative_percent), g.signature.exact ? "yes" : "no",
                      g.signature.skeleton});
  if (calibrate) {
    double top9 = inventory.top_coverage(9);
    t.rows.push_back({"distinct signatures", num(inventory.groups.size()), "", "", "",
                      "published " + num(reference::kSignatureCount) + ", delta " +
                          delta(static_cast<long long>(inventory.groups.size()),
                                static_cast<long long>(reference::kSignatureCount))});
    t.rows.push_back({"top-9 coverage", "", "", format_percent(top9), "",
                      "published " + format_percent(reference::kTop9Coverage) + ", delta " +
                          delta(top9, reference::kTop9Coverage)});
  }
  return t;
}

Table signature_members_table(const SignatureInventory& inventory) {
  Table t{"Signature group members", {"Signature", "Count", "Members"}, {}};
  for (const auto& g : inventory.groups)
    t.rows.push_back({g.id, num(g.count), text::join(g.signature.member_query_ids, " ")});
  return t;
}

Table skipped_queries_table(const SignatureInventory& inventory) {
  Table t{"Queries left out of signature grouping", {"CQ", "Reason"}, {}};
  for (const auto& s : inventory.skipped) t.rows.push_back({s.id, s.reason});
  return t;
}

Table mapping_edges_table(const Mapping& mapping) {
  Table t{"Pattern to signature mapping", {"Pattern", "Level", "Signature", "Witnesses", "CQs"}, {}};
  for (const auto& e : mapping.edges)
    t.rows.push_back({e.pattern_text, std::string(level_name(e.pattern_level)), e.signature_id,
                      num(e.witness_cq_ids.size()), text::join(e.witness_cq_ids, " ")});
  return t;
}

Table mapping_summary_table(const Mapping& mapping) {
  const auto& s = mapping.summary;
  Table t{"Mapping summary", {"Measure", "Value"}, {}};
  t.rows = {{"patterns", num(s.patterns)},
            {"signatures", num(s.signatures)},
            {"edges", num(s.edges)},
            {"patterns with 2+ signatures", num(s.patterns_with_multiple_signatures)},
            {"signatures with 2+ patterns", num(s.signatures_with_multiple_patterns)}};
  for (const auto& [d, n] : s.pattern_degree_histogram)
    t.rows.push_back({"patterns with degree " + num(d), num(n)});
  for (const auto& [d, n] : s.signature_degree_histogram)
    t.rows.push_back({"signatures with degree " + num(d), num(n)});
  return t;
}

Table signals_table(const std::vector<SignalResult>& results, bool calibrate) {
  Table t{"Signal words and phrases", {"Rule", "Signal", "Target", "Count", "Share", "Evidential"}, {}};
  if (calibrate) t.columns.insert(t.columns.end(), {"Published", "Delta numerator", "Delta denominator"});
  for (const auto& r : results) {
    std::vector<std::string> row = {r.rule.id, r.rule.signal, target_label(r.rule.target),
                                    num(r.numerator) + "/" + num(r.denominator),
                                    format_percent(percent(r.numerator, r.denominator)),
                                    r.non_evidential ? "no" : "yes"};
    if (calibrate) {
      const reference::SignalRef* ref = nullptr;
      for (const auto& x : reference::signals())
        if (x.rule_id == r.rule.id) ref = &x;
      if (ref)
        row.insert(row.end(), {format_fraction(ref->numerator, ref->denominator),
                               delta(static_cast<long long>(r.numerator), static_cast<long long>(ref->numerator)),
                               delta(static_cast<long long>(r.denominator),
                                     static_cast<long long>(ref->denominator))});
      else
        row.insert(row.end(), {"", "", ""});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table discovery_table(const std::vector<SignalCandidate>& candidates) {
  Table t{"Signal candidates", {"N-gram", "Group", "Subgroup", "Ratio", "Signature", "Skeleton"}, {}};
  for (const auto& c : candidates)
    t.rows.push_back({c.ngram, num(c.group_size), num(c.subgroup_size), format_double(c.ratio, 3),
                      c.signature_id, c.skeleton});
  return t;
}

}  // namespace cqkit::reports
