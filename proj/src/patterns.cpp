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

#include "cqkit/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>

#include "cqkit/table.hpp"
#include "cqkit/text.hpp"
#include "json.hpp"

namespace cqkit {

std::string_view level_name(PatternLevel level) {
  switch (level) {
    case PatternLevel::Candidate:
      return "candidate";
    case PatternLevel::Pattern:
      return "pattern";
    case PatternLevel::Higher:
      return "higher";
  }
  return "";
}

std::string pattern_key(std::string_view text) {
  std::string_view t = text::trim(text);
  while (!t.empty() && (t.back() == '?' || std::isspace(static_cast<unsigned char>(t.back()))))
    t.remove_suffix(1);
  return text::capitalize_first(t);
}

FilterResult filter_candidates(const std::vector<Candidate>& candidates) {
  std::map<std::string, std::size_t> counts;
  for (const auto& c : candidates) ++counts[pattern_key(c.text)];

  FilterResult out;
  std::map<std::string, std::size_t> index;
  for (const auto& c : candidates) {
    std::string key = pattern_key(c.text);
    if (!c.dematerialized && counts[key] < 2) {
      out.rejected.push_back({c.cq_id, key, "materialized candidate not shared with another CQ"});
      continue;
    }
    out.accepted.push_back(c);
    auto [it, fresh] = index.emplace(key, out.patterns.size());
    if (fresh) out.patterns.push_back({key, PatternLevel::Pattern, {}, {}});
    Pattern& p = out.patterns[it->second];
    p.support.push_back(c.cq_id);
    p.ontologies.insert(c.ontology);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

struct Word {
  std::string text;
  bool space_before = false;
};

bool punct_char(char c) { return std::string_view(",;:?!.()\"").find(c) != std::string_view::npos; }

std::vector<Word> split_words(std::string_view s) {
  std::vector<Word> out;
  bool space = false;
  std::string cur;
  bool cur_space = false;
  auto flush = [&] {
    if (!cur.empty()) out.push_back({cur, cur_space});
    cur.clear();
  };
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
      space = true;
    } else if (punct_char(c)) {
      flush();
      out.push_back({std::string(1, c), space});
      space = false;
    } else {
      if (cur.empty()) {
        cur_space = space;
        space = false;
      }
      cur += c;
    }
  }
  flush();
  return out;
}

std::string render(const std::vector<Word>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0 && words[i].space_before) out += ' ';
    out += words[i].text;
  }
  return out;
}

// "EC3" -> {'E', 3}; non-slots give {0, 0}.
std::pair<char, int> slot_of(std::string_view w) {
  if (w.size() < 3 || !(w.starts_with("EC") || w.starts_with("PC"))) return {0, 0};
  int n = 0;
  for (std::size_t i = 2; i < w.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(w[i]))) return {0, 0};
    n = n * 10 + (w[i] - '0');
  }
  return {w[0], n};
}

struct WordRule {
  std::vector<std::string_view> from;  // lowercase
  std::vector<std::string_view> to;
  bool initial_only = false;
};

const std::vector<WordRule>& word_rules() {
  static const std::vector<WordRule> rules = {
      {{"are"}, {"is"}},
      {{"any"}, {}},
      {{"did"}, {"do"}},
      {{"we"}, {"I"}},
      {{"does"}, {"do"}},
      {{"which", "of"}, {"which"}},
      {{"has"}, {"have"}},
      {{"which", "kind"}, {"what", "kind"}},
      {{"will"}, {"is"}},
      {{"which"}, {"what"}, true},
      {{"possible"}, {}},
      {{"are", "there"}, {}},
  };
  return rules;
}

bool apply_rule(std::vector<Word>& words, const WordRule& rule) {
  bool changed = false;
  std::size_t n = rule.from.size();
  for (std::size_t i = 0; i + n <= words.size();) {
    if (rule.initial_only && i > 0) break;
    bool match = true;
    for (std::size_t k = 0; k < n && match; ++k)
      match = text::to_lower(words[i + k].text) == rule.from[k];
    if (!match) {
      ++i;
      continue;
    }
    bool capital = std::isupper(static_cast<unsigned char>(words[i].text[0]));
    bool space = words[i].space_before;
    std::vector<Word> repl;
    for (auto t : rule.to) repl.push_back({std::string(t), true});
    if (!repl.empty()) {
      repl.front().space_before = space;
      if (capital) repl.front().text = text::capitalize_first(repl.front().text);
    }
    // Unchanged replacement ("which" in "which of" at a fixpoint) would loop.
    bool same = repl.size() == n;
    for (std::size_t k = 0; same && k < n; ++k) same = repl[k].text == words[i + k].text;
    if (same) {
      i += n;
      continue;
    }
    words.erase(words.begin() + i, words.begin() + i + n);
    words.insert(words.begin() + i, repl.begin(), repl.end());
    if (repl.empty() && i < words.size()) {
      words[i].space_before = space;
      if (i == 0 && capital) words[0].text = text::capitalize_first(words[0].text);
    }
    changed = true;
    i += repl.size();
  }
  return changed;
}

bool merge_ecs(std::vector<Word>& words) {
  static const std::set<std::string, std::less<>> preps = {"for", "of", "in", "with", "from"};
  bool changed = false;
  for (std::size_t i = 0; i + 2 < words.size();) {
    if (slot_of(words[i].text).first == 'E' && preps.count(text::to_lower(words[i + 1].text)) &&
        slot_of(words[i + 2].text).first == 'E') {
      words.erase(words.begin() + i + 1, words.begin() + i + 3);
      changed = true;
    } else {
      ++i;
    }
  }
  return changed;
}

void renumber(std::vector<Word>& words) {
  std::map<int, int> ec, pc;
  for (auto& w : words) {
    auto [kind, n] = slot_of(w.text);
    if (!kind) continue;
    auto& m = kind == 'E' ? ec : pc;
    auto [it, fresh] = m.emplace(n, static_cast<int>(m.size()) + 1);
    w.text = std::string(1, kind) + "C" + std::to_string(it->second);
  }
}

}  // namespace

std::string normalize_pattern_text(std::string_view text) {
  auto words = split_words(pattern_key(text));
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& rule : word_rules()) changed |= apply_rule(words, rule);
    changed |= merge_ecs(words);
  }
  renumber(words);
  return pattern_key(render(words));
}

Pattern normalize_pattern(const Pattern& pattern) {
  Pattern out = pattern;
  out.text = normalize_pattern_text(pattern.text);
  out.level = PatternLevel::Higher;
  return out;
}

std::vector<Pattern> higher_level_patterns(const std::vector<Pattern>& patterns) {
  std::vector<Pattern> out;
  std::map<std::string, std::size_t> index;
  for (const auto& p : patterns) {
    std::string key = normalize_pattern_text(p.text);
    auto [it, fresh] = index.emplace(key, out.size());
    if (fresh) out.push_back({key, PatternLevel::Higher, {}, {}});
    Pattern& h = out[it->second];
    for (const auto& id : p.support)
      if (std::find(h.support.begin(), h.support.end(), id) == h.support.end())
        h.support.push_back(id);
    h.ontologies.insert(p.ontologies.begin(), p.ontologies.end());
  }
  return out;
}

std::size_t ec_slot_count(std::string_view text) {
  std::size_t n = 0;
  for (const auto& w : split_words(text))
    if (slot_of(w.text).first == 'E') ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Statistics

std::vector<CoverageRow> coverage_stats(const Corpus& corpus, const std::vector<Candidate>& candidates,
                                        const FilterResult& filtered,
                                        const std::vector<Pattern>& higher) {
  std::vector<CoverageRow> rows;
  CoverageRow total{"Total"};
  for (const auto& o : corpus.ontologies) {
    CoverageRow r{o.short_name};
    for (const auto& q : corpus.questions) {
      if (q.ontology != o.short_name) continue;
      (q.dematerialized() ? r.dematerialized : r.materialized)++;
    }
    for (const auto& c : candidates)
      if (c.ontology == o.short_name) ++r.candidates;
    for (const auto& c : filtered.accepted)
      if (c.ontology == o.short_name) ++r.patterns;
    for (const auto& p : filtered.patterns)
      if (p.ontologies.count(o.short_name)) ++r.distinct;
    for (const auto& p : higher)
      if (p.ontologies.count(o.short_name)) ++r.higher;
    r.covered_percent = percent(r.patterns, r.candidates);
    total.candidates += r.candidates;
    total.patterns += r.patterns;
    total.materialized += r.materialized;
    total.dematerialized += r.dematerialized;
    rows.push_back(std::move(r));
  }
  total.distinct = filtered.patterns.size();
  total.higher = higher.size();
  total.covered_percent = percent(total.patterns, total.candidates);
  rows.push_back(std::move(total));
  return rows;
}

std::vector<ReuseRow> cross_set_reuse(const std::vector<Pattern>& patterns) {
  std::vector<ReuseRow> rows;
  for (const auto& p : patterns)
    if (p.ontologies.size() >= 2) rows.push_back({p.text, p.ontologies});
  std::stable_sort(rows.begin(), rows.end(), [](const ReuseRow& a, const ReuseRow& b) {
    if (a.ontologies.size() != b.ontologies.size()) return a.ontologies.size() > b.ontologies.size();
    return a.text < b.text;
  });
  return rows;
}

std::vector<AverageRow> avg_cqs_per_pattern(const Corpus& corpus, const std::vector<Pattern>& patterns) {
  std::map<std::string, std::string> ontology_of;
  for (const auto& q : corpus.questions) ontology_of[q.id] = q.ontology;
  std::vector<AverageRow> rows;
  for (const auto& o : corpus.ontologies) {
    AverageRow r{o.short_name};
    std::set<std::string> covered;
    for (const auto& p : patterns) {
      if (!p.ontologies.count(o.short_name)) continue;
      ++r.distinct;
      for (const auto& id : p.support)
        if (ontology_of[id] == o.short_name) covered.insert(id);
    }
    r.covered = covered.size();
    r.average = r.distinct ? static_cast<double>(r.covered) / static_cast<double>(r.distinct) : 0.0;
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_patterns_jsonl(const std::vector<Pattern>& patterns, std::ostream& out) {
  for (const auto& p : patterns) {
    nlohmann::json j;
    j["text"] = p.text;
    j["level"] = std::string(level_name(p.level));
    j["support"] = p.support;
    j["ontologies"] = std::vector<std::string>(p.ontologies.begin(), p.ontologies.end());
    out << j.dump() << '\n';
  }
}

}  // namespace cqkit
