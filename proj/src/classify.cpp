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
#include <vector>

#include "cqkit/patterns.hpp"
#include "cqkit/text.hpp"

namespace cqkit {

std::string_view feature_name(QuestionType v) {
  constexpr std::array<std::string_view, 3> names = {"Selection", "Binary", "Count"};
  return names[static_cast<std::size_t>(v)];
}
std::string_view feature_name(Polarity v) {
  constexpr std::array<std::string_view, 3> names = {"Positive", "Negative", "Both"};
  return names[static_cast<std::size_t>(v)];
}
std::string_view feature_name(Modifier v) {
  constexpr std::array<std::string_view, 6> names = {"None",        "Numeric",    "Superlative",
                                                      "Comparative", "Difference", "Extent"};
  return names[static_cast<std::size_t>(v)];
}
std::string_view feature_name(Dinde v) {
  constexpr std::array<std::string_view, 5> names = {"Time", "Location", "Person", "Period",
                                                      "Procedure"};
  return names[static_cast<std::size_t>(v)];
}

namespace {

// Lowercased words with punctuation and brackets stripped; "n't" and "'s"
// split off.
std::vector<std::string> words_of(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    if (cur.size() > 3 && cur.ends_with("n't")) {
      out.push_back(cur.substr(0, cur.size() - 3));
      out.push_back("n't");
    } else {
      out.push_back(cur);
    }
    cur.clear();
  };
  for (char c : text) {
    unsigned char u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || c == '\'' || c == '-' || u >= 0x80)
      cur += static_cast<char>(std::tolower(u));
    else
      flush();
  }
  flush();
  return out;
}

bool is_number(const std::string& w) {
  static const std::set<std::string> words = {"one", "two", "three", "four", "five", "six",
                                              "seven", "eight", "nine", "ten", "twelve",
                                              "hundred", "thousand", "million", "num"};
  if (words.count(w)) return true;
  return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }) && std::isdigit(static_cast<unsigned char>(w[0]));
}

bool is_superlative(const std::string& w) {
  static const std::set<std::string> exact = {"best", "worst", "most", "least"};
  static const std::set<std::string> not_superlative = {
      "interest", "request", "test",     "forest",   "suggest", "harvest", "digest",
      "manifest", "contest", "protest",  "guest",    "rest",    "west",    "chest",
      "nest",     "quest",   "arrest",   "invest",   "honest",  "modest",  "earnest",
      "ingest",   "attest",  "conquest", "interests"};
  if (exact.count(w)) return true;
  if (not_superlative.count(w)) return false;
  return w.size() > 5 && w.ends_with("est");
}

bool begins(const std::vector<std::string>& w, std::initializer_list<std::string_view> seq) {
  if (w.size() < seq.size()) return false;
  std::size_t i = 0;
  for (auto s : seq)
    if (w[i++] != s) return false;
  return true;
}

bool contains_seq(const std::vector<std::string>& w, std::string_view a, std::string_view b) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == a && w[i + 1] == b) return true;
  return false;
}

bool contains(const std::vector<std::string>& w, std::string_view a) {
  return std::find(w.begin(), w.end(), a) != w.end();
}

}  // namespace

CqFeatures classify_cq(std::string_view text) {
  CqFeatures f;
  auto w = words_of(text);
  if (w.empty()) return f;

  static const std::set<std::string> binary = {"is", "are", "does", "do", "can",
                                               "did", "has", "have", "will"};
  if (binary.count(w[0]))
    f.question_type = QuestionType::Binary;
  else if (begins(w, {"how", "many"}) || begins(w, {"how", "much"}))
    f.question_type = QuestionType::Count;

  if (contains_seq(w, "or", "not"))
    f.polarity = Polarity::Both;
  else if (contains(w, "not") || contains(w, "never") || contains(w, "n't"))
    f.polarity = Polarity::Negative;

  bool than = contains(w, "than");
  bool comparative = contains(w, "better") || contains(w, "worse") || contains(w, "worser") ||
                     (than && (contains(w, "more") || contains(w, "less") || contains(w, "fewer")));
  if (contains(w, "exactly") || std::any_of(w.begin(), w.end(), is_number))
    f.modifier = Modifier::Numeric;
  else if (std::any_of(w.begin(), w.end(), is_superlative))
    f.modifier = Modifier::Superlative;
  else if (comparative)
    f.modifier = Modifier::Comparative;
  else if (contains_seq(w, "difference", "between") || contains_seq(w, "differences", "between"))
    f.modifier = Modifier::Difference;
  else if (begins(w, {"to", "what", "extent"}))
    f.modifier = Modifier::Extent;

  if (w[0] == "when" || begins(w, {"at", "what", "point"}) || begins(w, {"how", "long"}))
    f.dinde.insert(Dinde::Time);
  if (w[0] == "where" || w[0] == "where's" || begins(w, {"in", "which"}))
    f.dinde.insert(Dinde::Location);
  if (w[0] == "who") f.dinde.insert(Dinde::Person);
  if (begins(w, {"how", "long"}) || contains(w, "period")) f.dinde.insert(Dinde::Period);
  if (begins(w, {"how", "do", "i"}) || begins(w, {"how", "can", "i"}))
    f.dinde.insert(Dinde::Procedure);
  return f;
}

}  // namespace cqkit
