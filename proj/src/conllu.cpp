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
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include "cqkit/linguistics.hpp"
#include "cqkit/text.hpp"

namespace cqkit::ling {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

std::string squash(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& msg) {
  throw AnnotationError(source + ":" + std::to_string(line) + ": " + msg);
}

void finish(std::vector<ConlluSentence>& out, ConlluSentence& cur, const std::string& source,
            int line) {
  if (cur.tokens.empty()) {
    cur = {};
    return;
  }
  int roots = 0;
  for (auto& t : cur.tokens) {
    if (t.head < 0) {
      t.head = t.index;
      ++roots;
    } else if (t.head >= static_cast<int>(cur.tokens.size())) {
      fail(source, line, "head out of range in sentence '" + cur.sent_id + "'");
    }
  }
  if (roots > 1) fail(source, line, "multiple roots in sentence '" + cur.sent_id + "'");
  if (cur.text.empty()) {
    for (const auto& t : cur.tokens) {
      cur.text += t.surface;
      if (t.space_after) cur.text += ' ';
    }
  }
  out.push_back(std::move(cur));
  cur = {};
}

}  // namespace

std::vector<ConlluSentence> read_conllu(std::istream& in, const std::string& source_name) {
  std::vector<ConlluSentence> out;
  ConlluSentence cur;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty()) {
      finish(out, cur, source_name, lineno);
      continue;
    }
    if (line[0] == '#') {
      std::string_view body = text::trim(std::string_view(line).substr(1));
      auto eq = body.find('=');
      if (eq == std::string_view::npos) continue;
      std::string key(text::trim(body.substr(0, eq)));
      std::string value(text::trim(body.substr(eq + 1)));
      if (key == "sent_id") cur.sent_id = value;
      if (key == "text") cur.text = value;
      continue;
    }
    auto cols = split_tabs(line);
    if (cols.size() != 10) fail(source_name, lineno, "expected 10 tab-separated columns");
    if (cols[0].find_first_of("-.") != std::string::npos) continue;
    int id = 0;
    try {
      id = std::stoi(cols[0]);
    } catch (...) {
      fail(source_name, lineno, "bad token id '" + cols[0] + "'");
    }
    if (id != static_cast<int>(cur.tokens.size()) + 1)
      fail(source_name, lineno, "token ids must be consecutive from 1");
    auto pos = parse_pos(cols[3]);
    if (!pos) fail(source_name, lineno, "unknown UPOS '" + cols[3] + "'");
    int head = 0;
    try {
      head = std::stoi(cols[6]);
    } catch (...) {
      fail(source_name, lineno, "bad head '" + cols[6] + "'");
    }
    TokenAnnotation t;
    t.index = id - 1;
    t.surface = cols[1];
    t.pos = *pos;
    t.head = head - 1;  // -1 marks the root until the sentence closes
    t.deprel = cols[7];
    t.space_after = cols[9].find("SpaceAfter=No") == std::string::npos;
    cur.tokens.push_back(std::move(t));
  }
  finish(out, cur, source_name, lineno);
  return out;
}

std::vector<TokenAnnotation> merge_placeholders(const std::vector<TokenAnnotation>& tokens) {
  const int n = static_cast<int>(tokens.size());
  std::vector<int> remap(n);
  std::vector<TokenAnnotation> out;
  for (int i = 0; i < n;) {
    if (tokens[i].surface == "[") {
      int j = i + 1;
      while (j < n && tokens[j].surface != "]") ++j;
      if (j < n) {
        TokenAnnotation t;
        t.index = static_cast<int>(out.size());
        t.placeholder = true;
        t.pos = Pos::NOUN;
        for (int k = i; k <= j; ++k) {
          t.surface += tokens[k].surface;
          if (k < j && tokens[k].space_after && k != i && k + 1 != j) t.surface += ' ';
          remap[k] = t.index;
        }
        t.space_after = tokens[j].space_after;
        // The run's head is the head of whichever member points outside it.
        t.head = tokens[i].head;
        t.deprel = tokens[i].deprel;
        for (int k = i + 1; k < j; ++k)
          if (tokens[k].head < i || tokens[k].head > j || tokens[k].head == k) {
            t.head = tokens[k].head;
            t.deprel = tokens[k].deprel;
            if (tokens[k].head == k) t.head = -2 - k;
            break;
          }
        out.push_back(std::move(t));
        i = j + 1;
        continue;
      }
    }
    remap[i] = static_cast<int>(out.size());
    TokenAnnotation t = tokens[i];
    t.index = remap[i];
    out.push_back(std::move(t));
    ++i;
  }
  for (auto& t : out) {
    if (t.head <= -2)
      t.head = t.index;
    else
      t.head = remap[t.head];
  }
  return out;
}

ConlluStore ConlluStore::load(const std::filesystem::path& path) {
  ConlluStore store;
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(path)) {
    for (const auto& e : std::filesystem::directory_iterator(path))
      if (e.path().extension() == ".conllu") files.push_back(e.path());
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw AnnotationError(f.string() + ": cannot open");
    for (auto& s : read_conllu(in, f.string())) store.add(std::move(s));
  }
  return store;
}

void ConlluStore::add(ConlluSentence sentence) { sentences_.push_back(std::move(sentence)); }

std::vector<TokenAnnotation> ConlluStore::annotate(std::string_view cq_id,
                                                   std::string_view text) const {
  const ConlluSentence* hit = nullptr;
  for (const auto& s : sentences_)
    if (!s.sent_id.empty() && s.sent_id == cq_id) {
      hit = &s;
      break;
    }
  std::string want = squash(text);
  if (!hit)
    for (const auto& s : sentences_)
      if (squash(s.text) == want) {
        hit = &s;
        break;
      }
  if (!hit) throw AnnotationError("no CoNLL-U sentence for '" + std::string(cq_id) + "'");
  std::string got;
  for (const auto& t : hit->tokens) got += squash(t.surface);
  if (got != want)
    throw AnnotationError("CoNLL-U tokens for '" + std::string(cq_id) +
                          "' do not match the question text");
  return merge_placeholders(hit->tokens);
}

}  // namespace cqkit::ling
