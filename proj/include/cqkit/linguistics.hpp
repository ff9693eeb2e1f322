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

#ifndef CQKIT_LINGUISTICS_HPP_
#define CQKIT_LINGUISTICS_HPP_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cqkit::ling {

enum class Pos { NOUN, PROPN, VERB, AUX, ADJ, DET, ADP, PRON, ADV, NUM, PUNCT, CCONJ, SCONJ, PART, X };

std::string_view pos_name(Pos pos);
// INTJ and SYM map to X; anything else outside the enum is nullopt.
std::optional<Pos> parse_pos(std::string_view upos);

struct TokenAnnotation {
  int index = 0;
  std::string surface;
  Pos pos = Pos::X;
  int head = 0;  // == index for the root
  std::string deprel;
  bool space_after = true;
  bool placeholder = false;
  friend bool operator==(const TokenAnnotation&, const TokenAnnotation&) = default;
};

enum class ChunkKind { EC, PC };

// Half-open token range.
struct TokenRange {
  int begin = 0;
  int end = 0;
  friend bool operator==(const TokenRange&, const TokenRange&) = default;
};

struct Chunk {
  ChunkKind kind = ChunkKind::EC;
  std::vector<TokenRange> spans;
  int ordinal = 0;
  std::string surface_text;
  friend bool operator==(const Chunk&, const Chunk&) = default;
};

struct AnnotatedSentence {
  std::string cq_id;
  std::vector<TokenAnnotation> tokens;
  std::vector<Chunk> chunks;
};

class AnnotationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Surface tokens only (pos X, head self). Placeholders become one token,
// hyphenated words stay whole, clitics such as "'s" split off, quotes drop.
std::vector<TokenAnnotation> tokenize(std::string_view text);

// Lexicon and suffix-rule tagger with a shallow dependency pass.
std::vector<TokenAnnotation> annotate_builtin(std::string_view text);

struct ConlluSentence {
  std::string sent_id;
  std::string text;
  std::vector<TokenAnnotation> tokens;
};

// Reads FORM, UPOS, HEAD, DEPREL and MISC SpaceAfter=No. Multiword and
// empty-node lines are skipped.
std::vector<ConlluSentence> read_conllu(std::istream& in, const std::string& source_name);

// Sentences from one .conllu file or every .conllu file in a directory.
class ConlluStore {
 public:
  static ConlluStore load(const std::filesystem::path& path);
  void add(ConlluSentence sentence);

  // Matches by sent_id first, then by whitespace-free text. Bracketed
  // placeholder tokens are merged into one. Throws AnnotationError when
  // nothing matches or the text disagrees.
  std::vector<TokenAnnotation> annotate(std::string_view cq_id, std::string_view text) const;

  std::size_t size() const { return sentences_.size(); }

 private:
  std::vector<ConlluSentence> sentences_;
};

// Merges "[" ... "]" token runs into single placeholder tokens.
std::vector<TokenAnnotation> merge_placeholders(const std::vector<TokenAnnotation>& tokens);

std::vector<Chunk> identify_chunks(const std::vector<TokenAnnotation>& tokens);

AnnotatedSentence analyze(std::string cq_id, std::vector<TokenAnnotation> tokens);

// Candidate text with chunks replaced by EC<k>/PC<k>; terminal "?" dropped.
std::string to_pattern_candidate(const AnnotatedSentence& sentence);

// Per-CQ manual corrections: JSON object of id -> pattern text.
using Overrides = std::map<std::string, std::string>;
Overrides load_overrides(const std::filesystem::path& path);

}  // namespace cqkit::ling

#endif  // CQKIT_LINGUISTICS_HPP_
