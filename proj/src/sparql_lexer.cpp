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

#include "sparql_lexer.hpp"

#include <cctype>

#include "cqkit/sparql/parser.hpp"

namespace cqkit::sparql::detail {

namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || static_cast<unsigned char>(c) >= 0x80; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_name_start(char c) { return is_alpha(c) || c == '_'; }
bool is_name_char(char c) { return is_name_start(c) || is_digit(c) || c == '-'; }
bool is_prefix_char(char c) { return is_name_char(c) || c == '.'; }

class Lexer {
 public:
  explicit Lexer(std::string_view in) : in_(in) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      if (pos_ >= in_.size()) {
        out.push_back(Token{Tok::Eof, "", pos_, false});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& msg) {
    std::size_t line = 0, col = 0;
    locate(in_, at, line, col);
    throw ParseError(ParseError::Kind::Lexical, at, line, col, msg);
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < in_.size() ? in_[pos_ + ahead] : '\0';
  }

  void skip_space_and_comments() {
    while (pos_ < in_.size()) {
      char c = in_[pos_];
      if (is_space(c)) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < in_.size() && in_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  Token make(Tok kind, std::string text, std::size_t start) {
    return Token{kind, std::move(text), start, false};
  }

  Token next() {
    std::size_t start = pos_;
    char c = peek();

    if (c == '<') {
      if (auto iri = try_iri()) return make(Tok::IriRef, *iri, start);
      if (peek(1) == '=') { pos_ += 2; return make(Tok::Punct, "<=", start); }
      ++pos_;
      return make(Tok::Punct, "<", start);
    }
    if (c == '"' || c == '\'') return make(Tok::String, read_string(), start);
    if (c == '?' || c == '$') {
      if (is_name_start(peek(1)) || is_digit(peek(1))) {
        bool placeholder = c == '$';
        ++pos_;
        std::size_t s = pos_;
        while (pos_ < in_.size() && (is_name_start(in_[pos_]) || is_digit(in_[pos_]))) ++pos_;
        Token t = make(Tok::Var, std::string(in_.substr(s, pos_ - s)), start);
        t.placeholder = placeholder;
        // `$X$` is accepted as a spelling of the placeholder `$X`.
        if (placeholder && peek() == '$') ++pos_;
        return t;
      }
      if (c == '?') { ++pos_; return make(Tok::Punct, "?", start); }
      fail(start, "expected variable name after '$'");
    }
    if (c == '_' && peek(1) == ':') {
      pos_ += 2;
      std::size_t s = pos_;
      while (pos_ < in_.size() && (is_name_char(in_[pos_]) || in_[pos_] == '.')) ++pos_;
      while (pos_ > s && in_[pos_ - 1] == '.') --pos_;
      if (pos_ == s) fail(start, "empty blank node label");
      return make(Tok::BlankLabel, std::string(in_.substr(s, pos_ - s)), start);
    }
    if (c == '@') {
      ++pos_;
      std::size_t s = pos_;
      while (pos_ < in_.size() && (is_alpha(in_[pos_]) || is_digit(in_[pos_]) || in_[pos_] == '-')) ++pos_;
      if (pos_ == s) fail(start, "empty language tag");
      return make(Tok::LangTag, std::string(in_.substr(s, pos_ - s)), start);
    }
    if (is_digit(c) || (c == '.' && is_digit(peek(1)))) return read_number();
    if (is_name_start(c) || c == ':') return read_name();

    // Punctuation.
    auto two = in_.substr(pos_, 2);
    for (std::string_view p : {"&&", "||", "^^", "!=", ">="}) {
      if (two == p) {
        pos_ += 2;
        return make(Tok::Punct, std::string(p), start);
      }
    }
    static constexpr std::string_view singles = "{}()[].;,*/|^+-!=>";
    if (singles.find(c) != std::string_view::npos) {
      ++pos_;
      return make(Tok::Punct, std::string(1, c), start);
    }
    fail(start, std::string("unexpected character '") + c + "'");
  }

  std::optional<std::string> try_iri() {
    std::size_t i = pos_ + 1;
    while (i < in_.size()) {
      char c = in_[i];
      if (c == '>') {
        std::string iri(in_.substr(pos_ + 1, i - pos_ - 1));
        pos_ = i + 1;
        return iri;
      }
      if (is_space(c) || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' ||
          c == '^' || c == '`' || c == '\\')
        return std::nullopt;
      ++i;
    }
    return std::nullopt;
  }

  std::string read_string() {
    std::size_t start = pos_;
    char q = peek();
    bool long_form = peek(1) == q && peek(2) == q;
    pos_ += long_form ? 3 : 1;
    std::string out;
    for (;;) {
      if (pos_ >= in_.size()) fail(start, "unterminated string literal");
      char c = in_[pos_];
      if (long_form) {
        if (c == q && peek(1) == q && peek(2) == q) {
          pos_ += 3;
          return out;
        }
      } else if (c == q) {
        ++pos_;
        return out;
      } else if (c == '\n') {
        fail(start, "newline in string literal");
      }
      if (c == '\\') {
        char e = peek(1);
        switch (e) {
          case 't': out.push_back('\t'); break;
          case 'n': out.push_back('\n'); break;
          case 'r': out.push_back('\r'); break;
          case 'b': out.push_back('\b'); break;
          case 'f': out.push_back('\f'); break;
          case '"': out.push_back('"'); break;
          case '\'': out.push_back('\''); break;
          case '\\': out.push_back('\\'); break;
          default: fail(pos_, "unknown string escape");
        }
        pos_ += 2;
        continue;
      }
      out.push_back(c);
      ++pos_;
    }
  }

  Token read_number() {
    std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    Tok kind = Tok::Integer;
    if (peek() == '.' && is_digit(peek(1))) {
      ++pos_;
      while (is_digit(peek())) ++pos_;
      kind = Tok::Decimal;
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t save = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (is_digit(peek())) {
        while (is_digit(peek())) ++pos_;
        kind = Tok::Double;
      } else {
        pos_ = save;
      }
    }
    return make(kind, std::string(in_.substr(start, pos_ - start)), start);
  }

  // Bare words and prefixed names. A prefix may contain '.', but not at the
  // end; neither may a local name, so `event:Entity.` ends before the dot.
  Token read_name() {
    std::size_t start = pos_;
    std::size_t i = pos_;
    while (i < in_.size() && is_prefix_char(in_[i])) ++i;
    std::size_t word_end = i;
    while (word_end > pos_ && in_[word_end - 1] == '.') --word_end;
    if (i < in_.size() && in_[i] == ':' && word_end == i) {
      std::string prefix(in_.substr(pos_, i - pos_));
      pos_ = i + 1;
      std::string local = read_local();
      return make(Tok::PName, prefix + ":" + local, start);
    }
    if (word_end == pos_) fail(start, "unexpected character");
    pos_ = word_end;
    // Bare words never contain dots.
    std::string word(in_.substr(start, pos_ - start));
    auto dot = word.find('.');
    if (dot != std::string::npos) {
      pos_ = start + dot;
      word.resize(dot);
    }
    return make(Tok::Word, word, start);
  }

  std::string read_local() {
    std::string out;
    for (;;) {
      char c = peek();
      if (is_name_char(c) || c == ':' || c == '.') {
        out.push_back(c);
        ++pos_;
      } else if (c == '%' && std::isxdigit(static_cast<unsigned char>(peek(1))) &&
                 std::isxdigit(static_cast<unsigned char>(peek(2)))) {
        out.append(in_.substr(pos_, 3));
        pos_ += 3;
      } else if (c == '\\' && pos_ + 1 < in_.size() &&
                 std::string_view("_~.-!$&'()*+,;=/?#@%").find(peek(1)) != std::string_view::npos) {
        out.push_back(peek(1));
        pos_ += 2;
      } else {
        break;
      }
    }
    while (!out.empty() && out.back() == '.') {
      out.pop_back();
      --pos_;
    }
    return out;
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

void locate(std::string_view input, std::size_t offset, std::size_t& line, std::size_t& column) {
  line = 1;
  column = 1;
  for (std::size_t i = 0; i < offset && i < input.size(); ++i) {
    if (input[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

std::vector<Token> tokenize(std::string_view input) { return Lexer(input).run(); }

}  // namespace cqkit::sparql::detail
