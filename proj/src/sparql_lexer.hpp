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

#ifndef CQKIT_SRC_SPARQL_LEXER_HPP_
#define CQKIT_SRC_SPARQL_LEXER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cqkit::sparql::detail {

enum class Tok {
  Eof,
  IriRef,      // text = IRI without angle brackets
  PName,       // text = "prefix:local" (local may be empty)
  BlankLabel,  // text = label without "_:"
  Var,         // text = name, marker in `placeholder`
  String,      // text = unescaped lexical form
  LangTag,     // text = tag without "@"
  Integer,
  Decimal,
  Double,
  Word,        // bare identifier: keywords, builtin names, `a`, true/false
  Punct,       // text = the punctuation, e.g. "{", "&&", "^^", "!="
};

struct Token {
  Tok kind = Tok::Eof;
  std::string text;
  std::size_t offset = 0;
  bool placeholder = false;
};

// Throws ParseError(Kind::Lexical) on malformed input.
std::vector<Token> tokenize(std::string_view input);

// 1-based line/column of a byte offset.
void locate(std::string_view input, std::size_t offset, std::size_t& line, std::size_t& column);

}  // namespace cqkit::sparql::detail

#endif  // CQKIT_SRC_SPARQL_LEXER_HPP_
