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

#ifndef CQKIT_TEXT_HPP_
#define CQKIT_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace cqkit::text {

std::string to_lower(std::string_view s);
bool iequals(std::string_view a, std::string_view b);
std::string_view trim(std::string_view s);

// Splits on ASCII whitespace, dropping empty pieces.
std::vector<std::string> split_ws(std::string_view s);

// Removes every whitespace character.
std::string strip_ws(std::string_view s);

// Uppercases the first character, leaving the rest untouched.
std::string capitalize_first(std::string_view s);

// Orders "swo2" before "swo10".
bool natural_less(std::string_view a, std::string_view b);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool starts_with_word(std::string_view text, std::string_view prefix_words);

}  // namespace cqkit::text

#endif  // CQKIT_TEXT_HPP_
