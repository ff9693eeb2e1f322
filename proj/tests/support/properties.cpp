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


#include "properties.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

#include "cqkit/patterns.hpp"
#include "cqkit/signatures.hpp"
#include "cqkit/sparql/parser.hpp"

namespace cqkit::testing {

void PropertyReport::fail(std::string message) {
  if (failures.size() < 5) failures.push_back(std::move(message));
}

namespace {

Signature canon(const std::string& text) {
  return canonicalize(sparql::parse_query(text, sparql::standard_prefixes()));
}

std::string attempt(const std::string& what, const std::string& text, const std::exception& e) {
  return what + ": " + e.what() + "\n" + text;
}

}  // namespace

PropertyReport check_signature_invariance(Rng& rng, std::size_t trials, std::size_t max_triples) {
  PropertyReport r;
  GenOptions opts;
  opts.max_triples = max_triples;
  for (std::size_t i = 0; i < trials; ++i) {
    ++r.trials;
    GQuery q = random_query(rng, opts);
    std::string base = render_query(q, identity_transform(q));
    std::string moved = render_query(q, random_transform(q, rng));
    try {
      auto a = canon(base);
      auto b = canon(moved);
      auto again = canon(base);
      if (a.skeleton != b.skeleton) {
        r.fail("skeletons differ\n" + base + "\n  -> " + a.skeleton + "\n" + moved + "\n  -> " + b.skeleton);
        continue;
      }
      if (a.skeleton != again.skeleton) {
        r.fail("not deterministic\n" + base);
        continue;
      }
      if (!q.ask) {
        GQuery flipped = q;
        flipped.distinct = !q.distinct;
        auto c = canon(render_query(flipped, identity_transform(flipped)));
        if (c.skeleton == a.skeleton) {
          r.fail("DISTINCT not distinguished\n" + base);
          continue;
        }
      }
      ++r.passed;
    } catch (const std::exception& e) {
      r.fail(attempt("error", base + "\n" + moved, e));
    }
  }
  return r;
}

PropertyReport check_canonical_minimum(Rng& rng, std::size_t trials, std::size_t max_triples) {
  PropertyReport r;
  GenOptions opts;
  opts.max_triples = max_triples;
  opts.blanks = false;
  opts.nested = false;
  opts.literals = false;
  opts.not_exists = false;
  for (std::size_t i = 0; i < trials; ++i) {
    ++r.trials;
    GQuery q = random_query(rng, opts);
    std::string text = render_query(q, random_transform(q, rng));
    try {
      auto got = canon(text).where_skeleton;
      auto want = brute_force_minimum(q);
      if (got != want) {
        r.fail("not minimal\n" + text + "\n  got  " + got + "\n  want " + want);
        continue;
      }
      ++r.passed;
    } catch (const std::exception& e) {
      r.fail(attempt("error", text, e));
    }
  }
  return r;
}

namespace {

bool dense_ordinals(const std::string& text) {
  std::size_t next = 1;
  std::set<std::size_t> seen;
  static const std::regex slot(R"(\bEC([0-9]+)\b)");
  for (std::sregex_iterator it(text.begin(), text.end(), slot), end; it != end; ++it) {
    std::size_t n = std::stoul((*it)[1].str());
    if (seen.count(n)) continue;
    if (n != next) return false;
    seen.insert(n);
    ++next;
  }
  return true;
}

}  // namespace

PropertyReport check_normalization(Rng& rng, std::size_t trials) {
  PropertyReport r;
  for (std::size_t i = 0; i < trials; ++i) {
    ++r.trials;
    std::string p = random_pattern(rng);
    std::string once = normalize_pattern_text(p);
    std::string twice = normalize_pattern_text(once);
    if (once != twice) {
      r.fail("not idempotent: '" + p + "' -> '" + once + "' -> '" + twice + "'");
      continue;
    }
    if (ec_token_count(once) > ec_token_count(p)) {
      r.fail("EC count grew: '" + p + "' -> '" + once + "'");
      continue;
    }
    if (!dense_ordinals(once)) {
      r.fail("slot ordinals not dense: '" + p + "' -> '" + once + "'");
      continue;
    }
    ++r.passed;
  }
  return r;
}

namespace {

std::set<std::string> pattern_keys(const FilterResult& f) {
  std::set<std::string> out;
  for (const auto& p : f.patterns) out.insert(p.text);
  return out;
}

}  // namespace

PropertyReport check_filter(Rng& rng, std::size_t trials, std::size_t max_cqs) {
  PropertyReport r;
  std::uniform_int_distribution<std::size_t> size(1, max_cqs);
  for (std::size_t i = 0; i < trials; ++i) {
    ++r.trials;
    auto all = random_candidates(rng, size(rng));
    std::uniform_int_distribution<std::size_t> cut(0, all.size());
    std::vector<Candidate> prefix(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(cut(rng)));

    auto got = filter_candidates(all);
    auto ref = reference_filter(all);
    std::vector<std::string> ids;
    for (const auto& c : got.accepted) ids.push_back(c.cq_id);
    if (ids != ref.accepted_ids) {
      r.fail("accepted ids differ from reference");
      continue;
    }
    bool same = got.patterns.size() == ref.patterns.size();
    for (std::size_t k = 0; same && k < got.patterns.size(); ++k)
      same = got.patterns[k].text == ref.patterns[k].first && got.patterns[k].support == ref.patterns[k].second;
    if (!same) {
      r.fail("patterns differ from reference");
      continue;
    }
    bool demat_ok = true;
    for (const auto& c : all)
      if (c.dematerialized && std::find(ids.begin(), ids.end(), c.cq_id) == ids.end()) demat_ok = false;
    if (!demat_ok) {
      r.fail("dematerialized candidate rejected");
      continue;
    }
    auto small = pattern_keys(filter_candidates(prefix));
    auto big = pattern_keys(got);
    if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) {
      r.fail("pattern lost when the corpus grew");
      continue;
    }
    ++r.passed;
  }
  return r;
}

}  // namespace cqkit::testing
