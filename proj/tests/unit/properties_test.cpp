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


#include <gtest/gtest.h>

#include "properties.hpp"

namespace cqkit::testing {
namespace {

std::string describe(const PropertyReport& r) {
  std::string out = std::to_string(r.passed) + "/" + std::to_string(r.trials);
  for (const auto& f : r.failures) out += "\n" + f;
  return out;
}

TEST(Properties, SignatureInvariance) {
  Rng rng(11);
  auto r = check_signature_invariance(rng, 200);
  EXPECT_TRUE(r.ok()) << describe(r);
}

TEST(Properties, CanonicalMinimum) {
  Rng rng(12);
  auto r = check_canonical_minimum(rng, 200);
  EXPECT_TRUE(r.ok()) << describe(r);
}

TEST(Properties, Normalization) {
  Rng rng(13);
  auto r = check_normalization(rng, 300);
  EXPECT_TRUE(r.ok()) << describe(r);
}

TEST(Properties, Filter) {
  Rng rng(14);
  auto r = check_filter(rng, 200);
  EXPECT_TRUE(r.ok()) << describe(r);
}

TEST(Properties, GeneratorsAreSeeded) {
  Rng a(5), b(5);
  auto qa = random_query(a);
  auto qb = random_query(b);
  EXPECT_EQ(render_query(qa, identity_transform(qa)), render_query(qb, identity_transform(qb)));
  EXPECT_LE(atomic_count(qa), 8u);
}

}  // namespace
}  // namespace cqkit::testing
