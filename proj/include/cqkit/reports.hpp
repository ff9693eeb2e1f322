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

#ifndef CQKIT_REPORTS_HPP_
#define CQKIT_REPORTS_HPP_

#include <vector>

#include "cqkit/pipeline.hpp"
#include "cqkit/table.hpp"

// Table builders for every report. With `calibrate`, published values and
// deltas are added as extra columns.
namespace cqkit::reports {

Table translatability_table(const TranslatabilityReport& report, bool calibrate = false);
Table parse_failures_table(const TranslatabilityReport& report);
Table keyword_table(const sparql::KeywordReport& report, bool calibrate = false);

Table candidates_table(const Corpus& corpus, const std::vector<CqAnnotation>& annotations);
Table rejections_table(const FilterResult& filtered);
Table patterns_table(const std::vector<Pattern>& patterns);
Table coverage_table(const std::vector<CoverageRow>& rows, bool calibrate = false);
Table reuse_table(const std::vector<ReuseRow>& rows, PatternLevel level, bool calibrate = false);
Table average_table(const std::vector<AverageRow>& patterns, const std::vector<AverageRow>& higher);
Table features_table(const std::vector<std::pair<std::string, CqFeatures>>& features);
Table features_summary_table(const std::vector<std::pair<std::string, CqFeatures>>& features);

Table signatures_table(const SignatureInventory& inventory, bool calibrate = false);
Table signature_members_table(const SignatureInventory& inventory);
Table skipped_queries_table(const SignatureInventory& inventory);

Table mapping_edges_table(const Mapping& mapping);
Table mapping_summary_table(const Mapping& mapping);
Table signals_table(const std::vector<SignalResult>& results, bool calibrate = false);
Table discovery_table(const std::vector<SignalCandidate>& candidates);

}  // namespace cqkit::reports

#endif  // CQKIT_REPORTS_HPP_
