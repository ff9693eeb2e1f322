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

#include "cqkit/calibration.hpp"

namespace cqkit::reference {

const std::vector<TranslatabilityRef>& translatability() {
  static const std::vector<TranslatabilityRef> v = {
      {"SWO", 88, 42},    {"Stuff", 11, 9},  {"AWO", 14, 7},
      {"DemCare", 107, 60}, {"OntoDT", 14, 13}, {"Total", 234, 131}};
  return v;
}

const std::vector<KeywordRef>& keywords() {
  static const std::vector<KeywordRef> v = {
      {"WHERE", 131, {{"DemCare", 60}, {"SWO", 42}, {"OntoDT", 13}, {"Stuff", 9}, {"AWO", 7}}},
      {"rdfs:subClassOf", 125, {{"DemCare", 57}, {"SWO", 42}, {"OntoDT", 13}, {"Stuff", 7}, {"AWO", 6}}},
      {"SELECT", 114, {{"DemCare", 60}, {"SWO", 30}, {"OntoDT", 13}, {"Stuff", 7}, {"AWO", 4}}},
      {"owl:onProperty", 96, {{"SWO", 42}, {"DemCare", 33}, {"OntoDT", 13}, {"Stuff", 2}, {"AWO", 6}}},
      {"owl:someValuesFrom", 83, {{"SWO", 31}, {"DemCare", 32}, {"OntoDT", 13}, {"AWO", 6}, {"Stuff", 1}}},
      {"rdf:type / a", 72, {{"SWO", 40}, {"OntoDT", 13}, {"DemCare", 11}, {"AWO", 6}, {"Stuff", 2}}},
      {"DISTINCT", 71, {{"DemCare", 57}, {"Stuff", 6}, {"SWO", 4}, {"AWO", 4}}},
      {"owl:Restriction", 69, {{"SWO", 40}, {"OntoDT", 13}, {"DemCare", 8}, {"AWO", 6}, {"Stuff", 2}}},
      {"FILTER", 58, {{"DemCare", 31}, {"SWO", 16}, {"Stuff", 6}, {"AWO", 5}}},
      {"owl:Nothing", 34, {{"SWO", 6}, {"AWO", 4}, {"DemCare", 24}}},
      {"ASK", 17, {{"SWO", 12}, {"Stuff", 2}, {"AWO", 3}}},
      {"owl:hasValue", 13, {{"SWO", 13}}},
      {"NOT EXISTS", 11, {{"DemCare", 7}, {"SWO", 2}, {"Stuff", 1}, {"AWO", 1}}},
      {"owl:intersectionOf", 7, {{"SWO", 7}}},
      {"owl:unionOf", 4, {{"AWO", 2}, {"DemCare", 1}, {"SWO", 1}}},
      {"UNION", 3, {{"SWO", 2}, {"DemCare", 1}}},
      {"owl:disjointWith", 3, {{"Stuff", 2}, {"AWO", 1}}},
      {"owl:allValuesFrom", 1, {{"DemCare", 1}}},
      {"owl:cardinality", 1, {{"Stuff", 1}}},
      {"rdf:first", 1, {{"DemCare", 1}}},
      {"rdf:rest", 1, {{"DemCare", 1}}},
  };
  return v;
}

const std::vector<CoverageRef>& coverage() {
  static const std::vector<CoverageRef> v = {
      {"SWO", 88, 88, 72, 100.0, 1, 87, 60},     {"Stuff", 11, 7, 6, 63.6, 4, 7, 5},
      {"AWO", 14, 10, 9, 71.4, 6, 8, 8},         {"DemCare", 107, 90, 18, 84.1, 107, 0, 15},
      {"OntoDT", 14, 14, 8, 100.0, 0, 14, 4},    {"Total", 234, 209, 106, 89.3, 118, 116, 81}};
  return v;
}

const std::vector<ReuseRef>& shared_patterns() {
  static const std::vector<ReuseRef> v = {
      {"What EC1 PC1 EC2", {"SWO", "DemCare"}}, {"Which EC1 PC1 EC2", {"SWO", "AWO"}},
      {"What are EC1 for EC2", {"SWO", "OntoDT"}}, {"What is EC1 for EC2", {"SWO", "OntoDT"}},
      {"What is EC1 of EC2", {"SWO", "AWO"}},   {"Which EC1 are EC2", {"DemCare", "AWO"}}};
  return v;
}

const std::vector<ReuseRef>& shared_higher_patterns() {
  static const std::vector<ReuseRef> v = {
      {"What type of EC1 is EC2", {"SWO", "Stuff", "DemCare"}},
      {"What EC1 PC1 EC2", {"SWO", "DemCare", "AWO"}},
      {"What is EC1", {"SWO", "OntoDT", "DemCare"}},
      {"What EC1 PC1 I PC1 EC2", {"SWO", "AWO"}},
      {"Is EC1 EC2", {"SWO", "AWO"}},
      {"Is there EC1", {"SWO", "AWO"}},
      {"What EC1 PC1 EC2 PC1", {"SWO", "AWO"}},
      {"What EC1 is EC2", {"DemCare", "AWO"}}};
  return v;
}

const std::vector<SignalRef>& signals() {
  static const std::vector<SignalRef> v = {
      {"possible-types", 3, 3}, {"types-of", 3, 4},        {"what-types-of", 8, 11},
      {"kind-of", 2, 3},        {"main-types", 6, 9},      {"wh-initial", 107, 107},
      {"yes-no-initial", 16, 18}, {"or-union", 2, 9},     {"and-intersection", 2, 11},
      {"exactly-number", 1, 1}};
  return v;
}

const std::vector<ChunkingExample>& chunking_examples() {
  static const std::vector<ChunkingExample> v = {
      {"awo_6", "Which plants eat animals?", "Which EC1 PC1 EC2"},
      {"awo_4", "Does a lion eat plants or plant parts?", "PC1 EC1 PC1 EC2 or EC3"},
      {"DemCare_CQ_51",
       "What data are measured for neuromuscular impairment in speech production mechanism?",
       "What EC1 PC1 EC2 in EC3"},
      {"swo82", "What graphics card does [this software] require?", "What EC1 PC1 EC2 PC1"},
      {"swo84", "What platform does [the software] run on?", "What EC1 PC1 EC2 PC1"}};
  return v;
}

const std::vector<NormalizationFamily>& normalization_families() {
  static const std::vector<NormalizationFamily> v = {
      {"Is there EC1", {"Are there EC1 in EC2", "Is there EC1 for EC2", "Is there EC1 with EC2"}},
      {"What is EC1",
       {"What is EC1", "What is EC1 of EC2", "What are EC1", "Which are EC1 of EC2",
        "What is EC1 of EC2 for EC3", "What are EC1 for EC2", "What is EC1 for EC2"}}};
  return v;
}

}  // namespace cqkit::reference
