// Copyright 2026 The fuzzygraph Authors
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

#pragma once

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "fuzzygraph/connectivity.hpp"
#include "fuzzygraph/falsifier.hpp"
#include "fuzzygraph/graph.hpp"
#include "fuzzygraph/indices.hpp"
#include "fuzzygraph/structure.hpp"

/// Text and JSON rendering shared by the CLI and the tests. All numbers are
/// emitted as exact decimal strings (see IndexValue::to_string), so JSON
/// documents are byte-stable across runs and platforms.
namespace fzg::report {

nlohmann::json kind_json(const GraphKind& kind);
nlohmann::json index_report_json(const IndexReport& r);
nlohmann::json classification_json(const FuzzyGraph& g,
                                   std::span<const EdgeClassification> classes);
nlohmann::json spanning_tree_json(const FuzzyGraph& g, const SpanningTree& tree);
nlohmann::json verdict_json(const ClaimVerdict& v);
nlohmann::json verdicts_json(ClaimId claim, std::span<const ClaimVerdict> verdicts);

std::string index_report_text(const IndexReport& r);
std::string classification_text(const FuzzyGraph& g,
                                std::span<const EdgeClassification> classes);
std::string spanning_tree_text(const FuzzyGraph& g, const SpanningTree& tree);
std::string kind_text(const GraphKind& kind);
std::string verdict_text(const ClaimVerdict& v);

}  // namespace fzg::report
