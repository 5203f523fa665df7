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

#include <istream>
#include <string>
#include <string_view>

#include "fuzzygraph/graph.hpp"

namespace fzg {

/// Reads the line-oriented `.fzg` text format:
///
///   # comment
///   v <name> <sigma>
///   e <name1> <name2> <mu>
///
/// Blank lines and `#` lines are ignored. A vertex must be declared before
/// any edge that uses it. Errors carry the 1-based line number.
FuzzyGraph parse_graph(std::string_view text);
FuzzyGraph parse_graph(std::istream& in);
FuzzyGraph read_graph_file(const std::string& path);

/// Canonical text form: vertices in name order, then edges in index order.
/// parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const FuzzyGraph& g);

}  // namespace fzg
