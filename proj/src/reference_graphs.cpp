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

#include "fuzzygraph/reference_graphs.hpp"

#include <string>
#include <vector>

namespace fzg::reference {
namespace {

Membership grade(const char* text) { return Membership::parse(text); }

std::vector<VertexSpec> unit_vertices(std::string_view letters) {
  std::vector<VertexSpec> out;
  for (char c : letters) out.push_back(VertexSpec{std::string(1, c), Membership::one()});
  return out;
}

}  // namespace

FuzzyGraph counterexample_tree() {
  const std::vector<EdgeSpec> edges{
      {"a", "b", grade("0.1")}, {"b", "c", grade("0.3")}, {"e", "c", grade("0.3")},
      {"c", "d", grade("0.5")}, {"a", "e", grade("0.6")},
  };
  return FuzzyGraph::build(unit_vertices("abcde"), edges);
}

FuzzyGraph counterexample_tree_mst() { return remove_edge(counterexample_tree(), "a", "b"); }

FuzzyGraph alternating_c4(Membership kappa, Membership eta) {
  const std::vector<EdgeSpec> edges{
      {"a", "b", kappa}, {"c", "d", kappa}, {"b", "c", eta}, {"a", "d", eta}};
  return FuzzyGraph::build(unit_vertices("abcd"), edges);
}

FuzzyGraph alternating_c6(Membership kappa, Membership eta) {
  const std::vector<EdgeSpec> edges{
      {"a", "b", kappa}, {"c", "d", kappa}, {"e", "f", kappa},
      {"b", "c", eta},   {"d", "e", eta},   {"a", "f", eta},
  };
  return FuzzyGraph::build(unit_vertices("abcdef"), edges);
}

}  // namespace fzg::reference
