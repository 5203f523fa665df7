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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fuzzygraph/graph.hpp"
#include "fuzzygraph/index_value.hpp"
#include "fuzzygraph/membership.hpp"

namespace fzg {

struct SpanningTree {
  std::vector<Edge> edges;  // sorted by (u, v)
  IndexValue total_strength;
};

struct GraphKind {
  bool is_connected = false;
  bool is_fuzzy_tree = false;
  bool is_fuzzy_cycle = false;
  bool is_saturated_fuzzy_cycle = false;

  friend bool operator==(const GraphKind&, const GraphKind&) = default;
};

/// Alternating cycle v0..v(n-1): edge (vi, vi+1 mod n) has grade kappa for
/// even i and eta for odd i.
struct SaturatedCycleSpec {
  int n = 4;
  Membership kappa;
  Membership eta;

  friend bool operator==(const SaturatedCycleSpec&, const SaturatedCycleSpec&) = default;
};

/// Kruskal on descending mu, ties broken by (u, v) name order. Throws
/// Disconnected when g is not crisp-connected.
SpanningTree maximum_spanning_tree(const FuzzyGraph& g);

/// g restricted to the tree's edges.
FuzzyGraph tree_graph(const FuzzyGraph& g, const SpanningTree& tree);

/// Returns the MST witness when every non-tree edge uv satisfies
/// mu(uv) < CONN_F(u, v), with CONN measured inside the tree F.
/// Throws Disconnected.
std::optional<SpanningTree> is_fuzzy_tree(const FuzzyGraph& g);

/// Crisp skeleton is one cycle through every vertex, and the weakest grade
/// appears on at least two edges.
bool is_fuzzy_cycle(const FuzzyGraph& g);

/// A fuzzy cycle where every vertex meets at least one alpha-strong and at
/// least one beta-strong edge.
bool is_saturated_fuzzy_cycle(const FuzzyGraph& g);

GraphKind graph_kind(const FuzzyGraph& g);

/// Throws BadSpec unless n is even, n >= 4, kappa > eta > 0.
void validate(const SaturatedCycleSpec& spec);

FuzzyGraph make_saturated_cycle(const SaturatedCycleSpec& spec);

/// A uniformly random labeled tree on n vertices (Pruefer code) with grades
/// on the 0.01 grid, plus up to `extra_edges` non-tree edges, each strictly
/// weaker than the in-tree strength between its endpoints. The result is
/// always a fuzzy tree whose MST is the generated tree. Throws BadParams
/// when n < 2 or extra_edges < 0.
FuzzyGraph random_fuzzy_tree(std::uint64_t seed, int n, int extra_edges);

/// Vertex names used by the generators: v0, v1, ... v(n-1).
VertexId generated_vertex_name(std::size_t i);

}  // namespace fzg
