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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzygraph/membership.hpp"

namespace fzg {

using VertexId = std::string;

struct VertexSpec {
  VertexId name;
  Membership sigma;
};

struct EdgeSpec {
  VertexId u;
  VertexId v;
  Membership mu;
};

/// Undirected edge between vertex indices, normalized so that u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Membership mu;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  std::size_t vertex = 0;
  Membership mu;
};

/// A simple undirected fuzzy graph G = (sigma, mu).
///
/// Immutable once built. Vertices are indexed 0..n-1 in lexicographic name
/// order, and edges are listed sorted by (u, v) index, so every traversal
/// and every report is deterministic.
class FuzzyGraph {
 public:
  /// Validates and builds a graph. Throws fzg::Error with one of
  /// DuplicateVertex, DuplicateEdge, SelfLoop, UnknownEndpoint, ZeroMu or
  /// MuExceedsSigma.
  static FuzzyGraph build(std::span<const VertexSpec> vertices,
                          std::span<const EdgeSpec> edges);

  FuzzyGraph() = default;

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<VertexId>& names() const { return names_; }
  const VertexId& name(std::size_t i) const { return names_.at(i); }
  Membership sigma(std::size_t i) const { return sigma_.at(i); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownVertex.
  std::size_t index_of(std::string_view name) const;

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Neighbor> neighbors(std::size_t i) const { return adjacency_.at(i); }
  std::optional<Membership> mu(std::size_t u, std::size_t v) const;

  /// The same vertex set restricted to the edges for which `keep` is true.
  template <typename Pred>
  FuzzyGraph filter_edges(Pred keep) const {
    std::vector<Edge> kept;
    for (const Edge& e : edges_) {
      if (keep(e)) kept.push_back(e);
    }
    return with_edges(std::move(kept));
  }

  /// Vertex-preserving copy with a replacement edge list. Edges must come
  /// from this graph (or satisfy its invariants); no validation is repeated.
  FuzzyGraph with_edges(std::vector<Edge> edges) const;

  friend bool operator==(const FuzzyGraph& a, const FuzzyGraph& b) {
    return a.names_ == b.names_ && a.sigma_ == b.sigma_ && a.edges_ == b.edges_;
  }

 private:
  void index_edges();

  std::vector<VertexId> names_;
  std::vector<Membership> sigma_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::map<std::pair<std::size_t, std::size_t>, Membership> lookup_;
};

inline FuzzyGraph build_graph(std::span<const VertexSpec> vertices,
                              std::span<const EdgeSpec> edges) {
  return FuzzyGraph::build(vertices, edges);
}

/// Returns g without edge uv; g is left untouched. Throws NoSuchEdge (or
/// UnknownVertex when a name is not in g).
FuzzyGraph remove_edge(const FuzzyGraph& g, std::string_view u, std::string_view v);
FuzzyGraph remove_edge(const FuzzyGraph& g, std::size_t u, std::size_t v);

/// True when the crisp skeleton (all edges, ignoring grades) is connected.
/// The empty graph counts as connected.
bool is_crisp_connected(const FuzzyGraph& g);

/// Vertices whose grade is zero; they contribute nothing to either index.
std::vector<VertexId> zero_sigma_vertices(const FuzzyGraph& g);

}  // namespace fzg
