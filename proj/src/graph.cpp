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

#include "fuzzygraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fuzzygraph/error.hpp"

namespace fzg {

FuzzyGraph FuzzyGraph::build(std::span<const VertexSpec> vertices,
                             std::span<const EdgeSpec> edges) {
  FuzzyGraph g;

  std::vector<std::size_t> order(vertices.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return vertices[a].name < vertices[b].name;
  });
  for (std::size_t i : order) {
    const VertexSpec& spec = vertices[i];
    if (spec.name.empty()) throw Error(ErrorCode::kSyntaxError, "empty vertex name");
    if (!g.names_.empty() && g.names_.back() == spec.name) {
      throw Error(ErrorCode::kDuplicateVertex, "vertex '" + spec.name + "' declared twice");
    }
    g.names_.push_back(spec.name);
    g.sigma_.push_back(spec.sigma);
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const EdgeSpec& spec : edges) {
    const auto describe = [&] { return "edge " + spec.u + "-" + spec.v; };
    const auto u = g.find(spec.u);
    const auto v = g.find(spec.v);
    if (!u || !v) {
      throw Error(ErrorCode::kUnknownEndpoint,
                  describe() + " uses undeclared vertex '" + (u ? spec.v : spec.u) + "'");
    }
    if (*u == *v) throw Error(ErrorCode::kSelfLoop, describe() + " is a self-loop");
    const auto key = std::minmax(*u, *v);
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::kDuplicateEdge, describe() + " declared twice");
    }
    if (spec.mu.is_zero()) throw Error(ErrorCode::kZeroMu, describe() + " has mu = 0");
    const Membership cap = std::min(g.sigma_[*u], g.sigma_[*v]);
    if (spec.mu > cap) {
      throw Error(ErrorCode::kMuExceedsSigma,
                  describe() + " has mu " + spec.mu.to_string() +
                      " above min(sigma) " + cap.to_string());
    }
    g.edges_.push_back(Edge{key.first, key.second, spec.mu});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  g.index_edges();
  return g;
}

void FuzzyGraph::index_edges() {
  adjacency_.assign(names_.size(), {});
  lookup_.clear();
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(Neighbor{e.v, e.mu});
    adjacency_[e.v].push_back(Neighbor{e.u, e.mu});
    lookup_.emplace(std::pair{e.u, e.v}, e.mu);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
}

std::optional<std::size_t> FuzzyGraph::find(std::string_view name) const {
  const auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t FuzzyGraph::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::kUnknownVertex, "no vertex named '" + std::string(name) + "'");
}

std::optional<Membership> FuzzyGraph::mu(std::size_t u, std::size_t v) const {
  const auto it = lookup_.find(std::minmax(u, v));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

FuzzyGraph FuzzyGraph::with_edges(std::vector<Edge> edges) const {
  FuzzyGraph g;
  g.names_ = names_;
  g.sigma_ = sigma_;
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  g.edges_ = std::move(edges);
  g.index_edges();
  return g;
}

FuzzyGraph remove_edge(const FuzzyGraph& g, std::size_t u, std::size_t v) {
  const auto [lo, hi] = std::minmax(u, v);
  if (!g.mu(lo, hi)) {
    throw Error(ErrorCode::kNoSuchEdge,
                "no edge " + g.name(lo) + "-" + g.name(hi));
  }
  return g.filter_edges([lo = lo, hi = hi](const Edge& e) { return e.u != lo || e.v != hi; });
}

FuzzyGraph remove_edge(const FuzzyGraph& g, std::string_view u, std::string_view v) {
  return remove_edge(g, g.index_of(u), g.index_of(v));
}

bool is_crisp_connected(const FuzzyGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : g.neighbors(x)) {
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = true;
        ++reached;
        stack.push_back(nb.vertex);
      }
    }
  }
  return reached == n;
}

std::vector<VertexId> zero_sigma_vertices(const FuzzyGraph& g) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (g.sigma(i).is_zero()) out.push_back(g.name(i));
  }
  return out;
}

}  // namespace fzg
