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

#include "fuzzygraph/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "fuzzygraph/connectivity.hpp"
#include "fuzzygraph/error.hpp"
#include "rng.hpp"

namespace fzg {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_connected(const FuzzyGraph& g) {
  if (!is_crisp_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is not connected");
}

constexpr std::int64_t kGridStep = Membership::kScale / 100;

Membership grid_value(std::int64_t steps) { return Membership::from_micros(steps * kGridStep); }

/// Labeled tree from a Pruefer sequence over 0..n-1.
std::vector<std::pair<std::size_t, std::size_t>> decode_pruefer(
    const std::vector<std::size_t>& code, std::size_t n) {
  std::vector<std::size_t> degree(n, 1);
  for (std::size_t x : code) ++degree[x];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] == 1) leaves.push(i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t x : code) {
    const std::size_t leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  const std::size_t a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return edges;
}

}  // namespace

SpanningTree maximum_spanning_tree(const FuzzyGraph& g) {
  require_connected(g);
  std::vector<Edge> order = g.edges();
  // Edges are already in (u, v) order, which is name order.
  std::stable_sort(order.begin(), order.end(),
                   [](const Edge& a, const Edge& b) { return a.mu > b.mu; });

  DisjointSets sets(g.vertex_count());
  SpanningTree tree;
  for (const Edge& e : order) {
    if (sets.unite(e.u, e.v)) {
      tree.edges.push_back(e);
      tree.total_strength += IndexValue::from(e.mu);
    }
  }
  std::sort(tree.edges.begin(), tree.edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return tree;
}

FuzzyGraph tree_graph(const FuzzyGraph& g, const SpanningTree& tree) {
  return g.with_edges(tree.edges);
}

std::optional<SpanningTree> is_fuzzy_tree(const FuzzyGraph& g) {
  SpanningTree tree = maximum_spanning_tree(g);
  const StrengthMatrix in_tree = strength_of_connectedness(tree_graph(g, tree));
  for (const Edge& e : g.edges()) {
    const bool tree_edge = std::binary_search(
        tree.edges.begin(), tree.edges.end(), e, [](const Edge& a, const Edge& b) {
          return std::tie(a.u, a.v) < std::tie(b.u, b.v);
        });
    if (!tree_edge && !(e.mu < in_tree.at(e.u, e.v))) return std::nullopt;
  }
  return tree;
}

bool is_fuzzy_cycle(const FuzzyGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || g.edge_count() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.neighbors(i).size() != 2) return false;
  }
  if (!is_crisp_connected(g)) return false;

  const Membership weakest =
      std::min_element(g.edges().begin(), g.edges().end(),
                       [](const Edge& a, const Edge& b) { return a.mu < b.mu; })
          ->mu;
  const auto at_minimum = std::count_if(g.edges().begin(), g.edges().end(),
                                        [&](const Edge& e) { return e.mu == weakest; });
  return at_minimum >= 2;
}

bool is_saturated_fuzzy_cycle(const FuzzyGraph& g) {
  if (!is_fuzzy_cycle(g)) return false;
  std::vector<bool> meets_alpha(g.vertex_count(), false);
  std::vector<bool> meets_beta(g.vertex_count(), false);
  for (const EdgeClassification& c : classify_edges(g)) {
    if (c.cls == EdgeClass::kAlphaStrong) {
      meets_alpha[c.edge.u] = meets_alpha[c.edge.v] = true;
    } else if (c.cls == EdgeClass::kBetaStrong) {
      meets_beta[c.edge.u] = meets_beta[c.edge.v] = true;
    }
  }
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (!meets_alpha[i] || !meets_beta[i]) return false;
  }
  return true;
}

GraphKind graph_kind(const FuzzyGraph& g) {
  GraphKind kind;
  kind.is_connected = is_crisp_connected(g);
  if (kind.is_connected && g.vertex_count() > 0) {
    kind.is_fuzzy_tree = is_fuzzy_tree(g).has_value();
  }
  kind.is_fuzzy_cycle = is_fuzzy_cycle(g);
  kind.is_saturated_fuzzy_cycle = kind.is_fuzzy_cycle && is_saturated_fuzzy_cycle(g);
  return kind;
}

void validate(const SaturatedCycleSpec& spec) {
  if (spec.n < 4 || spec.n % 2 != 0) {
    throw Error(ErrorCode::kBadSpec, "cycle length must be even and at least 4, got " +
                                         std::to_string(spec.n));
  }
  if (spec.eta.is_zero()) throw Error(ErrorCode::kBadSpec, "eta must be positive");
  if (!(spec.kappa > spec.eta)) {
    throw Error(ErrorCode::kBadSpec, "kappa " + spec.kappa.to_string() +
                                         " must exceed eta " + spec.eta.to_string());
  }
}

VertexId generated_vertex_name(std::size_t i) { return "v" + std::to_string(i); }

FuzzyGraph make_saturated_cycle(const SaturatedCycleSpec& spec) {
  validate(spec);
  const auto n = static_cast<std::size_t>(spec.n);
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i) {
    vertices.push_back(VertexSpec{generated_vertex_name(i), Membership::one()});
  }
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back(EdgeSpec{generated_vertex_name(i), generated_vertex_name((i + 1) % n),
                             i % 2 == 0 ? spec.kappa : spec.eta});
  }
  return FuzzyGraph::build(vertices, edges);
}

FuzzyGraph random_fuzzy_tree(std::uint64_t seed, int n, int extra_edges) {
  if (n < 2 || extra_edges < 0) {
    throw Error(ErrorCode::kBadParams, "need n >= 2 and extra_edges >= 0");
  }
  detail::Rng rng(seed);
  const auto count = static_cast<std::size_t>(n);

  std::vector<std::size_t> code(count - 2);
  for (auto& x : code) x = rng.uniform_below(count);
  const auto tree = decode_pruefer(code, count);

  std::vector<VertexSpec> vertices;
  std::vector<std::int64_t> sigma_steps;
  for (std::size_t i = 0; i < count; ++i) {
    sigma_steps.push_back(rng.uniform_int(1, 100));
    vertices.push_back(VertexSpec{generated_vertex_name(i), grid_value(sigma_steps.back())});
  }
  std::vector<EdgeSpec> edges;
  for (const auto& [a, b] : tree) {
    const std::int64_t cap = std::min(sigma_steps[a], sigma_steps[b]);
    edges.push_back(EdgeSpec{generated_vertex_name(a), generated_vertex_name(b),
                             grid_value(rng.uniform_int(1, cap))});
  }
  const FuzzyGraph skeleton = FuzzyGraph::build(vertices, edges);
  const StrengthMatrix in_tree = strength_of_connectedness(skeleton);

  // Non-tree edges must stay strictly below the in-tree strength, so pairs
  // whose tree strength is a single grid step cannot take one.
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t v = u + 1; v < count; ++v) {
      if (!skeleton.mu(u, v) && in_tree.at(u, v).micros() > kGridStep) {
        candidates.emplace_back(u, v);
      }
    }
  }
  std::vector<Edge> all = skeleton.edges();
  for (int added = 0; added < extra_edges && !candidates.empty(); ++added) {
    const std::size_t pick = rng.uniform_below(candidates.size());
    const auto [u, v] = candidates[pick];
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
    const std::int64_t limit = in_tree.at(u, v).micros() / kGridStep - 1;
    all.push_back(Edge{u, v, grid_value(rng.uniform_int(1, limit))});
  }
  return skeleton.with_edges(std::move(all));
}

}  // namespace fzg
