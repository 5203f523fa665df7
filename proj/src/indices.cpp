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

#include "fuzzygraph/indices.hpp"

#include <functional>
#include <limits>
#include <queue>

#include "fuzzygraph/error.hpp"

namespace fzg {
namespace {

constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();

/// Exact single-source shortest paths; lengths are integer micro-units.
std::vector<std::int64_t> dijkstra(const FuzzyGraph& g, std::size_t source) {
  std::vector<std::int64_t> dist(g.vertex_count(), kUnreached);
  using Item = std::pair<std::int64_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
  dist[source] = 0;
  frontier.emplace(0, source);
  while (!frontier.empty()) {
    const auto [d, x] = frontier.top();
    frontier.pop();
    if (d != dist[x]) continue;
    for (const Neighbor& nb : g.neighbors(x)) {
      const std::int64_t candidate = d + nb.mu.micros();
      if (candidate < dist[nb.vertex]) {
        dist[nb.vertex] = candidate;
        frontier.emplace(candidate, nb.vertex);
      }
    }
  }
  return dist;
}

IndexValue sigma_product(const FuzzyGraph& g, std::size_t u, std::size_t v) {
  return IndexValue::from(g.sigma(u)) * IndexValue::from(g.sigma(v));
}

std::optional<DistanceMatrix> try_geodesic_distance(const FuzzyGraph& g) {
  const FuzzyGraph strong = strong_subgraph(g);
  const std::size_t n = g.vertex_count();
  DistanceMatrix ds(n);
  for (std::size_t u = 0; u < n; ++u) {
    const auto dist = dijkstra(strong, u);
    for (std::size_t v = u + 1; v < n; ++v) {
      if (dist[v] == kUnreached) return std::nullopt;
      ds.set(u, v, IndexValue::from_micros(dist[v]));
    }
  }
  return ds;
}

}  // namespace

DistanceMatrix geodesic_distance(const FuzzyGraph& g) {
  if (auto ds = try_geodesic_distance(g)) return *std::move(ds);
  throw Error(ErrorCode::kStrongDisconnected, "strong subgraph is not connected");
}

IndexValue wiener_index(const FuzzyGraph& g) {
  const DistanceMatrix ds = geodesic_distance(g);
  IndexValue total;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
      total += sigma_product(g, u, v) * ds.at(u, v);
    }
  }
  return total;
}

IndexValue connectivity_index(const FuzzyGraph& g) {
  const StrengthMatrix conn = strength_of_connectedness(g);
  IndexValue total;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
      total += sigma_product(g, u, v) * IndexValue::from(conn.at(u, v));
    }
  }
  return total;
}

IndexValue theorem_star_formula(const SaturatedCycleSpec& spec) {
  validate(spec);
  const std::int64_t n = spec.n;
  const IndexValue coefficient = IndexValue::from_fraction(n * ((n + 3) * (n + 3) - 6), 16);
  return coefficient * (IndexValue::from(spec.kappa) + IndexValue::from(spec.eta));
}

IndexReport index_report(const FuzzyGraph& g) {
  IndexReport r;
  r.names = g.names();
  r.kind = graph_kind(g);
  for (const VertexId& name : zero_sigma_vertices(g)) {
    r.warnings.push_back("vertex '" + name + "' has sigma = 0 and contributes nothing");
  }

  const StrengthMatrix conn = strength_of_connectedness(g);
  const std::optional<DistanceMatrix> ds = try_geodesic_distance(g);
  if (!ds) r.warnings.push_back("strong subgraph is disconnected; WI unavailable");

  IndexValue wiener;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
      PairEntry entry{u, v, conn.at(u, v), std::nullopt};
      const IndexValue weight = sigma_product(g, u, v);
      r.connectivity += weight * IndexValue::from(entry.conn);
      if (ds) {
        entry.ds = ds->at(u, v);
        wiener += weight * *entry.ds;
      }
      r.pairs.push_back(std::move(entry));
    }
  }
  if (ds) r.wiener = wiener;
  return r;
}

}  // namespace fzg
