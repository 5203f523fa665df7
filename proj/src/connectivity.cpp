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

#include "fuzzygraph/connectivity.hpp"

#include <algorithm>

#include "fuzzygraph/error.hpp"

namespace fzg {

std::string_view to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::kAlphaStrong: return "alpha";
    case EdgeClass::kBetaStrong: return "beta";
    case EdgeClass::kDelta: return "delta";
  }
  return "unknown";
}

StrengthMatrix strength_of_connectedness(const FuzzyGraph& g) {
  const std::size_t n = g.vertex_count();
  StrengthMatrix conn(n);
  for (const Edge& e : g.edges()) conn.set(e.u, e.v, e.mu);

  // Widest path: conn(i,j) <- max(conn(i,j), min(conn(i,k), conn(k,j))).
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Membership ik = conn.at(i, k);
      if (ik.is_zero()) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (j == k) continue;
        const Membership through = std::min(ik, conn.at(k, j));
        if (through > conn.at(i, j)) conn.set(i, j, through);
      }
    }
  }
  return conn;
}

EdgeClassification classify_edge(const FuzzyGraph& g, std::size_t u, std::size_t v) {
  const auto mu = g.mu(u, v);
  if (!mu) throw Error(ErrorCode::kNoSuchEdge, "no edge " + g.name(u) + "-" + g.name(v));

  const Membership residual = strength_of_connectedness(remove_edge(g, u, v)).at(u, v);
  EdgeClass cls = EdgeClass::kDelta;
  if (*mu > residual) {
    cls = EdgeClass::kAlphaStrong;
  } else if (*mu == residual) {
    cls = EdgeClass::kBetaStrong;
  }
  const auto [lo, hi] = std::minmax(u, v);
  return EdgeClassification{Edge{lo, hi, *mu}, cls, residual};
}

EdgeClass classify_edge(const FuzzyGraph& g, std::string_view u, std::string_view v) {
  return classify_edge(g, g.index_of(u), g.index_of(v)).cls;
}

std::vector<EdgeClassification> classify_edges(const FuzzyGraph& g) {
  std::vector<EdgeClassification> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) out.push_back(classify_edge(g, e.u, e.v));
  return out;
}

FuzzyGraph strong_subgraph(const FuzzyGraph& g) {
  std::vector<Edge> kept;
  for (const EdgeClassification& c : classify_edges(g)) {
    if (is_strong(c.cls)) kept.push_back(c.edge);
  }
  return g.with_edges(std::move(kept));
}

}  // namespace fzg
