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
#include <optional>
#include <string>
#include <vector>

#include "fuzzygraph/connectivity.hpp"
#include "fuzzygraph/graph.hpp"
#include "fuzzygraph/index_value.hpp"
#include "fuzzygraph/structure.hpp"

namespace fzg {

/// d_s(u, v): shortest total grade over paths of the strong subgraph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), ds_(n * n) {}

  std::size_t size() const { return n_; }
  const IndexValue& at(std::size_t u, std::size_t v) const { return ds_[u * n_ + v]; }
  void set(std::size_t u, std::size_t v, const IndexValue& d) {
    ds_[u * n_ + v] = d;
    ds_[v * n_ + u] = d;
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<IndexValue> ds_;
};

/// Dijkstra from every source over the strong subgraph. Throws
/// StrongDisconnected when some pair has no strong path.
DistanceMatrix geodesic_distance(const FuzzyGraph& g);

/// WI(G) = sum over unordered pairs of sigma(u) sigma(v) d_s(u, v).
IndexValue wiener_index(const FuzzyGraph& g);

/// CI(G) = sum over unordered pairs of sigma(u) sigma(v) CONN(u, v).
IndexValue connectivity_index(const FuzzyGraph& g);

/// The published closed form n((n+3)^2 - 6)/16 (kappa + eta) claimed for
/// saturated fuzzy cycles. It is known to be wrong; the falsifier uses it as
/// the value under test. Throws BadSpec.
IndexValue theorem_star_formula(const SaturatedCycleSpec& spec);

struct PairEntry {
  std::size_t u = 0;
  std::size_t v = 0;
  Membership conn;
  std::optional<IndexValue> ds;  // empty when the strong subgraph is disconnected
};

struct IndexReport {
  std::vector<VertexId> names;
  std::optional<IndexValue> wiener;  // empty when the strong subgraph is disconnected
  IndexValue connectivity;
  std::vector<PairEntry> pairs;  // u < v, row-major
  GraphKind kind;
  std::vector<std::string> warnings;
};

/// Never throws for a valid graph; missing quantities are left empty.
IndexReport index_report(const FuzzyGraph& g);

}  // namespace fzg
