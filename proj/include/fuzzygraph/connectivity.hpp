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
#include <string_view>
#include <vector>

#include "fuzzygraph/graph.hpp"
#include "fuzzygraph/membership.hpp"

namespace fzg {

/// All-pairs strength of connectedness CONN(u, v): the best (max over paths)
/// of the weakest edge (min along the path). Zero for pairs in different
/// components. The diagonal is not meaningful and reads as zero.
class StrengthMatrix {
 public:
  StrengthMatrix() = default;
  explicit StrengthMatrix(std::size_t n) : n_(n), conn_(n * n) {}

  std::size_t size() const { return n_; }
  Membership at(std::size_t u, std::size_t v) const { return conn_[u * n_ + v]; }
  void set(std::size_t u, std::size_t v, Membership m) {
    conn_[u * n_ + v] = m;
    conn_[v * n_ + u] = m;
  }

  friend bool operator==(const StrengthMatrix&, const StrengthMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Membership> conn_;
};

enum class EdgeClass { kAlphaStrong, kBetaStrong, kDelta };

std::string_view to_string(EdgeClass c);

inline bool is_strong(EdgeClass c) { return c != EdgeClass::kDelta; }

struct EdgeClassification {
  Edge edge;
  EdgeClass cls = EdgeClass::kDelta;
  /// CONN between the endpoints once the edge itself is deleted.
  Membership residual;
};

/// Max-min closure over every intermediate vertex (widest-path
/// Floyd-Warshall). O(n^3).
StrengthMatrix strength_of_connectedness(const FuzzyGraph& g);

/// Compares mu(uv) with CONN of g - uv. Throws NoSuchEdge.
EdgeClassification classify_edge(const FuzzyGraph& g, std::size_t u, std::size_t v);
EdgeClass classify_edge(const FuzzyGraph& g, std::string_view u, std::string_view v);

/// One entry per edge of g, in g.edges() order.
std::vector<EdgeClassification> classify_edges(const FuzzyGraph& g);

/// Same vertices; keeps exactly the alpha- and beta-strong edges.
FuzzyGraph strong_subgraph(const FuzzyGraph& g);

}  // namespace fzg
