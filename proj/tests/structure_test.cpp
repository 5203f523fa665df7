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

#include <gtest/gtest.h>

#include <algorithm>

#include "fuzzygraph/connectivity.hpp"
#include "fuzzygraph/error.hpp"
#include "fuzzygraph/fzg_format.hpp"
#include "fuzzygraph/reference_graphs.hpp"
#include "fuzzygraph/structure.hpp"
#include "test_support.hpp"

namespace fzg {
namespace {

using testing::d;
using testing::g;

std::vector<std::string> edge_names(const FuzzyGraph& graph, const std::vector<Edge>& edges) {
  std::vector<std::string> out;
  for (const Edge& e : edges) out.push_back(graph.name(e.u) + graph.name(e.v));
  std::sort(out.begin(), out.end());
  return out;
}

IndexValue best_by_enumeration(const FuzzyGraph& graph, int* attaining = nullptr) {
  const auto trees = testing::all_spanning_trees(graph);
  IndexValue best;
  for (const auto& t : trees) best = std::max(best, testing::total_strength(t));
  if (attaining) {
    *attaining = static_cast<int>(std::count_if(trees.begin(), trees.end(), [&](const auto& t) {
      return testing::total_strength(t) == best;
    }));
  }
  return best;
}

TEST(MaximumSpanningTree, CounterexampleTree) {
  const FuzzyGraph tree = reference::counterexample_tree();
  const SpanningTree mst = maximum_spanning_tree(tree);
  // Cycle a-b-c-e plus pendant c-d: four spanning trees in total.
  EXPECT_EQ(testing::all_spanning_trees(tree).size(), 4u);
  EXPECT_EQ(best_by_enumeration(tree), d("1.7"));
  EXPECT_EQ(mst.total_strength, d("1.7"));
  EXPECT_EQ(edge_names(tree, mst.edges), (std::vector<std::string>{"ae", "bc", "cd", "ce"}));
}

TEST(MaximumSpanningTree, TreeInputIsItself) {
  const FuzzyGraph f = reference::counterexample_tree_mst();
  const SpanningTree mst = maximum_spanning_tree(f);
  EXPECT_EQ(mst.edges, f.edges());
  EXPECT_EQ(tree_graph(f, mst), f);
}

TEST(MaximumSpanningTree, AlternatingC4DropsOneEtaEdge) {
  const FuzzyGraph c4 = reference::alternating_c4(g("0.5"), g("0.3"));
  const SpanningTree mst = maximum_spanning_tree(c4);
  EXPECT_EQ(best_by_enumeration(c4), d("1.3"));
  EXPECT_EQ(mst.total_strength, d("1.3"));
  // Ties on eta resolve by name order: ad is taken before bc.
  EXPECT_EQ(edge_names(c4, mst.edges), (std::vector<std::string>{"ab", "ad", "cd"}));
}

TEST(MaximumSpanningTree, DisconnectedThrows) {
  const FuzzyGraph split = parse_graph("v a 1\nv b 1\n");
  try {
    maximum_spanning_tree(split);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
  }
}

TEST(MaximumSpanningTree, MatchesEnumerationOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const FuzzyGraph graph = testing::random_connected_graph(seed, 2 + static_cast<int>(seed % 6));
    const SpanningTree mst = maximum_spanning_tree(graph);
    EXPECT_EQ(mst.edges.size(), graph.vertex_count() - 1);
    EXPECT_TRUE(is_crisp_connected(tree_graph(graph, mst)));
    EXPECT_EQ(mst.total_strength, best_by_enumeration(graph)) << "seed " << seed;
  }
}

TEST(IsFuzzyTree, Examples) {
  EXPECT_TRUE(is_fuzzy_tree(reference::counterexample_tree()).has_value());
  EXPECT_TRUE(is_fuzzy_tree(reference::counterexample_tree_mst()).has_value());
  EXPECT_FALSE(is_fuzzy_tree(reference::alternating_c4(g("0.5"), g("0.3"))).has_value());
  EXPECT_TRUE(is_fuzzy_tree(parse_graph("v a 1\nv b 1\ne a b 0.2\n")).has_value());
}

TEST(IsFuzzyTree, AgreesWithNoBetaCharacterization) {
  // On a fuzzy tree no edge is beta-strong and the strong edges form the MST.
  // Conversely, checked here only in the direction that is a theorem.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const FuzzyGraph graph = testing::random_connected_graph(seed, 2 + static_cast<int>(seed % 6));
    if (!is_fuzzy_tree(graph)) continue;
    for (const auto& c : classify_edges(graph)) EXPECT_NE(c.cls, EdgeClass::kBetaStrong);
  }
}

TEST(IsFuzzyCycle, Examples) {
  EXPECT_TRUE(is_fuzzy_cycle(reference::alternating_c4(g("0.5"), g("0.3"))));
  EXPECT_TRUE(is_fuzzy_cycle(reference::alternating_c6(g("0.5"), g("0.3"))));
  EXPECT_FALSE(is_fuzzy_cycle(
      parse_graph("v a 1\nv b 1\nv c 1\ne a b 0.1\ne b c 0.2\ne a c 0.3\n")));
  EXPECT_FALSE(is_fuzzy_cycle(reference::counterexample_tree()));
  // Two disjoint triangles: every vertex has degree 2 but it is not one cycle.
  EXPECT_FALSE(is_fuzzy_cycle(parse_graph(
      "v a 1\nv b 1\nv c 1\nv x 1\nv y 1\nv z 1\n"
      "e a b 0.1\ne b c 0.1\ne a c 0.1\ne x y 0.1\ne y z 0.1\ne x z 0.1\n")));
}

TEST(IsSaturatedFuzzyCycle, Examples) {
  EXPECT_TRUE(is_saturated_fuzzy_cycle(reference::alternating_c4(g("0.5"), g("0.3"))));
  EXPECT_TRUE(is_saturated_fuzzy_cycle(reference::alternating_c6(g("0.5"), g("0.3"))));
  const FuzzyGraph flat = reference::alternating_c4(g("0.3"), g("0.3"));
  EXPECT_TRUE(is_fuzzy_cycle(flat));
  EXPECT_FALSE(is_saturated_fuzzy_cycle(flat));
  for (const auto& c : classify_edges(flat)) EXPECT_EQ(c.cls, EdgeClass::kBetaStrong);
}

TEST(IsSaturatedFuzzyCycle, OddCycleNeverSaturated) {
  std::vector<VertexSpec> vs;
  for (char c : std::string("abcde")) vs.push_back({std::string(1, c), Membership::one()});
  int cycles = 0;
  for (int code = 0; code < 3125; ++code) {
    int rest = code;
    std::vector<EdgeSpec> es;
    for (int i = 0; i < 5; ++i) {
      const int step = rest % 5 + 1;
      rest /= 5;
      es.push_back({vs[i].name, vs[(i + 1) % 5].name, Membership::from_micros(step * 100'000)});
    }
    const FuzzyGraph c5 = build_graph(vs, es);
    cycles += is_fuzzy_cycle(c5);
    ASSERT_FALSE(is_saturated_fuzzy_cycle(c5)) << serialize_graph(c5);
  }
  EXPECT_GT(cycles, 0);
}

TEST(MakeSaturatedCycle, MatchesReferenceGraphsUpToRenaming) {
  const FuzzyGraph c4 = make_saturated_cycle({4, g("0.5"), g("0.3")});
  const FuzzyGraph ref = reference::alternating_c4(g("0.5"), g("0.3"));
  // v0..v3 <-> a..d in order.
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_EQ(c4.mu(c4.index_of("v" + std::to_string(i)), c4.index_of("v" + std::to_string(j))),
                ref.mu(ref.index_of(std::string(1, 'a' + i)), ref.index_of(std::string(1, 'a' + j))));
    }
  }
  const FuzzyGraph c6 = make_saturated_cycle({6, g("0.7"), g("0.2")});
  const FuzzyGraph ref6 = reference::alternating_c6(g("0.7"), g("0.2"));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      EXPECT_EQ(c6.mu(c6.index_of("v" + std::to_string(i)), c6.index_of("v" + std::to_string(j))),
                ref6.mu(ref6.index_of(std::string(1, 'a' + i)), ref6.index_of(std::string(1, 'a' + j))));
    }
  }
}

TEST(MakeSaturatedCycle, HalfAlphaHalfBeta) {
  for (int n = 4; n <= 16; n += 2) {
    const FuzzyGraph cycle = make_saturated_cycle({n, g("0.9"), g("0.4")});
    EXPECT_TRUE(is_saturated_fuzzy_cycle(cycle));
    int alpha = 0;
    int beta = 0;
    for (const auto& c : classify_edges(cycle)) {
      if (c.cls == EdgeClass::kAlphaStrong) {
        ++alpha;
        EXPECT_EQ(c.edge.mu, g("0.9"));
      } else {
        ASSERT_EQ(c.cls, EdgeClass::kBetaStrong);
        ++beta;
        EXPECT_EQ(c.edge.mu, g("0.4"));
      }
    }
    EXPECT_EQ(alpha, n / 2);
    EXPECT_EQ(beta, n / 2);
  }
}

TEST(MakeSaturatedCycle, RejectsBadSpecs) {
  for (const SaturatedCycleSpec& bad :
       {SaturatedCycleSpec{5, g("0.5"), g("0.3")}, SaturatedCycleSpec{2, g("0.5"), g("0.3")},
        SaturatedCycleSpec{4, g("0.3"), g("0.3")}, SaturatedCycleSpec{4, g("0.3"), g("0.5")},
        SaturatedCycleSpec{4, g("0.5"), g("0")}}) {
    try {
      make_saturated_cycle(bad);
      ADD_FAILURE() << "n=" << bad.n;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadSpec);
    }
  }
}

TEST(RandomFuzzyTree, TwoVerticesIsSingleEdge) {
  const FuzzyGraph tree = random_fuzzy_tree(99, 2, 0);
  EXPECT_EQ(tree.vertex_count(), 2u);
  EXPECT_EQ(tree.edge_count(), 1u);
  EXPECT_TRUE(is_fuzzy_tree(tree).has_value());
}

TEST(RandomFuzzyTree, DeterministicPerSeed) {
  EXPECT_EQ(random_fuzzy_tree(5, 9, 3), random_fuzzy_tree(5, 9, 3));
  EXPECT_NE(random_fuzzy_tree(5, 9, 3), random_fuzzy_tree(6, 9, 3));
}

TEST(RandomFuzzyTree, AlwaysAFuzzyTree) {
  int with_extra = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const FuzzyGraph tree = random_fuzzy_tree(seed, 10, 3);
    ASSERT_EQ(tree.vertex_count(), 10u);
    ASSERT_TRUE(is_fuzzy_tree(tree).has_value()) << serialize_graph(tree);
    with_extra += tree.edge_count() > 9;
  }
  EXPECT_GT(with_extra, 500);
}

TEST(RandomFuzzyTree, GradesOnTheGridAndWithinSigma) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const FuzzyGraph tree = random_fuzzy_tree(seed, 12, 4);
    for (std::size_t i = 0; i < tree.vertex_count(); ++i) {
      EXPECT_EQ(tree.sigma(i).micros() % 10'000, 0u);
      EXPECT_GT(tree.sigma(i).micros(), 0u);
    }
    for (const Edge& e : tree.edges()) EXPECT_EQ(e.mu.micros() % 10'000, 0u);
  }
}

TEST(RandomFuzzyTree, RejectsBadParams) {
  EXPECT_THROW(random_fuzzy_tree(1, 1, 0), Error);
  EXPECT_THROW(random_fuzzy_tree(1, 4, -1), Error);
}

TEST(FuzzyTreeProperties, MstIsStrongSetAllAlphaAndUnique) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 2 + static_cast<int>(seed % 6);
    const FuzzyGraph tree = random_fuzzy_tree(seed, n, static_cast<int>(seed % 4));
    const auto mst = is_fuzzy_tree(tree);
    ASSERT_TRUE(mst.has_value());

    std::vector<Edge> strong;
    for (const auto& c : classify_edges(tree)) {
      EXPECT_NE(c.cls, EdgeClass::kBetaStrong);
      if (c.cls == EdgeClass::kAlphaStrong) strong.push_back(c.edge);
    }
    EXPECT_EQ(strong, mst->edges);

    const StrengthMatrix in_g = strength_of_connectedness(tree);
    const StrengthMatrix in_f = strength_of_connectedness(tree_graph(tree, *mst));
    EXPECT_EQ(in_g, in_f);

    int attaining = 0;
    EXPECT_EQ(best_by_enumeration(tree, &attaining), mst->total_strength);
    EXPECT_EQ(attaining, 1) << serialize_graph(tree);
  }
}

TEST(GraphKind, FlagInvariantsOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const FuzzyGraph graph = testing::random_connected_graph(seed, 3 + static_cast<int>(seed % 5));
    const GraphKind kind = graph_kind(graph);
    EXPECT_TRUE(kind.is_connected);
    if (kind.is_saturated_fuzzy_cycle) EXPECT_TRUE(kind.is_fuzzy_cycle);
    EXPECT_FALSE(kind.is_fuzzy_tree && kind.is_fuzzy_cycle);
  }
  const GraphKind c6 = graph_kind(reference::alternating_c6(g("0.5"), g("0.3")));
  EXPECT_TRUE(c6.is_saturated_fuzzy_cycle);
  EXPECT_FALSE(c6.is_fuzzy_tree);
  EXPECT_FALSE(graph_kind(parse_graph("v a 1\nv b 1\n")).is_connected);
}

}  // namespace
}  // namespace fzg
