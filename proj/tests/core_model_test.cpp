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

#include <map>
#include <set>
#include <sstream>

#include "fuzzygraph/error.hpp"
#include "fuzzygraph/fzg_format.hpp"
#include "fuzzygraph/graph.hpp"
#include "fuzzygraph/reference_graphs.hpp"
#include "test_support.hpp"

namespace fzg {
namespace {

using testing::d;
using testing::g;

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected fzg::Error";
  return ErrorCode::kSyntaxError;
}

TEST(Membership, ParsesExactMicroUnits) {
  EXPECT_EQ(g("0.1").micros(), 100'000u);
  EXPECT_EQ(g("1").micros(), 1'000'000u);
  EXPECT_EQ(g("1.000000").micros(), 1'000'000u);
  EXPECT_EQ(g("0.000001").micros(), 1u);
  EXPECT_EQ(g(".5").micros(), 500'000u);
  EXPECT_EQ(g("0").micros(), 0u);
}

TEST(Membership, RejectsMalformedOrOutOfRange) {
  for (const char* bad : {"", ".", "1.", "1.0000001", "1.000001", "2", "-0.1", "0.1x", "+0.5",
                          "0..1"}) {
    EXPECT_THROW(Membership::parse(bad), std::invalid_argument) << bad;
  }
  EXPECT_THROW(Membership::from_micros(1'000'001), std::out_of_range);
  EXPECT_THROW(Membership::from_micros(-1), std::out_of_range);
}

TEST(Membership, RendersShortestDecimal) {
  EXPECT_EQ(g("0.10").to_string(), "0.1");
  EXPECT_EQ(g("1").to_string(), "1");
  EXPECT_EQ(g("0").to_string(), "0");
  EXPECT_EQ(g("0.000001").to_string(), "0.000001");
  EXPECT_EQ(g("0.25").to_string(), "0.25");
}

TEST(Membership, SumsAreExact) {
  const Membership third = g("0.3");
  EXPECT_EQ(4 * static_cast<std::int64_t>(third.micros()), 1'200'000);
  IndexValue sum;
  for (int i = 0; i < 4; ++i) sum += IndexValue::from(third);
  EXPECT_EQ(sum, IndexValue::from_micros(1'200'000));
  EXPECT_EQ(sum.to_string(), "1.2");
}

TEST(IndexValue, RendersTerminatingDecimalsExactly) {
  EXPECT_EQ(IndexValue::from_fraction(37, 5).to_string(), "7.4");
  EXPECT_EQ(IndexValue::from_fraction(7, 2).to_string(), "3.5");
  EXPECT_EQ(IndexValue::from_fraction(405, 16).to_string(), "25.3125");
  EXPECT_EQ(IndexValue::from_fraction(1, 3).to_string(), "1/3");
  EXPECT_EQ(IndexValue::from_fraction(-1, 4).to_string(), "-0.25");
  EXPECT_EQ(IndexValue::from_integer(0).to_string(), "0");
  EXPECT_EQ(IndexValue::from_integer(12).to_string(), "12");
  // 1e-18 survives: sigma products of micro-units never get rounded.
  EXPECT_EQ((IndexValue::from_micros(1) * IndexValue::from_micros(1) *
             IndexValue::from_micros(1))
                .to_string(),
            "0.000000000000000001");
}

TEST(IndexValue, ParseDecimalRoundTrips) {
  for (const char* text : {"7.4", "0.000000000001", "22.5", "-3.25", "1000"}) {
    EXPECT_EQ(IndexValue::parse_decimal(text).to_string(), text);
  }
  EXPECT_THROW(IndexValue::parse_decimal("7,4"), std::invalid_argument);
}

TEST(BuildGraph, AcceptsCounterexampleTree) {
  const FuzzyGraph tree = reference::counterexample_tree();
  EXPECT_EQ(tree.vertex_count(), 5u);
  EXPECT_EQ(tree.edge_count(), 5u);
  EXPECT_EQ(tree.mu(tree.index_of("a"), tree.index_of("b")), g("0.1"));
  EXPECT_EQ(tree.mu(tree.index_of("c"), tree.index_of("e")), g("0.3"));
}

TEST(BuildGraph, SingleVertexIsValid) {
  const std::vector<VertexSpec> vs{{"x", g("0.4")}};
  const FuzzyGraph one = build_graph(vs, {});
  EXPECT_EQ(one.vertex_count(), 1u);
  EXPECT_EQ(one.edge_count(), 0u);
}

TEST(BuildGraph, ReportsEachInvariantViolation) {
  const std::vector<VertexSpec> ab{{"a", g("0.4")}, {"b", g("1")}};
  const auto build = [&](std::vector<VertexSpec> vs, std::vector<EdgeSpec> es) {
    return [vs, es] { build_graph(vs, es); };
  };
  EXPECT_EQ(code_of(build(ab, {{"a", "b", g("0.5")}})), ErrorCode::kMuExceedsSigma);
  EXPECT_EQ(code_of(build(ab, {{"a", "b", g("0")}})), ErrorCode::kZeroMu);
  EXPECT_EQ(code_of(build(ab, {{"a", "a", g("0.1")}})), ErrorCode::kSelfLoop);
  EXPECT_EQ(code_of(build(ab, {{"a", "z", g("0.1")}})), ErrorCode::kUnknownEndpoint);
  EXPECT_EQ(code_of(build(ab, {{"a", "b", g("0.1")}, {"b", "a", g("0.2")}})),
            ErrorCode::kDuplicateEdge);
  EXPECT_EQ(code_of(build({{"a", g("1")}, {"a", g("1")}}, {})), ErrorCode::kDuplicateVertex);
  // mu equal to min(sigma) is allowed.
  EXPECT_NO_THROW(build_graph(ab, std::vector<EdgeSpec>{{"a", "b", g("0.4")}}));
}

// Randomized: build_graph rejects exactly the inputs violating an invariant.
TEST(BuildGraph, AcceptsExactlyTheValidInputs) {
  testing::TestRng rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.between(1, 5);
    std::vector<VertexSpec> vs;
    for (int i = 0; i < n; ++i) {
      vs.push_back({"x" + std::to_string(i), Membership::from_micros(rng.between(0, 4) * 250'000)});
    }
    if (rng.coin(10)) vs.push_back(vs.front());
    std::vector<EdgeSpec> es;
    const int m = rng.between(0, 5);
    for (int k = 0; k < m; ++k) {
      es.push_back({"x" + std::to_string(rng.between(0, n)), "x" + std::to_string(rng.between(0, n - 1)),
                    Membership::from_micros(rng.between(0, 4) * 250'000)});
    }

    // Independent validity check.
    std::optional<ErrorCode> expected;
    const auto flag = [&](ErrorCode c) {
      if (!expected) expected = c;
    };
    std::map<std::string, Membership> sigma;
    for (const auto& v : vs) {
      if (!sigma.emplace(v.name, v.sigma).second) flag(ErrorCode::kDuplicateVertex);
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : es) {
      if (!sigma.contains(e.u) || !sigma.contains(e.v)) {
        flag(ErrorCode::kUnknownEndpoint);
      } else if (e.u == e.v) {
        flag(ErrorCode::kSelfLoop);
      } else if (!seen.insert(std::minmax(e.u, e.v)).second) {
        flag(ErrorCode::kDuplicateEdge);
      } else if (e.mu.is_zero()) {
        flag(ErrorCode::kZeroMu);
      } else if (e.mu > std::min(sigma[e.u], sigma[e.v])) {
        flag(ErrorCode::kMuExceedsSigma);
      }
    }

    if (expected) {
      EXPECT_THROW(build_graph(vs, es), Error) << "trial " << trial;
    } else {
      EXPECT_NO_THROW(build_graph(vs, es)) << "trial " << trial;
    }
  }
}

TEST(ParseGraph, ReadsMinimalFile) {
  const FuzzyGraph one = parse_graph("v a 1\nv b 1\ne a b 0.1");
  ASSERT_EQ(one.edge_count(), 1u);
  EXPECT_EQ(one.edges()[0].mu.micros(), 100'000u);
}

TEST(ParseGraph, EdgeBeforeVertexIsUnknownEndpoint) {
  EXPECT_EQ(code_of([] { parse_graph("e a b 0.1"); }), ErrorCode::kUnknownEndpoint);
  EXPECT_EQ(code_of([] { parse_graph("v a 1\ne a b 0.1\nv b 1\n"); }),
            ErrorCode::kUnknownEndpoint);
}

TEST(ParseGraph, DiagnosticsCarryLineNumbers) {
  const auto line_of = [](std::string_view text) -> std::optional<std::size_t> {
    try {
      parse_graph(text);
    } catch (const Error& e) {
      return e.line();
    }
    return std::nullopt;
  };
  EXPECT_EQ(line_of("v a 1\n\n# note\nv b 0.5 extra\n"), 4u);
  EXPECT_EQ(line_of("v a 1\nx a\n"), 2u);
  EXPECT_EQ(line_of("v a 0.4\nv b 1\n\ne a b 0.5\n"), 4u);
  EXPECT_EQ(line_of("v a 1\nv b 1\ne a b 0.1\ne b a 0.2\n"), 4u);
  EXPECT_EQ(line_of("v a 1.5\n"), 1u);
}

TEST(ParseGraph, IgnoresCommentsBlankLinesAndCrLf) {
  const FuzzyGraph parsed =
      parse_graph("# header\r\n\r\nv a 1\r\nv b 1\r\n  e   a\tb 0.1  \r\n");
  EXPECT_EQ(parsed.edge_count(), 1u);
}

TEST(ParseGraph, MatchesEmbeddedCounterexample) {
  const FuzzyGraph parsed = parse_graph(
      "v a 1\nv b 1\nv c 1\nv d 1\nv e 1\n"
      "e a b 0.1\ne b c 0.3\ne e c 0.3\ne c d 0.5\ne a e 0.6\n");
  EXPECT_EQ(parsed, reference::counterexample_tree());
}

TEST(ParseGraph, SerializationRoundTripsOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const FuzzyGraph graph = testing::random_connected_graph(seed, 1 + static_cast<int>(seed % 9));
    const std::string text = serialize_graph(graph);
    const FuzzyGraph again = parse_graph(text);
    EXPECT_EQ(again, graph);
    EXPECT_EQ(serialize_graph(again), text);
  }
}

TEST(RemoveEdge, ReturnsNewGraphAndLeavesInputAlone) {
  const FuzzyGraph tree = reference::counterexample_tree();
  const FuzzyGraph without = remove_edge(tree, "a", "b");
  EXPECT_EQ(without, reference::counterexample_tree_mst());
  EXPECT_EQ(without.edge_count(), 4u);
  EXPECT_EQ(tree.edge_count(), 5u);
  EXPECT_EQ(code_of([&] { remove_edge(without, "b", "a"); }), ErrorCode::kNoSuchEdge);
}

TEST(RemoveEdge, PathBecomesTwoIsolatedVertices) {
  const FuzzyGraph path = parse_graph("v a 1\nv b 1\ne a b 0.2\n");
  const FuzzyGraph split = remove_edge(path, "a", "b");
  EXPECT_EQ(split.vertex_count(), 2u);
  EXPECT_EQ(split.edge_count(), 0u);
  EXPECT_FALSE(is_crisp_connected(split));
}

TEST(ZeroSigma, VerticesAreListed) {
  const FuzzyGraph graph = parse_graph("v a 0\nv b 1\n");
  EXPECT_EQ(zero_sigma_vertices(graph), std::vector<VertexId>{"a"});
}

}  // namespace
}  // namespace fzg
