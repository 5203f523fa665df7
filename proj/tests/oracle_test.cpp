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

#include "fuzzygraph/error.hpp"
#include "fuzzygraph/fzg_format.hpp"
#include "fuzzygraph/oracle.hpp"
#include "fuzzygraph/reference_graphs.hpp"
#include "fuzzygraph/structure.hpp"
#include "test_support.hpp"

namespace fzg {
namespace {

using testing::d;
using testing::g;

TEST(ConnBruteforce, Examples) {
  const FuzzyGraph tree = reference::counterexample_tree();
  EXPECT_EQ(oracle::conn_bruteforce(tree, "a", "b"), g("0.3"));
  const FuzzyGraph split = parse_graph("v a 1\nv b 1\nv c 1\ne a b 0.5\n");
  EXPECT_EQ(oracle::conn_bruteforce(split, "a", "c"), Membership::zero());
}

TEST(DsBruteforce, Examples) {
  EXPECT_EQ(oracle::ds_bruteforce(reference::counterexample_tree(), "a", "d"), d("1.4"));
  const FuzzyGraph c6 = reference::alternating_c6(g("0.5"), g("0.3"));
  EXPECT_EQ(oracle::ds_bruteforce(c6, "b", "e"), d("0.3") + d("0.3") + d("0.5"));
  // A heavy direct alpha edge is the geodesic even though a detour exists.
  const FuzzyGraph triangle =
      parse_graph("v a 1\nv b 1\nv c 1\ne a b 0.2\ne a c 0.1\ne b c 0.1\n");
  EXPECT_EQ(oracle::ds_bruteforce(triangle, "a", "b"), d("0.2"));
}

TEST(DsBruteforce, StrongDisconnected) {
  const FuzzyGraph split = parse_graph("v a 1\nv b 1\nv c 1\ne a b 0.5\n");
  try {
    oracle::ds_bruteforce(split, "a", "c");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kStrongDisconnected);
  }
  EXPECT_THROW(oracle::wi_bruteforce(split), Error);
}

TEST(IndexBruteforce, Examples) {
  EXPECT_EQ(oracle::wi_bruteforce(reference::counterexample_tree()), d("7.4"));
  EXPECT_EQ(oracle::ci_bruteforce(reference::counterexample_tree_mst()), d("3.5"));
  const FuzzyGraph edge = parse_graph("v a 1\nv b 1\ne a b 0.6\n");
  EXPECT_EQ(oracle::wi_bruteforce(edge), d("0.6"));
  EXPECT_EQ(oracle::ci_bruteforce(edge), d("0.6"));
  EXPECT_EQ(oracle::wi_bruteforce(reference::alternating_c4(g("0.5"), g("0.3"))), d("3.2"));
}

TEST(IndexBruteforce, AlternatingC8) {
  // Frozen from an arc-sum computation: on an alternating cycle every edge is
  // strong, so d_s is the lighter of the two arcs between a pair.
  EXPECT_EQ(oracle::wi_bruteforce(make_saturated_cycle({8, g("0.5"), g("0.3")})), d("25.6"));
}

TEST(Oracle, RefusesLargeGraphs) {
  const FuzzyGraph big = random_fuzzy_tree(1, 13, 0);
  try {
    oracle::conn_bruteforce(big, 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  EXPECT_THROW(oracle::ds_bruteforce(big, 0, 1), Error);
  EXPECT_THROW(oracle::wi_bruteforce(big), Error);
  EXPECT_THROW(oracle::ci_bruteforce(big), Error);
  EXPECT_NO_THROW(oracle::ci_bruteforce(random_fuzzy_tree(1, 12, 0)));
}

}  // namespace
}  // namespace fzg
