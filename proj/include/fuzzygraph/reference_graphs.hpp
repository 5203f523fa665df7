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

#include "fuzzygraph/graph.hpp"
#include "fuzzygraph/membership.hpp"

/// The small graphs used to refute the two published claims, built in code so
/// the `repro` command cannot drift from the tested instances. Copies ship as
/// `.fzg` files under data/.
namespace fzg::reference {

/// Five vertices a..e, all sigma = 1, with ab = 0.1, bc = ec = 0.3,
/// cd = 0.5, ae = 0.6. A fuzzy tree whose only non-tree edge is ab.
FuzzyGraph counterexample_tree();

/// The maximum spanning tree of counterexample_tree() (ab removed).
FuzzyGraph counterexample_tree_mst();

/// a-b-c-d-a with ab = cd = kappa and bc = ad = eta.
FuzzyGraph alternating_c4(Membership kappa, Membership eta);

/// a-b-c-d-e-f-a with ab = cd = ef = kappa and bc = de = af = eta.
FuzzyGraph alternating_c6(Membership kappa, Membership eta);

}  // namespace fzg::reference
