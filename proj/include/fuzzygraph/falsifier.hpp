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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fuzzygraph/graph.hpp"
#include "fuzzygraph/index_value.hpp"
#include "fuzzygraph/structure.hpp"

namespace fzg {

enum class ClaimId {
  /// For a fuzzy tree G with maximum spanning tree F: WI(G) = WI(F) = CI(F).
  kCorollaryStar,
  /// For a saturated fuzzy cycle of length n:
  /// WI(G) = n((n+3)^2 - 6)/16 (kappa + eta).
  kTheoremStar,
};

std::string_view to_string(ClaimId id);
/// Accepts "corollary-star" and "theorem-star".
std::optional<ClaimId> parse_claim_id(std::string_view text);

using ClaimInstance = std::variant<FuzzyGraph, SaturatedCycleSpec>;

struct ClaimVerdict {
  ClaimId claim = ClaimId::kCorollaryStar;
  ClaimInstance instance;
  IndexValue lhs;
  IndexValue rhs;
  bool holds = false;
  /// Named quantities behind lhs/rhs: WI(G), WI(F), CI(F) for the
  /// corollary; direct WI and formula WI for the theorem.
  std::vector<std::pair<std::string, IndexValue>> detail;

  friend bool operator==(const ClaimVerdict&, const ClaimVerdict&) = default;
};

/// lhs = WI(G), rhs = CI(F); holds iff WI(G), WI(F) and CI(F) all coincide.
/// Throws NotAFuzzyTree.
ClaimVerdict check_corollary_star(const FuzzyGraph& g);

/// lhs = WI of the generated cycle, rhs = the published formula.
/// Throws BadSpec.
ClaimVerdict check_theorem_star(const SaturatedCycleSpec& spec);

/// Re-runs the claim on the verdict's embedded instance.
ClaimVerdict recheck(const ClaimVerdict& verdict);

struct SizeRange {
  int min = 3;
  int max = 8;
};

/// Corollary: `trials` random fuzzy trees with n drawn from `sizes` and
/// 0..3 extra delta edges; trial i is seeded from (seed, i) only.
/// Theorem: the sweep over even n in `sizes` (n >= 4) and kappa > eta on the
/// 0.1 grid, in (n, kappa, eta) order, truncated to the first `trials`
/// specs; `seed` is unused.
/// Returns the violations (holds == false), sorted by instance size, then by
/// canonical serialization. Throws BadParams.
std::vector<ClaimVerdict> search_counterexamples(ClaimId claim, int trials,
                                                 std::uint64_t seed, SizeRange sizes);

/// Number of specs in the theorem sweep for a size range.
int theorem_sweep_size(SizeRange sizes);

/// Canonical text of an instance: `.fzg` text for a graph, or
/// `n=<n> kappa=<k> eta=<e>` for a cycle spec.
std::string serialize_instance(const ClaimInstance& instance);
std::size_t instance_size(const ClaimInstance& instance);

}  // namespace fzg
