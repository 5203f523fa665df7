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

#include "fuzzygraph/falsifier.hpp"

#include <algorithm>

#include "fuzzygraph/error.hpp"
#include "fuzzygraph/fzg_format.hpp"
#include "fuzzygraph/indices.hpp"
#include "rng.hpp"

namespace fzg {
namespace {

constexpr int kMaxExtraEdges = 3;
constexpr std::int64_t kSweepStep = Membership::kScale / 10;

struct SweepAxis {
  int first_n = 0;
  int last_n = 0;
};

std::optional<SweepAxis> sweep_axis(SizeRange sizes) {
  int first = std::max(sizes.min, 4);
  if (first % 2 != 0) ++first;
  int last = sizes.max % 2 == 0 ? sizes.max : sizes.max - 1;
  if (first > last) return std::nullopt;
  return SweepAxis{first, last};
}

std::vector<SaturatedCycleSpec> theorem_sweep(SizeRange sizes) {
  std::vector<SaturatedCycleSpec> specs;
  const auto axis = sweep_axis(sizes);
  if (!axis) return specs;
  for (int n = axis->first_n; n <= axis->last_n; n += 2) {
    for (std::int64_t k = 2; k <= 10; ++k) {
      for (std::int64_t e = 1; e < k; ++e) {
        specs.push_back(SaturatedCycleSpec{n, Membership::from_micros(k * kSweepStep),
                                           Membership::from_micros(e * kSweepStep)});
      }
    }
  }
  return specs;
}

}  // namespace

std::string_view to_string(ClaimId id) {
  switch (id) {
    case ClaimId::kCorollaryStar: return "corollary-star";
    case ClaimId::kTheoremStar: return "theorem-star";
  }
  return "unknown";
}

std::optional<ClaimId> parse_claim_id(std::string_view text) {
  if (text == "corollary-star") return ClaimId::kCorollaryStar;
  if (text == "theorem-star") return ClaimId::kTheoremStar;
  return std::nullopt;
}

ClaimVerdict check_corollary_star(const FuzzyGraph& g) {
  std::optional<SpanningTree> tree;
  if (is_crisp_connected(g) && g.vertex_count() > 0) tree = is_fuzzy_tree(g);
  if (!tree) throw Error(ErrorCode::kNotAFuzzyTree, "instance is not a fuzzy tree");

  const FuzzyGraph forest = tree_graph(g, *tree);
  const IndexValue wi_g = wiener_index(g);
  const IndexValue wi_f = wiener_index(forest);
  const IndexValue ci_f = connectivity_index(forest);

  ClaimVerdict verdict;
  verdict.claim = ClaimId::kCorollaryStar;
  verdict.instance = g;
  verdict.lhs = wi_g;
  verdict.rhs = ci_f;
  verdict.holds = wi_g == wi_f && wi_f == ci_f;
  verdict.detail = {{"WI(G)", wi_g}, {"WI(F)", wi_f}, {"CI(F)", ci_f}};
  return verdict;
}

ClaimVerdict check_theorem_star(const SaturatedCycleSpec& spec) {
  validate(spec);
  const IndexValue direct = wiener_index(make_saturated_cycle(spec));
  const IndexValue formula = theorem_star_formula(spec);

  ClaimVerdict verdict;
  verdict.claim = ClaimId::kTheoremStar;
  verdict.instance = spec;
  verdict.lhs = direct;
  verdict.rhs = formula;
  verdict.holds = direct == formula;
  verdict.detail = {{"WI direct", direct}, {"WI formula", formula}};
  return verdict;
}

ClaimVerdict recheck(const ClaimVerdict& verdict) {
  return std::visit(
      [](const auto& instance) {
        if constexpr (std::is_same_v<std::decay_t<decltype(instance)>, FuzzyGraph>) {
          return check_corollary_star(instance);
        } else {
          return check_theorem_star(instance);
        }
      },
      verdict.instance);
}

int theorem_sweep_size(SizeRange sizes) {
  return static_cast<int>(theorem_sweep(sizes).size());
}

std::string serialize_instance(const ClaimInstance& instance) {
  if (const auto* g = std::get_if<FuzzyGraph>(&instance)) return serialize_graph(*g);
  const auto& spec = std::get<SaturatedCycleSpec>(instance);
  return "n=" + std::to_string(spec.n) + " kappa=" + spec.kappa.to_string() +
         " eta=" + spec.eta.to_string();
}

std::size_t instance_size(const ClaimInstance& instance) {
  if (const auto* g = std::get_if<FuzzyGraph>(&instance)) return g->vertex_count();
  return static_cast<std::size_t>(std::get<SaturatedCycleSpec>(instance).n);
}

std::vector<ClaimVerdict> search_counterexamples(ClaimId claim, int trials,
                                                 std::uint64_t seed, SizeRange sizes) {
  if (trials < 1) throw Error(ErrorCode::kBadParams, "trials must be at least 1");
  if (sizes.min > sizes.max) throw Error(ErrorCode::kBadParams, "empty size range");

  std::vector<ClaimVerdict> violations;
  if (claim == ClaimId::kCorollaryStar) {
    if (sizes.min < 2) throw Error(ErrorCode::kBadParams, "fuzzy trees need n >= 2");
    for (int i = 0; i < trials; ++i) {
      const std::uint64_t trial_seed = detail::derive_seed(seed, static_cast<std::uint64_t>(i));
      detail::Rng rng(trial_seed);
      const auto n = static_cast<int>(rng.uniform_int(sizes.min, sizes.max));
      const auto extra = static_cast<int>(rng.uniform_int(0, kMaxExtraEdges));
      ClaimVerdict v = check_corollary_star(
          random_fuzzy_tree(detail::derive_seed(trial_seed, 1), n, extra));
      if (!v.holds) violations.push_back(std::move(v));
    }
  } else {
    const std::vector<SaturatedCycleSpec> specs = theorem_sweep(sizes);
    if (specs.empty()) {
      throw Error(ErrorCode::kBadParams, "size range contains no even n >= 4");
    }
    const std::size_t limit = std::min(specs.size(), static_cast<std::size_t>(trials));
    for (std::size_t i = 0; i < limit; ++i) {
      ClaimVerdict v = check_theorem_star(specs[i]);
      if (!v.holds) violations.push_back(std::move(v));
    }
  }

  std::vector<std::pair<std::size_t, std::string>> keys;
  std::vector<std::size_t> order(violations.size());
  for (std::size_t i = 0; i < violations.size(); ++i) {
    order[i] = i;
    keys.emplace_back(instance_size(violations[i].instance),
                      serialize_instance(violations[i].instance));
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<ClaimVerdict> sorted;
  sorted.reserve(order.size());
  for (std::size_t i : order) sorted.push_back(std::move(violations[i]));
  return sorted;
}

}  // namespace fzg
