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

#include "fuzzygraph/repro.hpp"

#include <array>
#include <utility>

#include "fuzzygraph/connectivity.hpp"
#include "fuzzygraph/falsifier.hpp"
#include "fuzzygraph/indices.hpp"
#include "fuzzygraph/reference_graphs.hpp"
#include "fuzzygraph/structure.hpp"

namespace fzg {
namespace {

struct Linear {
  std::int64_t kappa = 0;
  std::int64_t eta = 0;
};

struct Grades {
  const char* kappa;
  const char* eta;
};

constexpr std::array<Grades, 3> kInstantiations{{{"0.5", "0.3"}, {"0.7", "0.2"}, {"0.9", "0.8"}}};

IndexValue dec(const char* text) { return IndexValue::parse_decimal(text); }

IndexValue evaluate(Linear form, const IndexValue& kappa, const IndexValue& eta) {
  return IndexValue::from_integer(form.kappa) * kappa + IndexValue::from_integer(form.eta) * eta;
}

std::string grades_label(const Grades& g) {
  return std::string("(κ=") + g.kappa + ", η=" + g.eta + ")";
}

class Recorder {
 public:
  void check(std::string label, bool passed) {
    checks_.push_back(ReproCheck{std::move(label), passed});
  }
  void confirm(const std::string& label, bool confirmed) {
    check(label + (confirmed ? ": counterexample CONFIRMED" : ": counterexample NOT confirmed"),
          confirmed);
  }
  std::vector<ReproCheck> take() { return std::move(checks_); }

 private:
  std::vector<ReproCheck> checks_;
};

void tree_example(Recorder& out) {
  const std::string tag = "Example 2.1: ";
  const FuzzyGraph g = reference::counterexample_tree();
  const auto tree = is_fuzzy_tree(g);
  out.check(tag + "G is a fuzzy tree", tree.has_value());
  if (!tree) return;
  const FuzzyGraph f = tree_graph(g, *tree);
  out.check(tag + "MST F is G without ab", f == reference::counterexample_tree_mst());

  // d_s terms of WI(G), then CONN terms of CI(F), in the published order.
  const std::array<std::pair<const char*, const char*>, 10> pairs{{{"a", "b"},
                                                                   {"a", "c"},
                                                                   {"a", "d"},
                                                                   {"a", "e"},
                                                                   {"b", "c"},
                                                                   {"b", "d"},
                                                                   {"b", "e"},
                                                                   {"c", "d"},
                                                                   {"c", "e"},
                                                                   {"d", "e"}}};
  const std::array<const char*, 10> ds_terms{"1.2", "0.9", "1.4", "0.6", "0.3",
                                             "0.8", "0.6", "0.5", "0.3", "0.8"};
  const std::array<const char*, 10> conn_terms{"0.3", "0.3", "0.3", "0.6", "0.3",
                                               "0.3", "0.3", "0.5", "0.3", "0.3"};
  const DistanceMatrix ds = geodesic_distance(g);
  const StrengthMatrix conn = strength_of_connectedness(f);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [u, v] = pairs[i];
    const std::size_t iu = g.index_of(u);
    const std::size_t iv = g.index_of(v);
    out.check(tag + "d_s(" + u + "," + v + ")=" + ds_terms[i],
              ds.at(iu, iv) == dec(ds_terms[i]));
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [u, v] = pairs[i];
    out.check(tag + "CONN_F(" + u + "," + v + ")=" + conn_terms[i],
              conn.at(f.index_of(u), f.index_of(v)) == Membership::parse(conn_terms[i]));
  }

  const ClaimVerdict verdict = check_corollary_star(g);
  const IndexValue& wi_g = verdict.detail[0].second;
  const IndexValue& wi_f = verdict.detail[1].second;
  const IndexValue& ci_f = verdict.detail[2].second;
  out.check(tag + "WI(G)=7.4", wi_g == dec("7.4"));
  out.check(tag + "WI(F)=7.4", wi_f == dec("7.4"));
  out.check(tag + "CI(F)=3.5", ci_f == dec("3.5"));
  out.confirm(tag + "WI(G) = WI(F) ≠ CI(F)", !verdict.holds && wi_g == wi_f && wi_f != ci_f);
}

void c4_example(Recorder& out) {
  bool all_refuted = true;
  for (const Grades& grades : kInstantiations) {
    const std::string tag = "Example 2.2 " + grades_label(grades) + ": ";
    const Membership kappa = Membership::parse(grades.kappa);
    const Membership eta = Membership::parse(grades.eta);
    const IndexValue k = IndexValue::from(kappa);
    const IndexValue e = IndexValue::from(eta);
    const FuzzyGraph g = reference::alternating_c4(kappa, eta);

    out.check(tag + "saturated fuzzy cycle", is_saturated_fuzzy_cycle(g));
    bool grades_match = true;
    for (const EdgeClassification& c : classify_edges(g)) {
      grades_match = grades_match && ((c.cls == EdgeClass::kAlphaStrong && c.edge.mu == kappa) ||
                                      (c.cls == EdgeClass::kBetaStrong && c.edge.mu == eta));
    }
    out.check(tag + "α-strong edges carry κ, β-strong edges carry η", grades_match);

    const IndexValue direct = wiener_index(g);
    const IndexValue expected_direct = evaluate({4, 4}, k, e);
    out.check(tag + "WI direct = 4(κ+η) = " + expected_direct.to_string(),
              direct == expected_direct);

    const SaturatedCycleSpec spec{4, kappa, eta};
    const IndexValue expected_formula = IndexValue::from_fraction(43, 4) * (k + e);
    out.check(tag + "formula = 43/4(κ+η) = " + expected_formula.to_string(),
              theorem_star_formula(spec) == expected_formula);

    const ClaimVerdict verdict = check_theorem_star(spec);
    out.check(tag + "generated C4 agrees with the embedded graph",
              verdict.lhs == direct && verdict.rhs == expected_formula);
    all_refuted = all_refuted && !verdict.holds && direct != expected_formula;
  }
  out.confirm("Example 2.2: direct 4(κ+η) ≠ formula 43/4(κ+η)", all_refuted);
}

void c6_example(Recorder& out) {
  // Upper triangle of the published distance table over a..f, as
  // coefficients of (κ, η).
  constexpr std::array<std::array<Linear, 6>, 6> table{{
      {{{}, {1, 0}, {1, 1}, {1, 2}, {1, 1}, {0, 1}}},
      {{{}, {}, {0, 1}, {1, 1}, {1, 2}, {1, 1}}},
      {{{}, {}, {}, {1, 0}, {1, 1}, {1, 2}}},
      {{{}, {}, {}, {}, {0, 1}, {1, 1}}},
      {{{}, {}, {}, {}, {}, {1, 0}}},
      {{}},
  }};

  bool all_refuted = true;
  std::vector<std::pair<IndexValue, IndexValue>> points;  // (κ, η)
  std::vector<IndexValue> measured;
  for (const Grades& grades : kInstantiations) {
    const std::string tag = "Example 2.3 " + grades_label(grades) + ": ";
    const Membership kappa = Membership::parse(grades.kappa);
    const Membership eta = Membership::parse(grades.eta);
    const IndexValue k = IndexValue::from(kappa);
    const IndexValue e = IndexValue::from(eta);
    const FuzzyGraph g = reference::alternating_c6(kappa, eta);

    out.check(tag + "saturated fuzzy cycle", is_saturated_fuzzy_cycle(g));

    const DistanceMatrix ds = geodesic_distance(g);
    int matched = 0;
    for (std::size_t u = 0; u < 6; ++u) {
      for (std::size_t v = u + 1; v < 6; ++v) {
        if (ds.at(u, v) == evaluate(table[u][v], k, e)) ++matched;
      }
    }
    out.check(tag + "C6 table: " + std::to_string(matched) + " of 15 entries match",
              matched == 15);

    const IndexValue direct = wiener_index(g);
    const IndexValue expected_direct = evaluate({12, 15}, k, e);
    out.check(tag + "WI direct = 12κ+15η = " + expected_direct.to_string(),
              direct == expected_direct);

    const SaturatedCycleSpec spec{6, kappa, eta};
    const IndexValue expected_formula = IndexValue::from_fraction(6 * 75, 16) * (k + e);
    out.check(tag + "formula = 6·75/16(κ+η) = " + expected_formula.to_string(),
              theorem_star_formula(spec) == expected_formula);

    const ClaimVerdict verdict = check_theorem_star(spec);
    out.check(tag + "generated C6 agrees with the embedded graph",
              verdict.lhs == direct && verdict.rhs == expected_formula);
    all_refuted = all_refuted && !verdict.holds && direct != expected_formula;
    points.emplace_back(k, e);
    measured.push_back(direct);
  }

  // Recover WI = aκ + bη from the first two instantiations (Cramer's rule)
  // and confirm the fit on the remaining ones.
  const auto& [k1, e1] = points[0];
  const auto& [k2, e2] = points[1];
  const IndexValue det = k1 * e2 - k2 * e1;
  const IndexValue a(IndexValue::Rational((measured[0] * e2 - measured[1] * e1).rational() /
                                          det.rational()));
  const IndexValue b(IndexValue::Rational((k1 * measured[1] - k2 * measured[0]).rational() /
                                          det.rational()));
  bool fits = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    fits = fits && a * points[i].first + b * points[i].second == measured[i];
  }
  out.check("Example 2.3: WI recovered symbolically as " + a.to_string() + "κ+" +
                b.to_string() + "η",
            fits && a == IndexValue::from_integer(12) && b == IndexValue::from_integer(15));
  out.confirm("Example 2.3: direct 12κ+15η ≠ formula 6·75/16(κ+η)", all_refuted);
}

}  // namespace

std::vector<ReproCheck> run_repro() {
  Recorder out;
  tree_example(out);
  c4_example(out);
  c6_example(out);
  return out.take();
}

std::string repro_text(const std::vector<ReproCheck>& checks) {
  std::string text;
  std::size_t passed = 0;
  for (const ReproCheck& c : checks) {
    text += c.label + (c.passed ? " PASS\n" : " FAIL\n");
    if (c.passed) ++passed;
  }
  text += std::to_string(passed) + " of " + std::to_string(checks.size()) + " checks passed\n";
  return text;
}

}  // namespace fzg
