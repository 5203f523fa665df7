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

#include "fuzzygraph/report.hpp"

#include <sstream>

#include "fuzzygraph/fzg_format.hpp"

namespace fzg::report {
namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

nlohmann::json instance_json(const ClaimInstance& instance) {
  if (const auto* g = std::get_if<FuzzyGraph>(&instance)) {
    return {{"fzg", serialize_graph(*g)}};
  }
  const auto& spec = std::get<SaturatedCycleSpec>(instance);
  return {{"n", spec.n}, {"kappa", spec.kappa.to_string()}, {"eta", spec.eta.to_string()}};
}

}  // namespace

nlohmann::json kind_json(const GraphKind& kind) {
  return {
      {"connected", kind.is_connected},
      {"fuzzy_tree", kind.is_fuzzy_tree},
      {"fuzzy_cycle", kind.is_fuzzy_cycle},
      {"saturated_fuzzy_cycle", kind.is_saturated_fuzzy_cycle},
  };
}

nlohmann::json index_report_json(const IndexReport& r) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const PairEntry& p : r.pairs) {
    pairs.push_back({
        {"u", r.names[p.u]},
        {"v", r.names[p.v]},
        {"conn", p.conn.to_string()},
        {"ds", p.ds ? nlohmann::json(p.ds->to_string()) : nlohmann::json(nullptr)},
    });
  }
  return {
      {"wiener", r.wiener ? nlohmann::json(r.wiener->to_string()) : nlohmann::json(nullptr)},
      {"connectivity", r.connectivity.to_string()},
      {"pairs", std::move(pairs)},
      {"kind", kind_json(r.kind)},
      {"warnings", r.warnings},
  };
}

nlohmann::json classification_json(const FuzzyGraph& g,
                                   std::span<const EdgeClassification> classes) {
  nlohmann::json edges = nlohmann::json::array();
  for (const EdgeClassification& c : classes) {
    edges.push_back({
        {"u", g.name(c.edge.u)},
        {"v", g.name(c.edge.v)},
        {"mu", c.edge.mu.to_string()},
        {"class", std::string(to_string(c.cls))},
        {"residual", c.residual.to_string()},
    });
  }
  return {{"edges", std::move(edges)}};
}

nlohmann::json spanning_tree_json(const FuzzyGraph& g, const SpanningTree& tree) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : tree.edges) {
    edges.push_back({{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"mu", e.mu.to_string()}});
  }
  return {{"edges", std::move(edges)}, {"total_strength", tree.total_strength.to_string()}};
}

nlohmann::json verdict_json(const ClaimVerdict& v) {
  nlohmann::json detail = nlohmann::json::object();
  for (const auto& [name, value] : v.detail) detail[name] = value.to_string();
  return {
      {"claim", std::string(to_string(v.claim))},
      {"instance", instance_json(v.instance)},
      {"lhs", v.lhs.to_string()},
      {"rhs", v.rhs.to_string()},
      {"holds", v.holds},
      {"detail", std::move(detail)},
  };
}

nlohmann::json verdicts_json(ClaimId claim, std::span<const ClaimVerdict> verdicts) {
  nlohmann::json list = nlohmann::json::array();
  for (const ClaimVerdict& v : verdicts) list.push_back(verdict_json(v));
  return {{"claim", std::string(to_string(claim))}, {"verdicts", std::move(list)}};
}

std::string kind_text(const GraphKind& kind) {
  std::ostringstream out;
  out << "connected: " << yes_no(kind.is_connected) << "\n"
      << "fuzzy tree: " << yes_no(kind.is_fuzzy_tree) << "\n"
      << "fuzzy cycle: " << yes_no(kind.is_fuzzy_cycle) << "\n"
      << "saturated fuzzy cycle: " << yes_no(kind.is_saturated_fuzzy_cycle) << "\n";
  return out.str();
}

std::string index_report_text(const IndexReport& r) {
  std::ostringstream out;
  for (const std::string& w : r.warnings) out << "warning: " << w << "\n";
  out << "WI = " << (r.wiener ? r.wiener->to_string() : "unavailable") << "\n";
  out << "CI = " << r.connectivity.to_string() << "\n";
  out << "pairs (u v CONN d_s):\n";
  for (const PairEntry& p : r.pairs) {
    out << "  " << r.names[p.u] << " " << r.names[p.v] << " " << p.conn.to_string() << " "
        << (p.ds ? p.ds->to_string() : "-") << "\n";
  }
  out << kind_text(r.kind);
  return out.str();
}

std::string classification_text(const FuzzyGraph& g,
                                std::span<const EdgeClassification> classes) {
  std::string out;
  for (const EdgeClassification& c : classes) {
    out += g.name(c.edge.u) + " " + g.name(c.edge.v) + " " + c.edge.mu.to_string() + " " +
           std::string(to_string(c.cls)) + " " + c.residual.to_string() + "\n";
  }
  return out;
}

std::string spanning_tree_text(const FuzzyGraph& g, const SpanningTree& tree) {
  std::string out;
  for (const Edge& e : tree.edges) {
    out += g.name(e.u) + " " + g.name(e.v) + " " + e.mu.to_string() + "\n";
  }
  out += "total strength = " + tree.total_strength.to_string() + "\n";
  return out;
}

std::string verdict_text(const ClaimVerdict& v) {
  std::string out = "# " + std::string(to_string(v.claim)) + ": lhs = " + v.lhs.to_string() +
                    ", rhs = " + v.rhs.to_string() + ", holds = " + (v.holds ? "true" : "false") +
                    "\n#";
  for (const auto& [name, value] : v.detail) out += " " + name + " = " + value.to_string() + ";";
  out += "\n";
  if (std::holds_alternative<FuzzyGraph>(v.instance)) {
    out += serialize_graph(std::get<FuzzyGraph>(v.instance));
  } else {
    out += "# " + serialize_instance(v.instance) + "\n" +
           serialize_graph(make_saturated_cycle(std::get<SaturatedCycleSpec>(v.instance)));
  }
  return out;
}

}  // namespace fzg::report
