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

#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "fuzzygraph/connectivity.hpp"
#include "fuzzygraph/error.hpp"
#include "fuzzygraph/falsifier.hpp"
#include "fuzzygraph/fzg_format.hpp"
#include "fuzzygraph/indices.hpp"
#include "fuzzygraph/report.hpp"
#include "fuzzygraph/repro.hpp"
#include "fuzzygraph/structure.hpp"

namespace fzg::cli {
namespace {

enum class Command { kIndices, kClassify, kMst, kKind, kRepro, kFalsify };
enum class Format { kText, kJson };

struct RunConfig {
  Command command = Command::kRepro;
  std::string input_path;
  Format format = Format::kText;
  std::string output_path;
  std::string claim;
  std::optional<int> trials;
  std::uint64_t seed = 0;
  std::string sizes;
  std::string n_range;
};

constexpr int kDefaultCorollaryTrials = 50;
constexpr SizeRange kDefaultTreeSizes{3, 8};
constexpr SizeRange kDefaultCycleSizes{4, 12};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int parse_int(std::string_view text) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw UsageError("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

/// "A..B" or a single "A".
SizeRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int n = parse_int(text);
    return {n, n};
  }
  SizeRange range{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (range.min > range.max) throw UsageError("empty range '" + std::string(text) + "'");
  return range;
}

struct Rendered {
  std::string body;
  int code = kSuccess;
};

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

Rendered cmd_indices(const RunConfig& cfg) {
  const FuzzyGraph g = read_graph_file(cfg.input_path);
  const IndexReport r = index_report(g);
  Rendered out;
  out.body = cfg.format == Format::kJson ? dump(report::index_report_json(r))
                                         : report::index_report_text(r);
  out.code = r.wiener ? kSuccess : kPartialResult;
  return out;
}

Rendered cmd_classify(const RunConfig& cfg) {
  const FuzzyGraph g = read_graph_file(cfg.input_path);
  const auto classes = classify_edges(g);
  return {cfg.format == Format::kJson ? dump(report::classification_json(g, classes))
                                      : report::classification_text(g, classes)};
}

Rendered cmd_mst(const RunConfig& cfg) {
  const FuzzyGraph g = read_graph_file(cfg.input_path);
  const SpanningTree tree = maximum_spanning_tree(g);
  return {cfg.format == Format::kJson ? dump(report::spanning_tree_json(g, tree))
                                      : report::spanning_tree_text(g, tree)};
}

Rendered cmd_kind(const RunConfig& cfg) {
  const FuzzyGraph g = read_graph_file(cfg.input_path);
  const GraphKind kind = graph_kind(g);
  return {cfg.format == Format::kJson ? dump({{"kind", report::kind_json(kind)}})
                                      : report::kind_text(kind)};
}

Rendered cmd_repro(const RunConfig& cfg) {
  const std::vector<ReproCheck> checks = run_repro();
  bool all = true;
  for (const ReproCheck& c : checks) all = all && c.passed;

  Rendered out;
  out.code = all ? kSuccess : kReplicationMismatch;
  if (cfg.format == Format::kJson) {
    nlohmann::json list = nlohmann::json::array();
    for (const ReproCheck& c : checks) list.push_back({{"label", c.label}, {"pass", c.passed}});
    out.body = dump({{"checks", std::move(list)}, {"all_pass", all}});
  } else {
    out.body = repro_text(checks);
  }
  return out;
}

Rendered cmd_falsify(const RunConfig& cfg) {
  const auto claim = parse_claim_id(cfg.claim);
  if (!claim) throw UsageError("unknown claim '" + cfg.claim + "'");

  SizeRange sizes;
  int trials = 0;
  if (*claim == ClaimId::kCorollaryStar) {
    if (!cfg.n_range.empty()) throw UsageError("--n applies to theorem-star; use --sizes");
    sizes = cfg.sizes.empty() ? kDefaultTreeSizes : parse_range(cfg.sizes);
    trials = cfg.trials.value_or(kDefaultCorollaryTrials);
  } else {
    if (!cfg.sizes.empty()) throw UsageError("--sizes applies to corollary-star; use --n");
    sizes = cfg.n_range.empty() ? kDefaultCycleSizes : parse_range(cfg.n_range);
    trials = cfg.trials.value_or(std::max(1, theorem_sweep_size(sizes)));
  }

  const std::vector<ClaimVerdict> verdicts =
      search_counterexamples(*claim, trials, cfg.seed, sizes);
  Rendered out;
  out.code = verdicts.empty() ? kNoWitness : kSuccess;
  if (cfg.format == Format::kJson) {
    nlohmann::json doc = report::verdicts_json(*claim, verdicts);
    doc["trials"] = trials;
    doc["seed"] = cfg.seed;
    doc["sizes"] = {sizes.min, sizes.max};
    out.body = dump(doc);
  } else {
    std::ostringstream text;
    text << "# claim " << to_string(*claim) << " tested exactly as stated, no extra hypotheses\n"
         << "# trials " << trials << ", seed " << cfg.seed << ", sizes " << sizes.min << ".."
         << sizes.max << "\n"
         << "# witnesses found: " << verdicts.size() << "\n";
    for (const ClaimVerdict& v : verdicts) text << "\n" << report::verdict_text(v);
    out.body = text.str();
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact connectivity and Wiener indices of fuzzy graphs", "fzg"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--output", cfg.output_path, "Write output to this file instead of stdout");

  const auto file_command = [&](const char* name, const char* help, Command command) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", cfg.input_path, ".fzg graph file")->required();
    sub->callback([&cfg, command] { cfg.command = command; });
  };
  file_command("indices", "Wiener and connectivity indices with the per-pair table",
               Command::kIndices);
  file_command("classify", "alpha/beta/delta class of every edge", Command::kClassify);
  file_command("mst", "Maximum spanning tree", Command::kMst);
  file_command("kind", "Fuzzy tree / fuzzy cycle / saturated cycle flags", Command::kKind);
  app.add_subcommand("repro", "Recompute the published counterexamples")
      ->callback([&cfg] { cfg.command = Command::kRepro; });

  CLI::App* falsify = app.add_subcommand("falsify", "Search for counterexamples to a claim");
  falsify->add_option("claim", cfg.claim, "corollary-star or theorem-star")
      ->required()
      ->check(CLI::IsMember({"corollary-star", "theorem-star"}));
  falsify->add_option("--trials", cfg.trials, "Number of instances to test");
  falsify->add_option("--seed", cfg.seed, "Random seed (corollary-star)");
  falsify->add_option("--sizes", cfg.sizes, "Vertex-count range A..B (corollary-star)");
  falsify->add_option("--n", cfg.n_range, "Cycle-length range A..B (theorem-star)");
  falsify->callback([&cfg] { cfg.command = Command::kFalsify; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "fzg: " << e.what() << "\n";
    return kInputError;
  }
  cfg.format = format == "json" ? Format::kJson : Format::kText;

  Rendered result;
  try {
    switch (cfg.command) {
      case Command::kIndices: result = cmd_indices(cfg); break;
      case Command::kClassify: result = cmd_classify(cfg); break;
      case Command::kMst: result = cmd_mst(cfg); break;
      case Command::kKind: result = cmd_kind(cfg); break;
      case Command::kRepro: result = cmd_repro(cfg); break;
      case Command::kFalsify: result = cmd_falsify(cfg); break;
    }
  } catch (const Error& e) {
    err << "fzg: " << (cfg.input_path.empty() ? "" : cfg.input_path + ": ") << e.what() << "\n";
    return kInputError;
  } catch (const UsageError& e) {
    err << "fzg: " << e.what() << "\n";
    return kInputError;
  } catch (const std::runtime_error& e) {
    err << "fzg: " << e.what() << "\n";
    return kInputError;
  }

  if (result.code == kPartialResult) {
    err << "fzg: strong subgraph is disconnected; WI unavailable\n";
  }
  if (cfg.output_path.empty()) {
    out << result.body;
  } else {
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) {
      err << "fzg: cannot write '" << cfg.output_path << "'\n";
      return kInputError;
    }
    file << result.body;
  }
  return result.code;
}

}  // namespace fzg::cli
