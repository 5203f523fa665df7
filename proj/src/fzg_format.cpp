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

#include "fuzzygraph/fzg_format.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fuzzygraph/error.hpp"

namespace fzg {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

Membership parse_grade(std::string_view token, std::size_t line_no) {
  try {
    return Membership::parse(token);
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::kSyntaxError, e.what(), line_no);
  }
}

}  // namespace

FuzzyGraph parse_graph(std::string_view text) {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<std::size_t> edge_lines;
  std::set<std::string, std::less<>> declared;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (tokens[0] == "v") {
      if (tokens.size() != 3) {
        throw Error(ErrorCode::kSyntaxError, "expected 'v <name> <sigma>'", line_no);
      }
      std::string name(tokens[1]);
      if (!declared.insert(name).second) {
        throw Error(ErrorCode::kDuplicateVertex, "vertex '" + name + "' declared twice",
                    line_no);
      }
      vertices.push_back(VertexSpec{std::move(name), parse_grade(tokens[2], line_no)});
    } else if (tokens[0] == "e") {
      if (tokens.size() != 4) {
        throw Error(ErrorCode::kSyntaxError, "expected 'e <name1> <name2> <mu>'", line_no);
      }
      for (std::string_view endpoint : {tokens[1], tokens[2]}) {
        if (!declared.contains(endpoint)) {
          throw Error(ErrorCode::kUnknownEndpoint,
                      "vertex '" + std::string(endpoint) + "' used before declaration",
                      line_no);
        }
      }
      edges.push_back(EdgeSpec{std::string(tokens[1]), std::string(tokens[2]),
                               parse_grade(tokens[3], line_no)});
      edge_lines.push_back(line_no);
    } else {
      throw Error(ErrorCode::kSyntaxError,
                  "unknown record '" + std::string(tokens[0]) + "'", line_no);
    }
  }

  try {
    return FuzzyGraph::build(vertices, edges);
  } catch (const Error&) {
    // Rebuild edge by edge to find the line that introduced the violation.
    for (std::size_t i = 0; i < edges.size(); ++i) {
      try {
        FuzzyGraph::build(vertices, std::span<const EdgeSpec>(edges).first(i + 1));
      } catch (const Error& e) {
        const std::string what = e.what();
        throw Error(e.code(), what.substr(what.find(": ") + 2), edge_lines[i]);
      }
    }
    throw;
  }
}

FuzzyGraph parse_graph(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(std::string_view(buffer.str()));
}

FuzzyGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_graph(in);
}

std::string serialize_graph(const FuzzyGraph& g) {
  std::string out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    out += "v " + g.name(i) + " " + g.sigma(i).to_string() + "\n";
  }
  for (const Edge& e : g.edges()) {
    out += "e " + g.name(e.u) + " " + g.name(e.v) + " " + e.mu.to_string() + "\n";
  }
  return out;
}

}  // namespace fzg
