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

#include "fuzzygraph/oracle.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "fuzzygraph/error.hpp"

namespace fzg::oracle {
namespace {

void guard(const FuzzyGraph& g) {
  if (g.vertex_count() > kMaxVertices) {
    throw Error(ErrorCode::kTooLarge, "brute force is limited to " +
                                          std::to_string(kMaxVertices) + " vertices");
  }
}

/// Calls visit(path_edges) for every simple u-v path using edges accepted by
/// `usable`.
void for_each_simple_path(const FuzzyGraph& g, std::size_t u, std::size_t v,
                          const std::function<bool(const Edge&)>& usable,
                          const std::function<void(const std::vector<Edge>&)>& visit) {
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<Edge> path;
  std::function<void(std::size_t)> walk = [&](std::size_t x) {
    if (x == v) {
      visit(path);
      return;
    }
    on_path[x] = true;
    for (const Edge& e : g.edges()) {
      if (e.u != x && e.v != x) continue;
      const std::size_t next = e.u == x ? e.v : e.u;
      if (on_path[next] || !usable(e)) continue;
      path.push_back(e);
      walk(next);
      path.pop_back();
    }
    on_path[x] = false;
  };
  walk(u);
}

Membership conn_on(const FuzzyGraph& g, std::size_t u, std::size_t v,
                   const std::function<bool(const Edge&)>& usable) {
  Membership best = Membership::zero();
  for_each_simple_path(g, u, v, usable, [&](const std::vector<Edge>& path) {
    Membership weakest = Membership::one();
    for (const Edge& e : path) weakest = std::min(weakest, e.mu);
    best = std::max(best, weakest);
  });
  return best;
}

/// Strong iff mu(e) >= CONN of g - e between e's endpoints.
std::vector<Edge> strong_edges(const FuzzyGraph& g) {
  std::vector<Edge> strong;
  for (const Edge& e : g.edges()) {
    const Membership residual = conn_on(g, e.u, e.v, [&](const Edge& other) {
      return !(other.u == e.u && other.v == e.v);
    });
    if (e.mu >= residual) strong.push_back(e);
  }
  return strong;
}

std::optional<std::int64_t> ds_on(const FuzzyGraph& g, const std::vector<Edge>& strong,
                                  std::size_t u, std::size_t v) {
  const auto is_strong = [&](const Edge& e) {
    return std::find(strong.begin(), strong.end(), e) != strong.end();
  };
  std::optional<std::int64_t> best;
  for_each_simple_path(g, u, v, is_strong, [&](const std::vector<Edge>& path) {
    std::int64_t length = 0;
    for (const Edge& e : path) length += e.mu.micros();
    if (!best || length < *best) best = length;
  });
  return best;
}

IndexValue sigma_product(const FuzzyGraph& g, std::size_t u, std::size_t v) {
  return IndexValue::from(g.sigma(u)) * IndexValue::from(g.sigma(v));
}

}  // namespace

Membership conn_bruteforce(const FuzzyGraph& g, std::size_t u, std::size_t v) {
  guard(g);
  return conn_on(g, u, v, [](const Edge&) { return true; });
}

Membership conn_bruteforce(const FuzzyGraph& g, std::string_view u, std::string_view v) {
  return conn_bruteforce(g, g.index_of(u), g.index_of(v));
}

IndexValue ds_bruteforce(const FuzzyGraph& g, std::size_t u, std::size_t v) {
  guard(g);
  const auto d = ds_on(g, strong_edges(g), u, v);
  if (!d) {
    throw Error(ErrorCode::kStrongDisconnected,
                "no strong path " + g.name(u) + "-" + g.name(v));
  }
  return IndexValue::from_micros(*d);
}

IndexValue ds_bruteforce(const FuzzyGraph& g, std::string_view u, std::string_view v) {
  return ds_bruteforce(g, g.index_of(u), g.index_of(v));
}

IndexValue wi_bruteforce(const FuzzyGraph& g) {
  guard(g);
  const std::vector<Edge> strong = strong_edges(g);
  IndexValue total;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
      const auto d = ds_on(g, strong, u, v);
      if (!d) {
        throw Error(ErrorCode::kStrongDisconnected,
                    "no strong path " + g.name(u) + "-" + g.name(v));
      }
      total += sigma_product(g, u, v) * IndexValue::from_micros(*d);
    }
  }
  return total;
}

IndexValue ci_bruteforce(const FuzzyGraph& g) {
  guard(g);
  IndexValue total;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
      total += sigma_product(g, u, v) * IndexValue::from(conn_bruteforce(g, u, v));
    }
  }
  return total;
}

}  // namespace fzg::oracle
