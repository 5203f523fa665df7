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

#include <cstddef>
#include <string_view>

#include "fuzzygraph/graph.hpp"
#include "fuzzygraph/index_value.hpp"
#include "fuzzygraph/membership.hpp"

/// Exponential-time reference implementations. Each one evaluates its
/// definition directly by enumerating simple paths, and none of them call
/// into the connectivity or indices modules. Test ground truth only.
namespace fzg::oracle {

inline constexpr std::size_t kMaxVertices = 12;

/// Max over simple u-v paths of the min edge grade; 0 without a path.
/// Throws TooLarge.
Membership conn_bruteforce(const FuzzyGraph& g, std::size_t u, std::size_t v);
Membership conn_bruteforce(const FuzzyGraph& g, std::string_view u, std::string_view v);

/// Min over simple u-v paths that use only strong edges of the summed grade.
/// Edge strength is decided here via conn_bruteforce on g - e.
/// Throws TooLarge or StrongDisconnected.
IndexValue ds_bruteforce(const FuzzyGraph& g, std::size_t u, std::size_t v);
IndexValue ds_bruteforce(const FuzzyGraph& g, std::string_view u, std::string_view v);

IndexValue wi_bruteforce(const FuzzyGraph& g);
IndexValue ci_bruteforce(const FuzzyGraph& g);

}  // namespace fzg::oracle
