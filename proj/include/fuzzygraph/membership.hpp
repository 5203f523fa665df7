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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fzg {

/// A membership grade in [0, 1], stored as an integer count of micro-units
/// (1 unit = 1e-6). Comparisons and min/max are exact; sums of grades are
/// carried as integer micro-units or as IndexValue.
class Membership {
 public:
  static constexpr std::uint32_t kScale = 1'000'000;
  static constexpr int kFractionDigits = 6;

  constexpr Membership() = default;

  /// Throws std::out_of_range when `micros` exceeds kScale.
  static Membership from_micros(std::int64_t micros);

  /// Parses a decimal literal `D[.F]` with at most six fractional digits and
  /// a value no greater than 1. Throws std::invalid_argument otherwise.
  static Membership parse(std::string_view text);

  static constexpr Membership zero() { return Membership(0); }
  static constexpr Membership one() { return Membership(kScale); }

  constexpr std::uint32_t micros() const { return micros_; }
  constexpr bool is_zero() const { return micros_ == 0; }

  /// Shortest exact decimal form: 100000 -> "0.1", 1000000 -> "1".
  std::string to_string() const;

  friend constexpr auto operator<=>(Membership, Membership) = default;

 private:
  constexpr explicit Membership(std::uint32_t micros) : micros_(micros) {}

  std::uint32_t micros_ = 0;
};

}  // namespace fzg
