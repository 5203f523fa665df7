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

#include "fuzzygraph/membership.hpp"

#include <stdexcept>

namespace fzg {

Membership Membership::from_micros(std::int64_t micros) {
  if (micros < 0 || micros > static_cast<std::int64_t>(kScale)) {
    throw std::out_of_range("membership out of [0, 1]: " + std::to_string(micros) +
                            " micro-units");
  }
  return Membership(static_cast<std::uint32_t>(micros));
}

Membership Membership::parse(std::string_view text) {
  auto fail = [&](const char* why) -> Membership {
    throw std::invalid_argument("bad grade '" + std::string(text) + "': " + why);
  };
  if (text.empty()) return fail("empty");

  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) return fail("no digits");
  if (dot != std::string_view::npos && frac.empty()) return fail("no digits after '.'");
  if (frac.size() > static_cast<std::size_t>(kFractionDigits)) {
    return fail("more than 6 fractional digits");
  }

  std::int64_t units = 0;
  for (char c : whole) {
    if (c < '0' || c > '9') return fail("not a decimal literal");
    units = units * 10 + (c - '0');
    if (units > 1) return fail("greater than 1");
  }
  std::int64_t micros = 0;
  std::size_t digits = 0;
  for (char c : frac) {
    if (c < '0' || c > '9') return fail("not a decimal literal");
    micros = micros * 10 + (c - '0');
    ++digits;
  }
  for (; digits < static_cast<std::size_t>(kFractionDigits); ++digits) micros *= 10;

  const std::int64_t total = units * kScale + micros;
  if (total > static_cast<std::int64_t>(kScale)) return fail("greater than 1");
  return Membership(static_cast<std::uint32_t>(total));
}

std::string Membership::to_string() const {
  std::string out = std::to_string(micros_ / kScale);
  std::uint32_t frac = micros_ % kScale;
  if (frac == 0) return out;
  std::string digits = std::to_string(frac);
  digits.insert(0, kFractionDigits - digits.size(), '0');
  while (digits.back() == '0') digits.pop_back();
  return out + "." + digits;
}

}  // namespace fzg
