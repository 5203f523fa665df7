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

#include "fuzzygraph/index_value.hpp"

#include <stdexcept>

namespace fzg {

using boost::multiprecision::cpp_int;

IndexValue IndexValue::from_fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return IndexValue(Rational(cpp_int(num), cpp_int(den)));
}

IndexValue IndexValue::from_micros(std::int64_t micros) {
  return from_fraction(micros, Membership::kScale);
}

IndexValue IndexValue::parse_decimal(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  cpp_int digits = 0;
  cpp_int scale = 1;
  bool seen_dot = false;
  bool seen_digit = false;
  for (char c : text) {
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits = digits * 10 + (c - '0');
      if (seen_dot) scale *= 10;
      seen_digit = true;
    } else {
      throw std::invalid_argument("not a decimal literal: '" + original + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("not a decimal literal: '" + original + "'");
  if (negative) digits = -digits;
  return IndexValue(Rational(digits, scale));
}

std::string IndexValue::to_string() const {
  cpp_int num = boost::multiprecision::numerator(value_);
  cpp_int den = boost::multiprecision::denominator(value_);

  // Terminating iff the denominator has no prime factors besides 2 and 5;
  // then den divides 10^k with k = max(twos, fives).
  cpp_int rest = den;
  unsigned twos = 0;
  unsigned fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return num.str() + "/" + den.str();

  const bool negative = num < 0;
  if (negative) num = -num;
  const unsigned k = std::max(twos, fives);
  const cpp_int scale = boost::multiprecision::pow(cpp_int(10), k);
  const cpp_int scaled = num * (scale / den);
  const cpp_int whole = scaled / scale;
  std::string out = (negative ? "-" : "") + whole.str();
  if (k > 0) {
    std::string frac = cpp_int(scaled % scale).str();
    frac.insert(0, k - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  }
  return out;
}

}  // namespace fzg
