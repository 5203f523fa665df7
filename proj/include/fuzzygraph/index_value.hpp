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

#include <boost/multiprecision/cpp_int.hpp>

#include "fuzzygraph/membership.hpp"

namespace fzg {

/// Exact nonnegative-or-signed rational used for indices, path lengths and
/// the distance table.
class IndexValue {
 public:
  using Rational = boost::multiprecision::cpp_rational;

  IndexValue() = default;
  explicit IndexValue(Rational value) : value_(std::move(value)) {}

  static IndexValue from_integer(std::int64_t n) { return IndexValue(Rational(n)); }
  static IndexValue from_fraction(std::int64_t num, std::int64_t den);
  static IndexValue from_micros(std::int64_t micros);
  static IndexValue from(Membership m) { return from_micros(m.micros()); }
  /// Exact value of a plain decimal literal such as "7.4" or "-0.25".
  /// Throws std::invalid_argument.
  static IndexValue parse_decimal(std::string_view text);

  const Rational& rational() const { return value_; }

  /// Exact decimal when the value terminates in base 10, `p/q` otherwise.
  std::string to_string() const;

  IndexValue& operator+=(const IndexValue& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  friend IndexValue operator+(IndexValue lhs, const IndexValue& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend IndexValue operator-(const IndexValue& lhs, const IndexValue& rhs) {
    return IndexValue(Rational(lhs.value_ - rhs.value_));
  }
  friend IndexValue operator*(const IndexValue& lhs, const IndexValue& rhs) {
    return IndexValue(Rational(lhs.value_ * rhs.value_));
  }

  friend bool operator==(const IndexValue& a, const IndexValue& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const IndexValue& a, const IndexValue& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

}  // namespace fzg
