// Copyright 2026 The albertsim Authors
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

#ifndef ALBERTSIM_NATURAL_HPP
#define ALBERTSIM_NATURAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace albert {

/// Arbitrary-precision non-negative integer. Sentence codes grow past 64 bits
/// for quite short sentences (14^17 > 2^64), so codec arithmetic runs on this
/// type and conversion to double is offered only when exact.
class Natural {
 public:
  Natural() = default;  // zero
  explicit Natural(std::uint64_t value);

  static Natural from_decimal(std::string_view text);  // throws on bad input
  std::string to_decimal() const;

  /// Exact conversion to double; empty above 2^53 - 1.
  std::optional<double> to_double_exact() const;
  std::optional<std::uint64_t> to_u64() const;

  bool is_zero() const { return limbs_.empty(); }

  Natural& mul_add(std::uint32_t multiplier, std::uint32_t addend);  // *this = *this * m + a
  Natural plus(const Natural& other) const;
  Natural times(const Natural& other) const;

  /// Quotient and remainder by a single 32-bit divisor. Throws on zero.
  std::pair<Natural, std::uint32_t> div_mod(std::uint32_t divisor) const;

  friend bool operator==(const Natural& a, const Natural& b) = default;
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b);

 private:
  void trim();
  // Little-endian base-2^32 limbs; no trailing zero limbs, empty means zero.
  std::vector<std::uint32_t> limbs_;
};

}  // namespace albert

#endif  // ALBERTSIM_NATURAL_HPP
