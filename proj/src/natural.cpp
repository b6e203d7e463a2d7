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

#include "albertsim/natural.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace albert {

Natural::Natural(std::uint64_t value) {
  while (value != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
    value >>= 32;
  }
}

void Natural::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Natural Natural::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  Natural n;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("invalid decimal digit in natural number");
    }
    n.mul_add(10, static_cast<std::uint32_t>(c - '0'));
  }
  return n;
}

std::string Natural::to_decimal() const {
  if (is_zero()) return "0";
  std::string digits;
  Natural n = *this;
  while (!n.is_zero()) {
    auto [q, r] = n.div_mod(10);
    digits.push_back(static_cast<char>('0' + r));
    n = std::move(q);
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::optional<double> Natural::to_double_exact() const {
  auto v = to_u64();
  if (!v || *v > ((1ull << 53) - 1)) return std::nullopt;
  return static_cast<double>(*v);
}

std::optional<std::uint64_t> Natural::to_u64() const {
  if (limbs_.size() > 2) return std::nullopt;
  std::uint64_t v = 0;
  if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

Natural& Natural::mul_add(std::uint32_t multiplier, std::uint32_t addend) {
  std::uint64_t carry = addend;
  for (std::uint32_t& limb : limbs_) {
    std::uint64_t t = static_cast<std::uint64_t>(limb) * multiplier + carry;
    limb = static_cast<std::uint32_t>(t & 0xffffffffu);
    carry = t >> 32;
  }
  while (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
    carry >>= 32;
  }
  trim();
  return *this;
}

Natural Natural::plus(const Natural& other) const {
  Natural result;
  const std::size_t n = std::max(limbs_.size(), other.limbs_.size());
  result.limbs_.reserve(n + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t t = carry;
    if (i < limbs_.size()) t += limbs_[i];
    if (i < other.limbs_.size()) t += other.limbs_[i];
    result.limbs_.push_back(static_cast<std::uint32_t>(t & 0xffffffffu));
    carry = t >> 32;
  }
  if (carry != 0) result.limbs_.push_back(static_cast<std::uint32_t>(carry));
  result.trim();
  return result;
}

Natural Natural::times(const Natural& other) const {
  if (is_zero() || other.is_zero()) return Natural();
  Natural result;
  result.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
      std::uint64_t t = static_cast<std::uint64_t>(limbs_[i]) * other.limbs_[j] +
                        result.limbs_[i + j] + carry;
      result.limbs_[i + j] = static_cast<std::uint32_t>(t & 0xffffffffu);
      carry = t >> 32;
    }
    std::size_t k = i + other.limbs_.size();
    while (carry != 0) {
      std::uint64_t t = result.limbs_[k] + carry;
      result.limbs_[k] = static_cast<std::uint32_t>(t & 0xffffffffu);
      carry = t >> 32;
      ++k;
    }
  }
  result.trim();
  return result;
}

std::pair<Natural, std::uint32_t> Natural::div_mod(std::uint32_t divisor) const {
  if (divisor == 0) throw std::invalid_argument("division by zero");
  Natural quotient;
  quotient.limbs_.assign(limbs_.size(), 0);
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t t = (rem << 32) | limbs_[i];
    quotient.limbs_[i] = static_cast<std::uint32_t>(t / divisor);
    rem = t % divisor;
  }
  quotient.trim();
  return {std::move(quotient), static_cast<std::uint32_t>(rem)};
}

std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
  if (a.limbs_.size() != b.limbs_.size()) {
    return a.limbs_.size() <=> b.limbs_.size();
  }
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace albert
