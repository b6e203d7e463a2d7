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

#include "albertsim/godel.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace albert::godel {

namespace {

// Digit ids 1..13; id 0 is reserved (never a valid digit) so that positional
// base-14 codes lose no leading tokens and decode is total on valid codes.
constexpr std::array<std::string_view, 14> kTokens = {
    "",  "0", "S", "=", "~", "E", "x", "w", "(", ")", "p", "U", "proves", ","};

}  // namespace

std::string Proposition::text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out << ' ';
    out << tokens[i];
  }
  return out.str();
}

std::optional<std::uint32_t> token_id(std::string_view token) {
  for (std::uint32_t id = 1; id < kTokens.size(); ++id) {
    if (kTokens[id] == token) return id;
  }
  return std::nullopt;
}

std::string_view token_of(std::uint32_t id) {
  if (id < 1 || id >= kTokens.size()) {
    throw std::out_of_range("token id outside 1..13");
  }
  return kTokens[id];
}

std::size_t alphabet_size() { return kTokens.size() - 1; }

GodelNumber encode(const Proposition& p) {
  if (p.tokens.empty()) throw std::invalid_argument("cannot encode an empty proposition");
  GodelNumber n;
  for (const std::string& token : p.tokens) {
    auto id = token_id(token);
    if (!id) throw std::invalid_argument("unknown token '" + token + "'");
    n.mul_add(kCodeBase, *id);
  }
  return n;
}

Proposition decode(const GodelNumber& n) {
  if (n.is_zero()) throw std::invalid_argument("cannot decode zero");
  std::vector<std::string> tokens;
  GodelNumber rest = n;
  while (!rest.is_zero()) {
    auto [q, digit] = rest.div_mod(kCodeBase);
    if (digit == 0) {
      throw std::invalid_argument("not a valid code: base-14 digit 0 at position " +
                                  std::to_string(tokens.size()));
    }
    tokens.emplace_back(token_of(digit));
    rest = std::move(q);
  }
  std::reverse(tokens.begin(), tokens.end());
  return Proposition{std::move(tokens)};
}

std::vector<std::string> numeral(const GodelNumber& w) {
  // Successor-chain numeral: w copies of "S" then "0". Numerals appear only
  // inside sentences for small registry indices, so a u64 bound is ample.
  auto count = w.to_u64();
  if (!count || *count > 10000) {
    throw std::invalid_argument("numeral too large to render as a successor chain");
  }
  std::vector<std::string> tokens(*count, "S");
  tokens.emplace_back("0");
  return tokens;
}

Proposition diagonal_sentence(const GodelNumber& w) {
  std::vector<std::string> tokens = {"~", "E", "x", "(", "U", "(", "x", ")", "proves",
                                     "p", "("};
  std::vector<std::string> num = numeral(w);
  tokens.insert(tokens.end(), num.begin(), num.end());
  tokens.emplace_back(",");
  tokens.insert(tokens.end(), num.begin(), num.end());
  tokens.emplace_back(")");
  tokens.emplace_back(")");
  return Proposition{std::move(tokens)};
}

NumberRegistry::NumberRegistry(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw std::invalid_argument("registry capacity must be positive");
}

std::size_t NumberRegistry::register_number(const GodelNumber& n) {
  if (auto existing = index_of(n)) return *existing;
  if (numbers_.size() >= capacity_) {
    throw std::length_error("registry full: capacity " + std::to_string(capacity_) +
                            " cannot hold a new number");
  }
  numbers_.push_back(n);
  return numbers_.size() - 1;
}

std::optional<std::size_t> NumberRegistry::index_of(const GodelNumber& n) const {
  for (std::size_t i = 0; i < numbers_.size(); ++i) {
    if (numbers_[i] == n) return i;
  }
  return std::nullopt;
}

const GodelNumber& NumberRegistry::number_at(std::size_t index) const {
  if (index >= numbers_.size()) throw std::out_of_range("registry index out of range");
  return numbers_[index];
}

}  // namespace albert::godel
