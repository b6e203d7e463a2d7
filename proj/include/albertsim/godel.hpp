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

#ifndef ALBERTSIM_GODEL_HPP
#define ALBERTSIM_GODEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "albertsim/natural.hpp"

namespace albert::godel {

/// Token sequence over the fixed 13-symbol alphabet.
struct Proposition {
  std::vector<std::string> tokens;

  std::string text() const;  // tokens joined by single spaces
  friend bool operator==(const Proposition& a, const Proposition& b) = default;
};

/// Positional code of a proposition, base 14 (alphabet size + 1, so that no
/// digit is zero and leading tokens are never lost). Always >= 1.
using GodelNumber = Natural;

inline constexpr std::uint32_t kCodeBase = 14;

/// Alphabet table: token -> digit id (1..13). Digit 0 is unused so codes are
/// self-delimiting under base-14 positional reading.
///   0=1  S=2  ==3  ~=4  E=5  x=6  w=7  (=8  )=9  p=10  U=11  proves=12  ,=13
std::optional<std::uint32_t> token_id(std::string_view token);
std::string_view token_of(std::uint32_t id);  // throws on id outside 1..13
std::size_t alphabet_size();                  // 13

/// Base-14 positional code, most significant token first.
/// Throws on an empty proposition or a token outside the alphabet.
GodelNumber encode(const Proposition& p);

/// Inverse of encode. Throws on zero input or any zero base-14 digit.
Proposition decode(const GodelNumber& n);

/// Numeral for w as a successor chain: w copies of "S" followed by "0".
std::vector<std::string> numeral(const GodelNumber& w);

/// The self-referential template instantiated at w:
///   ~ E x ( U ( x ) proves p ( numeral(w) , numeral(w) ) )
/// The fixed point (this sentence HAVING code w) is not derived; callers model
/// it by registering the sentence under w in a NumberRegistry.
Proposition diagonal_sentence(const GodelNumber& w);

/// Finite map from code numbers to basis indices 0..capacity-1, injective both
/// ways, indices assigned in registration order.
class NumberRegistry {
 public:
  explicit NumberRegistry(std::size_t capacity);

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return numbers_.size(); }
  const std::vector<GodelNumber>& numbers() const { return numbers_; }

  /// Index already holding n, else the next free index. Throws when full and
  /// n is absent.
  std::size_t register_number(const GodelNumber& n);

  std::optional<std::size_t> index_of(const GodelNumber& n) const;
  const GodelNumber& number_at(std::size_t index) const;  // throws out of range

 private:
  std::size_t capacity_;
  std::vector<GodelNumber> numbers_;
};

}  // namespace albert::godel

#endif  // ALBERTSIM_GODEL_HPP
