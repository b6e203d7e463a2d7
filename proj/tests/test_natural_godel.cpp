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

#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "albertsim/godel.hpp"
#include "albertsim/natural.hpp"
#include "doctest.h"

using albert::Natural;
namespace godel = albert::godel;

TEST_CASE("natural numbers round trip through decimal text") {
  CHECK(Natural(0).to_decimal() == "0");
  CHECK(Natural(29115).to_decimal() == "29115");
  CHECK(Natural::from_decimal("0") == Natural(0));
  CHECK(Natural::from_decimal("18446744073709551615") == Natural(0xFFFFFFFFFFFFFFFFull));

  // Past 64 bits: 2^80.
  const std::string big = "1208925819614629174706176";
  CHECK(Natural::from_decimal(big).to_decimal() == big);

  CHECK_THROWS_AS(Natural::from_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(Natural::from_decimal("12a"), std::invalid_argument);
}

TEST_CASE("natural arithmetic agrees with 64-bit arithmetic on small values") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    std::uint64_t a = rng() % 0xFFFFFFFFull;
    std::uint64_t b = rng() % 0xFFFFFFFFull;
    CHECK(Natural(a).plus(Natural(b)) == Natural(a + b));
    CHECK(Natural(a).times(Natural(b)) == Natural(a * b));

    std::uint32_t div = static_cast<std::uint32_t>(1 + rng() % 1000);
    auto [q, r] = Natural(a).div_mod(div);
    CHECK(q == Natural(a / div));
    CHECK(r == a % div);
  }

  Natural acc(7);
  acc.mul_add(14, 3);  // 7*14 + 3
  CHECK(acc == Natural(101));

  CHECK_THROWS_AS(Natural(5).div_mod(0), std::invalid_argument);
}

TEST_CASE("exact double conversion stops at the 53-bit boundary") {
  const std::uint64_t max_exact = (1ull << 53) - 1;
  CHECK(Natural(max_exact).to_double_exact() == doctest::Approx(9007199254740991.0));
  CHECK_FALSE(Natural(max_exact + 1).to_double_exact().has_value());
  CHECK_FALSE(Natural::from_decimal("1208925819614629174706176").to_double_exact().has_value());
  CHECK(Natural(0).to_double_exact() == doctest::Approx(0.0));

  CHECK(Natural(max_exact).to_u64() == max_exact);
  CHECK_FALSE(Natural::from_decimal("18446744073709551616").to_u64().has_value());
}

TEST_CASE("natural ordering") {
  CHECK(Natural(3) < Natural(4));
  CHECK(Natural::from_decimal("1208925819614629174706176") > Natural(0xFFFFFFFFFFFFFFFFull));
  CHECK(Natural(10) == Natural(10));
}

TEST_CASE("alphabet table is a 13-symbol bijection") {
  CHECK(godel::alphabet_size() == 13);
  for (std::uint32_t id = 1; id <= 13; ++id) {
    CHECK(godel::token_id(godel::token_of(id)) == id);
  }
  CHECK(godel::token_id("0") == 1);
  CHECK(godel::token_id("proves") == 12);
  CHECK_FALSE(godel::token_id("q").has_value());
  CHECK_THROWS_AS(godel::token_of(0), std::out_of_range);
  CHECK_THROWS_AS(godel::token_of(14), std::out_of_range);
}

TEST_CASE("encoding pins the worked examples") {
  CHECK(godel::encode({{"0"}}) == Natural(1));

  godel::Proposition pw{{"p", "(", "w", ")"}};
  Natural code = godel::encode(pw);
  CHECK(code == Natural(29115));
  // Cross-check by accumulating digit ids 10, 8, 7, 9 in base 14 by hand.
  CHECK(((10ull * 14 + 8) * 14 + 7) * 14 + 9 == 29115ull);

  CHECK_THROWS_AS(godel::encode({{}}), std::invalid_argument);
  CHECK_THROWS_AS(godel::encode({{"p", "q"}}), std::invalid_argument);
}

TEST_CASE("decoding pins the worked examples and rejects non-codes") {
  CHECK(godel::decode(Natural(1)) == godel::Proposition{{"0"}});
  CHECK(godel::decode(Natural(29115)).text() == "p ( w )");

  // 14 = digit 1 followed by digit 0; zero digits never appear in codes.
  CHECK_THROWS_AS(godel::decode(Natural(14)), std::invalid_argument);
  CHECK_THROWS_AS(godel::decode(Natural(0)), std::invalid_argument);
  CHECK_THROWS_AS(godel::decode(Natural(196)), std::invalid_argument);  // 14^2
}

TEST_CASE("random propositions survive an encode/decode round trip") {
  std::mt19937_64 rng(20260817);
  std::set<std::string> distinct_codes;
  std::set<std::string> distinct_texts;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t len = 1 + rng() % 12;
    godel::Proposition p;
    for (std::size_t i = 0; i < len; ++i) {
      p.tokens.emplace_back(godel::token_of(static_cast<std::uint32_t>(1 + rng() % 13)));
    }
    Natural code = godel::encode(p);
    CHECK(godel::decode(code) == p);
    distinct_codes.insert(code.to_decimal());
    distinct_texts.insert(p.text());
  }
  // Injectivity on the sample: two propositions share a code only if they
  // are the same proposition (short draws do repeat — that is fine).
  CHECK(distinct_codes.size() == distinct_texts.size());
}

TEST_CASE("numerals are successor chains") {
  CHECK(godel::numeral(Natural(0)) == std::vector<std::string>{"0"});
  CHECK(godel::numeral(Natural(1)) == std::vector<std::string>{"S", "0"});
  CHECK(godel::numeral(Natural(3)) == std::vector<std::string>{"S", "S", "S", "0"});
}

TEST_CASE("diagonal sentence instantiates the template") {
  godel::Proposition s = godel::diagonal_sentence(Natural(1));
  // ~ E x ( U ( x ) proves p ( S 0 , S 0 ) )  -- 18 tokens at w=1.
  std::vector<std::string> expected = {"~", "E", "x", "(", "U", "(", "x", ")", "proves",
                                       "p", "(", "S", "0", ",", "S", "0", ")", ")"};
  CHECK(s.tokens == expected);
  CHECK(s.tokens.size() == 18);

  // Two calls agree; the code is never the input (the fixed point is modeled,
  // not constructed).
  CHECK(godel::diagonal_sentence(Natural(1)) == s);
  for (std::uint64_t w = 1; w <= 5; ++w) {
    Natural code = godel::encode(godel::diagonal_sentence(Natural(w)));
    CHECK(code != Natural(w));
    CHECK_FALSE(code.to_double_exact().has_value());  // codes exceed 2^53
  }
}

TEST_CASE("number registry is idempotent, ordered, and capacity-bound") {
  godel::NumberRegistry reg(4);
  CHECK(reg.capacity() == 4);
  CHECK(reg.size() == 0);

  CHECK(reg.register_number(Natural(29115)) == 0);
  CHECK(reg.register_number(Natural(5)) == 1);
  CHECK(reg.register_number(Natural(29115)) == 0);  // idempotent
  CHECK(reg.size() == 2);

  CHECK(reg.index_of(Natural(5)) == 1);
  CHECK_FALSE(reg.index_of(Natural(6)).has_value());
  CHECK(reg.number_at(0) == Natural(29115));
  CHECK_THROWS_AS(reg.number_at(2), std::out_of_range);

  reg.register_number(Natural(7));
  reg.register_number(Natural(8));
  CHECK_THROWS_AS(reg.register_number(Natural(9)), std::length_error);
  CHECK(reg.register_number(Natural(7)) == 2);  // existing entries still fine
}

TEST_CASE("number registry stays a bijection under random registration") {
  std::mt19937_64 rng(99);
  godel::NumberRegistry reg(16);
  for (int step = 0; step < 200; ++step) {
    Natural n(1 + rng() % 16);  // small pool forces repeats
    std::size_t idx = reg.register_number(n);
    CHECK(reg.number_at(idx) == n);
    CHECK(reg.index_of(n) == idx);
  }
  CHECK(reg.size() <= reg.capacity());
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CHECK(reg.index_of(reg.number_at(i)) == i);
  }
}
