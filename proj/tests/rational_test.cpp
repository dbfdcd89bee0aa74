// Copyright 2026 The tridots Authors
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

#include "tridots/rational.hpp"

#include <random>
#include <string>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace tridots {
namespace {

using testing::NaiveFraction;

TEST(RationalTest, CanonicalForm) {
  const Rational r(BigInt(4), BigInt(-6));
  EXPECT_EQ(r.numerator(), -2);
  EXPECT_EQ(r.denominator(), 3);
  const Rational zero(BigInt(0), BigInt(-17));
  EXPECT_EQ(zero.numerator(), 0);
  EXPECT_EQ(zero.denominator(), 1);
  EXPECT_EQ(zero, Rational());
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), DomainError);
}

TEST(RationalTest, ParseAndPrint) {
  EXPECT_EQ(Rational::Parse("30/7"), Rational(BigInt(30), BigInt(7)));
  EXPECT_EQ(Rational::Parse("-4/6").str(), "-2/3");
  EXPECT_EQ(Rational::Parse("12").str(), "12");
  EXPECT_EQ(Rational::Parse("3/-9").str(), "-1/3");
  EXPECT_EQ(Rational::Parse("123456789012345678901234567890/10").str(), "12345678901234567890123456789");
  for (const char* bad : {"", "/3", "3/", "1/0", "a", "1.5", "--1", "1/2/3"}) {
    EXPECT_THROW(Rational::Parse(bad), DomainError) << bad;
  }
}

TEST(RationalTest, MixedNumbers) {
  EXPECT_EQ(Rational::Parse("30/7").mixed(), "4 2/7");
  EXPECT_EQ(Rational::Parse("9/4").mixed(), "2 1/4");
  EXPECT_EQ(Rational::Parse("1/4").mixed(), "1/4");
  EXPECT_EQ(Rational(3).mixed(), "3");
  EXPECT_EQ(Rational(0).mixed(), "0");
  EXPECT_EQ(Rational::Parse("-3/2").mixed(), "-1 1/2");
}

TEST(RationalTest, Floor) {
  EXPECT_EQ(Rational::Parse("30/7").floor(), 4);
  EXPECT_EQ(Rational::Parse("-1/2").floor(), -1);
  EXPECT_EQ(Rational::Parse("-4/2").floor(), -2);
  EXPECT_EQ(Rational(5).floor(), 5);
}

TEST(RationalTest, DivisionByZero) {
  EXPECT_THROW(Rational(1) / Rational(), DomainError);
}

TEST(RationalTest, Ordering) {
  EXPECT_LT(Rational::Parse("2/7"), Rational::Parse("1/3"));
  EXPECT_GT(Rational::Parse("-1/3"), Rational::Parse("-2/5"));
  EXPECT_EQ(Rational::Parse("2/4"), Rational::Parse("1/2"));
}

TEST(RationalTest, Decimals) {
  EXPECT_EQ(ExactDecimal(Rational::Parse("3/8")).value(), "0.375");
  EXPECT_EQ(ExactDecimal(Rational::Parse("-21/20")).value(), "-1.05");
  EXPECT_EQ(ExactDecimal(Rational(7)).value(), "7");
  EXPECT_FALSE(ExactDecimal(Rational::Parse("1/3")).has_value());
  EXPECT_EQ(RoundedDecimal(Rational::Parse("2/3"), 4), "0.6667");
  EXPECT_EQ(RoundedDecimal(Rational::Parse("-30/7"), 3), "-4.286");
  EXPECT_EQ(RoundedDecimal(Rational::Parse("1/3"), 0), "0");
}

// Every result must be reduced with a positive denominator and agree with
// unreduced fraction arithmetic.
TEST(RationalTest, ArithmeticMatchesNaiveFractions) {
  std::mt19937_64 rng(20240611);
  auto big = [&](bool allow_zero) {
    BigInt v = 0;
    const int words = static_cast<int>(rng() % 3) + 1;
    for (int w = 0; w < words; ++w) v = (v << 64) + BigInt(rng() % (w == 0 ? 97 : UINT64_MAX));
    if (rng() % 4 == 0) v *= 2 * 3 * 5 * 7;
    if (!allow_zero && v == 0) v = 1;
    return rng() % 2 ? BigInt(-v) : v;
  };
  auto agrees = [](const Rational& r, const NaiveFraction& f) {
    if (r.denominator() <= 0) return false;
    if (gcd(abs(r.numerator()), r.denominator()) != 1) return false;
    return r.numerator() * f.q == f.p * r.denominator();
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const NaiveFraction a{big(true), big(false)};
    const NaiveFraction b{big(true), big(false)};
    const Rational ra(a.p, a.q), rb(b.p, b.q);
    ASSERT_TRUE(agrees(ra + rb, a + b));
    ASSERT_TRUE(agrees(ra - rb, a - b));
    ASSERT_TRUE(agrees(ra * rb, a * b));
    if (b.p != 0) {
      ASSERT_TRUE(agrees(ra / rb, a / b));
    }
    const BigInt lhs = a.p * a.q * b.q * b.q;
    const BigInt rhs = b.p * b.q * a.q * a.q;
    const int naive_cmp = lhs.compare(rhs);
    ASSERT_EQ(ra < rb, naive_cmp < 0);
    ASSERT_EQ(ra == rb, naive_cmp == 0);
    ASSERT_EQ(Rational::Parse(ra.str()), ra);
  }
}

}  // namespace
}  // namespace tridots
