// Copyright 2026 The patternq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "patternq/bit_vector.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace patternq {
namespace {

TEST(BitVector, ParseIsMsbFirst) {
  const BitVector v = BitVector::parse("0001");
  EXPECT_EQ(v.size(), 4u);
  EXPECT_TRUE(v.test(0));
  EXPECT_FALSE(v.test(3));
  EXPECT_EQ(v.to_integer(), 1u);
  EXPECT_EQ(BitVector::parse("1000").to_integer(), 8u);
}

TEST(BitVector, ParseSkipsSeparators) {
  const BitVector v = BitVector::parse("1000 1000_1000 0111");
  EXPECT_EQ(v.size(), 16u);
  EXPECT_EQ(v.to_string(), "1000100010000111");
  EXPECT_EQ(v.to_string(true), "1000 1000 1000 0111");
}

TEST(BitVector, ParseRejectsGarbage) {
  EXPECT_THROW(BitVector::parse(""), ParseError);
  EXPECT_THROW(BitVector::parse("  _ "), ParseError);
  EXPECT_THROW(BitVector::parse("0102"), ParseError);
}

TEST(BitVector, ZeroLengthRejected) { EXPECT_THROW(BitVector(0), std::invalid_argument); }

TEST(BitVector, OutOfRangeAccess) {
  BitVector v(4);
  EXPECT_THROW(v.test(4), std::out_of_range);
  EXPECT_THROW(v.set(7), std::out_of_range);
}

TEST(BitVector, XorNotAndHamming) {
  const BitVector a = BitVector::parse("0001");
  const BitVector b = BitVector::parse("1110");
  EXPECT_TRUE((a ^ b).all());
  EXPECT_EQ(~a, b);
  EXPECT_EQ(a.hamming_distance(BitVector::parse("0100")), 2u);
  EXPECT_THROW(a ^ BitVector(8), LengthMismatch);
  EXPECT_THROW((void)a.hamming_distance(BitVector(2)), LengthMismatch);
}

TEST(BitVector, ConcatPutsLastPartLowest) {
  const BitVector joined =
      BitVector::concat_msb_first({BitVector::parse("10"), BitVector::parse("01")});
  EXPECT_EQ(joined.to_string(), "1001");
}

TEST(BitVector, GroupingFromTheRight) {
  EXPECT_EQ(BitVector::parse("100001").to_string(true), "10 0001");
}

TEST(BitVector, TextRoundTripProperty) {
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = 1 + testing::test_rng()() % 300;
    const BitVector v = testing::random_bits(len);
    EXPECT_EQ(BitVector::parse(v.to_string()), v);
    EXPECT_EQ(BitVector::parse(v.to_string(true)), v);
    EXPECT_EQ(~~v, v);
    EXPECT_EQ(v.count() + (~v).count(), len);
  }
}

TEST(BitVector, OrderingFollowsTextOrder) {
  EXPECT_LT(BitVector::parse("0011"), BitVector::parse("0100"));
  EXPECT_FALSE(BitVector::parse("1000") < BitVector::parse("0111"));
}

}  // namespace
}  // namespace patternq
