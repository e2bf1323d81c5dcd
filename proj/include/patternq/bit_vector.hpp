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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/dynamic_bitset.hpp>

namespace patternq {

/// Thrown when two operands must have the same length and do not.
class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when text cannot be parsed into a bit vector or pattern.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Fixed-length sequence of bits.
 *
 * Position 0 is the rightmost bit when the vector is written out, so the
 * text form is MSB-first: "0001" has only bit 0 set. The length is fixed at
 * construction; all binary operations require equal lengths.
 */
class BitVector {
 public:
  using Storage = boost::dynamic_bitset<std::uint64_t>;

  /// All-zero vector of the given length (length >= 1).
  explicit BitVector(std::size_t length);

  /// Low `length` bits of `value`, bit i of the integer at position i.
  static BitVector from_integer(std::size_t length, std::uint64_t value);

  /// Parses '0'/'1' text, MSB-first. Spaces and underscores are skipped.
  static BitVector parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }

  bool test(std::size_t position) const;
  void set(std::size_t position, bool value = true);

  std::size_t count() const noexcept { return bits_.count(); }
  bool all() const noexcept { return bits_.all(); }
  bool none() const noexcept { return bits_.none(); }

  /// Integer value with bit i taken from position i. Requires size() <= 64.
  std::uint64_t to_integer() const;

  /// MSB-first text; when `grouped` a space separates every 4 bits.
  std::string to_string(bool grouped = false) const;

  BitVector operator~() const;
  BitVector operator^(const BitVector& other) const;
  BitVector operator&(const BitVector& other) const;
  BitVector operator|(const BitVector& other) const;

  /// Number of positions where the two vectors differ.
  std::size_t hamming_distance(const BitVector& other) const;

  /// `parts` joined left to right, so parts.back() ends up in the low positions.
  static BitVector concat_msb_first(std::initializer_list<BitVector> parts);

  friend bool operator==(const BitVector& a, const BitVector& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const BitVector& a, const BitVector& b);

  const Storage& storage() const noexcept { return bits_; }

 private:
  explicit BitVector(Storage bits) : bits_(std::move(bits)) {}
  void require_same_length(const BitVector& other, const char* op) const;

  Storage bits_;
};

}  // namespace patternq
