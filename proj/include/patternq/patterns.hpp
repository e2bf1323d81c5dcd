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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "patternq/bit_vector.hpp"

namespace patternq {

/// Exact non-negative rational in lowest terms.
using Ratio = boost::rational<std::int64_t>;

/// "num/den", always with an explicit denominator ("0/1", "3/8").
std::string to_string(const Ratio& r);

/// Rank or size argument outside the supported range.
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest rank basis() builds unless the caller raises the limit.
inline constexpr unsigned kDefaultMaxRank = 8;

/// 4^rank, the pattern length at the given rank.
std::size_t pattern_length(unsigned rank);

/// Rank n with 4^n == length, if there is one.
std::optional<unsigned> rank_for_length(std::size_t length);

/// Truth table of a Boolean function on `arity` input bits.
///
/// Entry x holds f(x), where the input bit vector is read as the integer x.
class TruthTable {
 public:
  TruthTable(unsigned arity, BitVector values);

  /// All-zero function of the given arity.
  explicit TruthTable(unsigned arity);

  unsigned arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return values_.size(); }

  bool operator()(std::uint64_t input) const { return values_.test(input); }
  bool operator()(const BitVector& input) const;
  void set(std::uint64_t input, bool value) { values_.set(input, value); }

  const BitVector& values() const noexcept { return values_; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  unsigned arity_;
  BitVector values_;
};

/**
 * Truth table of a function on 2n input bits, flattened to 4^n bits.
 *
 * Bit i is the function value on input i. Written MSB-first, so the pattern
 * "0001" is the function that is true only on input 00.
 */
class PatternVector {
 public:
  /// Throws SizeError unless bits.size() is 4^n for some n >= 1.
  explicit PatternVector(BitVector bits);

  /// Parses the MSB-first text form; separators ' ' and '_' are ignored.
  static PatternVector parse(std::string_view text);

  unsigned rank() const noexcept { return rank_; }
  unsigned arity() const noexcept { return 2 * rank_; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool at(std::size_t input) const { return bits_.test(input); }
  const BitVector& bits() const noexcept { return bits_; }

  /// Text form, grouped in fours once the length reaches 16.
  std::string to_string() const;

  friend bool operator==(const PatternVector& a, const PatternVector& b) {
    return a.bits_ == b.bits_;
  }

 private:
  BitVector bits_;
  unsigned rank_;
};

/// Ordered pairwise-orthogonal patterns of one rank.
class PatternBasis {
 public:
  PatternBasis(unsigned rank, std::vector<PatternVector> members);

  unsigned rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return members_.size(); }
  const PatternVector& member(std::size_t index) const { return members_.at(index); }
  std::span<const PatternVector> members() const& noexcept { return members_; }
  std::vector<PatternVector> members() && { return std::move(members_); }

 private:
  unsigned rank_;
  std::vector<PatternVector> members_;
};

/// Rank-1 basis; member j is the one-hot pattern with bit j set.
PatternBasis base_basis();

/// Next rank. Member a*4^n + j is p_j repeated in four blocks with block a
/// (counted from the right, i.e. inputs whose top two bits equal a) negated.
PatternBasis extend_basis(const PatternBasis& basis);

/// base_basis() extended rank-1 times.
PatternBasis basis(unsigned rank, unsigned max_rank = kDefaultMaxRank);

PatternVector pattern_of_function(const TruthTable& table);
TruthTable function_of_pattern(const PatternVector& pattern);

PatternVector negate(const PatternVector& p);

/// p xor q is all ones. Throws LengthMismatch on unequal lengths.
bool is_equivalent(const PatternVector& p, const PatternVector& q);

/// p and q differ in exactly half of their positions.
bool is_orthogonal(const PatternVector& p, const PatternVector& q);

/// min(#zeros, #ones) / length.
Ratio imbalance_ratio(const BitVector& bits);
inline Ratio imbalance_ratio(const PatternVector& p) { return imbalance_ratio(p.bits()); }

/// 1/2 - 1/2^(n+1), the ratio shared by every member of basis(n).
Ratio imbalance_closed_form(unsigned n);

/// The same ratio reached by iterating rho <- 1/4 + rho/2 from rho = 1/4.
Ratio imbalance_by_recurrence(unsigned n);

/// Where a pattern sits relative to a basis.
struct BasisMatch {
  std::size_t index;
  bool negated;  ///< the pattern is the negation of member `index`

  friend bool operator==(const BasisMatch&, const BasisMatch&) = default;
};

/// Index of p in b, or of its negation (flagged), or nothing.
std::optional<BasisMatch> index_of(const PatternVector& p, const PatternBasis& b);

/// Position of p (or its negation) in basis(p.rank()), found from the block
/// structure alone in O(length) without building the basis.
std::optional<BasisMatch> locate_in_hierarchy(const PatternVector& p);

/// Member `index` of basis(rank) without building the basis. Bit x is the
/// parity of the number of base-4 digits where x and index agree.
PatternVector hierarchy_member(unsigned rank, std::size_t index);

}  // namespace patternq
