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

#include "patternq/patterns.hpp"

#include <utility>

namespace patternq {

std::string to_string(const Ratio& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::size_t pattern_length(unsigned rank) {
  if (rank == 0 || rank > 31) {
    throw SizeError("rank " + std::to_string(rank) + " out of range");
  }
  return std::size_t{1} << (2 * rank);
}

std::optional<unsigned> rank_for_length(std::size_t length) {
  for (unsigned n = 1; n < 32; ++n) {
    const std::size_t len = std::size_t{1} << (2 * n);
    if (len == length) return n;
    if (len > length) break;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// TruthTable

namespace {

std::size_t table_size(unsigned arity) {
  if (arity >= 63) throw SizeError("arity " + std::to_string(arity) + " too large");
  return std::size_t{1} << arity;
}

}  // namespace

TruthTable::TruthTable(unsigned arity, BitVector values)
    : arity_(arity), values_(std::move(values)) {
  if (values_.size() != table_size(arity)) {
    throw LengthMismatch("truth table of arity " + std::to_string(arity) + " needs " +
                         std::to_string(table_size(arity)) + " entries, got " +
                         std::to_string(values_.size()));
  }
}

TruthTable::TruthTable(unsigned arity) : TruthTable(arity, BitVector(table_size(arity))) {}

bool TruthTable::operator()(const BitVector& input) const {
  if (input.size() != arity_) {
    throw LengthMismatch("input has " + std::to_string(input.size()) + " bits, function takes " +
                         std::to_string(arity_));
  }
  return values_.test(input.to_integer());
}

// ---------------------------------------------------------------------------
// PatternVector

namespace {

unsigned checked_rank(const BitVector& bits) {
  auto rank = rank_for_length(bits.size());
  if (!rank) {
    throw SizeError("pattern length " + std::to_string(bits.size()) +
                    " is not a power of 4 (>= 4)");
  }
  return *rank;
}

}  // namespace

PatternVector::PatternVector(BitVector bits) : bits_(std::move(bits)), rank_(checked_rank(bits_)) {}

PatternVector PatternVector::parse(std::string_view text) {
  return PatternVector(BitVector::parse(text));
}

std::string PatternVector::to_string() const { return bits_.to_string(size() >= 16); }

// ---------------------------------------------------------------------------
// PatternBasis

PatternBasis::PatternBasis(unsigned rank, std::vector<PatternVector> members)
    : rank_(rank), members_(std::move(members)) {
  const std::size_t len = pattern_length(rank);
  if (members_.size() != len) {
    throw SizeError("basis of rank " + std::to_string(rank) + " needs " + std::to_string(len) +
                    " members, got " + std::to_string(members_.size()));
  }
  for (const auto& m : members_) {
    if (m.rank() != rank) {
      throw LengthMismatch("basis member of rank " + std::to_string(m.rank()) +
                           " in basis of rank " + std::to_string(rank));
    }
  }
}

PatternBasis base_basis() {
  std::vector<PatternVector> members;
  members.reserve(4);
  for (std::uint64_t j = 0; j < 4; ++j) {
    members.emplace_back(BitVector::from_integer(4, std::uint64_t{1} << j));
  }
  return PatternBasis(1, std::move(members));
}

PatternBasis extend_basis(const PatternBasis& basis) {
  const std::size_t previous = basis.size();
  std::vector<PatternVector> members;
  members.reserve(4 * previous);
  for (unsigned a = 0; a < 4; ++a) {
    for (std::size_t j = 0; j < previous; ++j) {
      const BitVector& p = basis.member(j).bits();
      const BitVector q = ~p;
      // blocks listed MSB-first: block3 block2 block1 block0
      BitVector joined = BitVector::concat_msb_first({a == 3 ? q : p, a == 2 ? q : p,
                                                      a == 1 ? q : p, a == 0 ? q : p});
      members.emplace_back(std::move(joined));
    }
  }
  return PatternBasis(basis.rank() + 1, std::move(members));
}

PatternBasis basis(unsigned rank, unsigned max_rank) {
  if (rank == 0) throw SizeError("rank must be at least 1");
  if (rank > max_rank) {
    throw SizeError("rank " + std::to_string(rank) + " exceeds the limit " +
                    std::to_string(max_rank));
  }
  PatternBasis b = base_basis();
  for (unsigned n = 1; n < rank; ++n) b = extend_basis(b);
  return b;
}

// ---------------------------------------------------------------------------
// Duality and pattern relations

PatternVector pattern_of_function(const TruthTable& table) {
  if (table.arity() == 0 || table.arity() % 2 != 0) {
    throw SizeError("pattern vectors need an even, nonzero arity; got " +
                    std::to_string(table.arity()));
  }
  return PatternVector(table.values());
}

TruthTable function_of_pattern(const PatternVector& pattern) {
  return TruthTable(pattern.arity(), pattern.bits());
}

PatternVector negate(const PatternVector& p) { return PatternVector(~p.bits()); }

bool is_equivalent(const PatternVector& p, const PatternVector& q) {
  return (p.bits() ^ q.bits()).all();
}

bool is_orthogonal(const PatternVector& p, const PatternVector& q) {
  return p.bits().hamming_distance(q.bits()) * 2 == p.size();
}

Ratio imbalance_ratio(const BitVector& bits) {
  const auto ones = static_cast<std::int64_t>(bits.count());
  const auto length = static_cast<std::int64_t>(bits.size());
  return Ratio(std::min(ones, length - ones), length);
}

Ratio imbalance_closed_form(unsigned n) {
  if (n == 0) throw SizeError("imbalance_closed_form: n must be at least 1");
  if (n > 61) throw SizeError("imbalance_closed_form: n too large for exact 64-bit ratios");
  return Ratio(1, 2) - Ratio(1, std::int64_t{1} << (n + 1));
}

Ratio imbalance_by_recurrence(unsigned n) {
  if (n == 0) throw SizeError("imbalance_by_recurrence: n must be at least 1");
  if (n > 61) throw SizeError("imbalance_by_recurrence: n too large for exact 64-bit ratios");
  Ratio rho(1, 4);
  for (unsigned k = 2; k <= n; ++k) rho = Ratio(1, 4) + Ratio(1, 2) * rho;
  return rho;
}

namespace {

// Peels one level of the block structure per iteration: three equal blocks
// and one complemented block at position a give base-4 digit a.
std::optional<BasisMatch> decode_hierarchy(const BitVector& bits) {
  const std::size_t length = bits.size();
  auto block = [&bits](std::size_t offset, std::size_t width) {
    BitVector out(width);
    for (std::size_t i = 0; i < width; ++i) out.set(i, bits.test(offset + i));
    return out;
  };

  if (length == 4) {
    const std::size_t ones = bits.count();
    if (ones != 1 && ones != 3) return std::nullopt;
    const bool negated = ones == 3;
    for (std::size_t j = 0; j < 4; ++j) {
      if (bits.test(j) != negated) return BasisMatch{j, negated};
    }
    return std::nullopt;
  }

  const std::size_t width = length / 4;
  const BitVector b0 = block(0, width), b1 = block(width, width), b2 = block(2 * width, width),
                  b3 = block(3 * width, width);
  const BitVector* blocks[4] = {&b0, &b1, &b2, &b3};
  // the majority block is whichever of b0/b1 agrees with some other block
  const BitVector& common = (b0 == b1 || b0 == b2 || b0 == b3) ? b0 : b1;
  const BitVector flipped = ~common;
  std::optional<std::size_t> odd;
  for (std::size_t a = 0; a < 4; ++a) {
    if (*blocks[a] == common) continue;
    if (*blocks[a] != flipped || odd) return std::nullopt;
    odd = a;
  }
  if (!odd) return std::nullopt;
  auto inner = decode_hierarchy(common);
  if (!inner) return std::nullopt;
  return BasisMatch{*odd * width + inner->index, inner->negated};
}

}  // namespace

std::optional<BasisMatch> locate_in_hierarchy(const PatternVector& p) {
  return decode_hierarchy(p.bits());
}

PatternVector hierarchy_member(unsigned rank, std::size_t index) {
  const std::size_t length = pattern_length(rank);
  if (index >= length) {
    throw std::out_of_range("member index " + std::to_string(index) + " out of range for rank " +
                            std::to_string(rank));
  }
  BitVector bits(length);
  for (std::size_t x = 0; x < length; ++x) {
    bool value = false;
    for (unsigned k = 0; k < rank; ++k) {
      value ^= ((x >> (2 * k)) & 3u) == ((index >> (2 * k)) & 3u);
    }
    bits.set(x, value);
  }
  return PatternVector(std::move(bits));
}

std::optional<BasisMatch> index_of(const PatternVector& p, const PatternBasis& b) {
  if (p.size() != b.member(0).size()) {
    throw LengthMismatch("pattern of length " + std::to_string(p.size()) +
                         " checked against basis with members of length " +
                         std::to_string(b.member(0).size()));
  }
  if (auto match = decode_hierarchy(p.bits()); match && match->index < b.size()) {
    const PatternVector& m = b.member(match->index);
    if (match->negated ? is_equivalent(m, p) : m == p) return match;
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    const PatternVector& m = b.member(i);
    if (m == p) return BasisMatch{i, false};
    if (is_equivalent(m, p)) return BasisMatch{i, true};
  }
  return std::nullopt;
}

}  // namespace patternq
