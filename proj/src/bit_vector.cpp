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

#include <algorithm>
#include <vector>

namespace patternq {

BitVector::BitVector(std::size_t length) : bits_(length) {
  if (length == 0) {
    throw std::invalid_argument("BitVector: length must be at least 1");
  }
}

BitVector BitVector::from_integer(std::size_t length, std::uint64_t value) {
  BitVector v(length);
  for (std::size_t i = 0; i < length && i < 64; ++i) {
    v.bits_[i] = ((value >> i) & 1u) != 0;
  }
  return v;
}

BitVector BitVector::parse(std::string_view text) {
  std::vector<bool> msb_first;
  msb_first.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '0': msb_first.push_back(false); break;
      case '1': msb_first.push_back(true); break;
      case ' ':
      case '_': break;
      default:
        throw ParseError("invalid character '" + std::string(1, c) + "' in bit string");
    }
  }
  if (msb_first.empty()) {
    throw ParseError("empty bit string");
  }
  BitVector v(msb_first.size());
  const std::size_t n = msb_first.size();
  for (std::size_t i = 0; i < n; ++i) {
    v.bits_[n - 1 - i] = msb_first[i];
  }
  return v;
}

bool BitVector::test(std::size_t position) const {
  if (position >= size()) {
    throw std::out_of_range("BitVector: position " + std::to_string(position) +
                            " out of range for length " + std::to_string(size()));
  }
  return bits_[position];
}

void BitVector::set(std::size_t position, bool value) {
  if (position >= size()) {
    throw std::out_of_range("BitVector: position " + std::to_string(position) +
                            " out of range for length " + std::to_string(size()));
  }
  bits_[position] = value;
}

std::uint64_t BitVector::to_integer() const {
  if (size() > 64) {
    throw std::overflow_error("BitVector: too long to convert to a 64-bit integer");
  }
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (bits_[i]) value |= std::uint64_t{1} << i;
  }
  return value;
}

std::string BitVector::to_string(bool grouped) const {
  std::string out;
  const std::size_t n = size();
  out.reserve(grouped ? n + n / 4 : n);
  for (std::size_t k = 0; k < n; ++k) {
    if (grouped && k > 0 && (n - k) % 4 == 0) out.push_back(' ');
    out.push_back(bits_[n - 1 - k] ? '1' : '0');
  }
  return out;
}

void BitVector::require_same_length(const BitVector& other, const char* op) const {
  if (size() != other.size()) {
    throw LengthMismatch(std::string("BitVector ") + op + ": lengths " + std::to_string(size()) +
                         " and " + std::to_string(other.size()) + " differ");
  }
}

BitVector BitVector::operator~() const { return BitVector(~bits_); }

BitVector BitVector::operator^(const BitVector& other) const {
  require_same_length(other, "xor");
  return BitVector(bits_ ^ other.bits_);
}

BitVector BitVector::operator&(const BitVector& other) const {
  require_same_length(other, "and");
  return BitVector(bits_ & other.bits_);
}

BitVector BitVector::operator|(const BitVector& other) const {
  require_same_length(other, "or");
  return BitVector(bits_ | other.bits_);
}

std::size_t BitVector::hamming_distance(const BitVector& other) const {
  require_same_length(other, "hamming_distance");
  return (bits_ ^ other.bits_).count();
}

BitVector BitVector::concat_msb_first(std::initializer_list<BitVector> parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  Storage out(total);
  std::size_t offset = total;
  for (const auto& p : parts) {
    offset -= p.size();
    for (std::size_t i = 0; i < p.size(); ++i) out[offset + i] = p.bits_[i];
  }
  return BitVector(std::move(out));
}

bool operator<(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // compare MSB-first so ordering matches the numeric order of the text form
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a.bits_[k] != b.bits_[k]) return b.bits_[k];
  }
  return false;
}

}  // namespace patternq
