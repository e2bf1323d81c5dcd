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

#include <atomic>
#include <cstdint>
#include <stdexcept>

#include "patternq/bit_vector.hpp"
#include "patternq/patterns.hpp"
#include "patternq/simulator.hpp"

namespace patternq {

/// The hidden function is neither the candidate nor its negation.
class OutOfPromise : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Interpretation { Original, Negation };

const char* to_string(Interpretation i) noexcept;

/**
 * Black-box access to a hidden Boolean function given by its pattern.
 *
 * Every quantum application and every classical evaluation counts as one
 * query. The counter is atomic so an oracle may be shared between threads.
 */
class Oracle {
 public:
  explicit Oracle(PatternVector pattern) : pattern_(std::move(pattern)) {}

  Oracle(const Oracle& other) : pattern_(other.pattern_), queries_(other.query_count()) {}
  Oracle& operator=(const Oracle&) = delete;

  const PatternVector& pattern() const noexcept { return pattern_; }
  unsigned arity() const noexcept { return pattern_.arity(); }
  std::uint64_t query_count() const noexcept { return queries_.load(std::memory_order_relaxed); }

  /// amplitude[x] *= (-1)^f(x) on a register of exactly arity() qubits.
  void apply_phase(StateVector& state) const;

  /// |y>|x> -> |y xor f(x)>|x> on arity() + 1 qubits; y is the highest qubit.
  void apply_xor(StateVector& state) const;

  /// f(x) for a classical input of arity() bits.
  bool evaluate(const BitVector& x) const;

 private:
  void count_query() const noexcept { queries_.fetch_add(1, std::memory_order_relaxed); }

  PatternVector pattern_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

StateVector apply_phase_oracle(const Oracle& o, StateVector state);
StateVector apply_xor_oracle(const Oracle& o, StateVector state);
bool classical_eval(const Oracle& o, const BitVector& x);

/// Decides with one classical query at x = 0...0 whether the hidden function
/// is `candidate` or its negation. Throws OutOfPromise if it is neither.
Interpretation disambiguate(const Oracle& o, const PatternVector& candidate);

}  // namespace patternq
