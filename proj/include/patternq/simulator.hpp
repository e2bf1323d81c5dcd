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
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "patternq/bit_vector.hpp"

namespace patternq {

/// Qubit index outside the register, or a repeated index where distinct ones are needed.
class QubitIndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr unsigned kMaxQubits = 24;
inline constexpr double kTolerance = 1e-12;

/**
 * Real-amplitude state of a qubit register.
 *
 * Basis index bit k is the value of qubit k (little-endian), so qubit 0 is
 * the least significant bit. Every gate in this library is real, so the
 * amplitudes are plain doubles.
 */
class StateVector {
 public:
  /// |0...0> on `qubits` qubits (1 <= qubits <= kMaxQubits).
  explicit StateVector(unsigned qubits);

  /// Takes the amplitudes as given; size must be a power of two >= 2.
  static StateVector from_amplitudes(std::vector<double> amplitudes);

  /// Unit vector at `index`.
  static StateVector basis_state(unsigned qubits, std::uint64_t index);

  unsigned qubits() const noexcept { return qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }

  double operator[](std::size_t index) const { return amplitudes_[index]; }
  double& operator[](std::size_t index) { return amplitudes_[index]; }
  std::span<const double> amplitudes() const noexcept { return amplitudes_; }
  std::span<double> amplitudes() noexcept { return amplitudes_; }

  double norm_squared() const noexcept;

  // In-place gates. The free functions below wrap these with value semantics.
  void h(unsigned qubit);
  void z(unsigned qubit);
  void cz(unsigned q1, unsigned q2);

  void check_qubit(unsigned qubit) const;

 private:
  StateVector(unsigned qubits, std::vector<double> amplitudes)
      : qubits_(qubits), amplitudes_(std::move(amplitudes)) {}

  unsigned qubits_;
  std::vector<double> amplitudes_;
};

StateVector zero_state(unsigned qubits);
StateVector apply_h(StateVector state, unsigned qubit);
StateVector apply_z(StateVector state, unsigned qubit);
StateVector apply_cz(StateVector state, unsigned q1, unsigned q2);

/// Sum of a_i * b_i. Throws LengthMismatch on different qubit counts.
double inner_product(const StateVector& a, const StateVector& b);

/// Largest max-norm difference between two states of the same size.
double max_abs_difference(const StateVector& a, const StateVector& b);

struct Outcome {
  std::uint64_t index;
  double probability;
};

/// Most probable basis index; ties go to the lowest index.
Outcome argmax_basis(const StateVector& state);

/// True when every amplitude times 2^k is an integer (within kTolerance).
bool is_dyadic(const StateVector& state, unsigned k);

/// Shot counts keyed by basis index.
struct Histogram {
  unsigned qubits = 0;
  std::uint64_t shots = 0;
  std::map<std::uint64_t, std::uint64_t> counts;

  /// Outcome key as a bit vector, written MSB-first with qubit 0 rightmost.
  BitVector outcome_bits(std::uint64_t index) const {
    return BitVector::from_integer(qubits, index);
  }
};

/// `shots` independent draws from |amplitude|^2, reproducible for a given seed.
Histogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

}  // namespace patternq
