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
#include <vector>

#include "patternq/patterns.hpp"
#include "patternq/simulator.hpp"

namespace patternq {

/// Largest n for which classifier_matrix builds the dense 4^n x 4^n matrix.
inline constexpr unsigned kMaxDenseRank = 4;

/// Square real matrix, row-major. Used to check the gate-level classifier.
class DenseUnitary {
 public:
  explicit DenseUnitary(std::size_t dim) : dim_(dim), entries_(dim * dim, 0.0) {}

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  double& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

  static DenseUnitary identity(std::size_t dim);

  DenseUnitary operator*(const DenseUnitary& rhs) const;
  DenseUnitary transpose() const;

  /// Left operand indexes the high part of the row/column index.
  DenseUnitary kron(const DenseUnitary& rhs) const;

  /// Matrix-vector product on a state of matching dimension.
  StateVector apply(const StateVector& state) const;

  /// Largest |a_ij - b_ij|.
  double max_abs_difference(const DenseUnitary& other) const;

  /// Largest deviation of U^T U from the identity.
  double orthogonality_defect() const;

 private:
  std::size_t dim_;
  std::vector<double> entries_;
};

/// The 4x4 classifier kernel: -1/2 on the diagonal, +1/2 elsewhere.
DenseUnitary q2_matrix();

/// Q2 on qubits (low_qubit, low_qubit + 1): H H, Z Z, CZ, H H in that order.
void apply_q2_inplace(StateVector& state, unsigned low_qubit);
StateVector apply_q2(StateVector state, unsigned low_qubit);

/// Q2 tensored n times; the leftmost factor acts on the most significant pair.
DenseUnitary classifier_matrix(unsigned n, unsigned max_rank = kMaxDenseRank);

/// Q2 on each pair (2k, 2k+1), k < n. State must have exactly 2n qubits.
StateVector apply_classifier(StateVector state, unsigned n);

/// Q2 on pairs (2k, 2k+1) for k < n, leaving any higher qubits untouched.
void apply_classifier_pairs(StateVector& state, unsigned n);

/// Matrix of the 2n-qubit gate sequence, built column by column from basis states.
DenseUnitary gate_sequence_matrix(unsigned n);

}  // namespace patternq
