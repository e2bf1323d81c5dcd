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

#include "patternq/classifier.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "patternq/bit_vector.hpp"
#include "patternq/patterns.hpp"

namespace patternq {

DenseUnitary DenseUnitary::identity(std::size_t dim) {
  DenseUnitary m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DenseUnitary DenseUnitary::operator*(const DenseUnitary& rhs) const {
  if (dim_ != rhs.dim_) throw LengthMismatch("matrix product of mismatched dimensions");
  DenseUnitary out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const double a = (*this)(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

DenseUnitary DenseUnitary::transpose() const {
  DenseUnitary out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

DenseUnitary DenseUnitary::kron(const DenseUnitary& rhs) const {
  const std::size_t d = dim_ * rhs.dim_;
  DenseUnitary out(d);
  for (std::size_t i1 = 0; i1 < dim_; ++i1) {
    for (std::size_t j1 = 0; j1 < dim_; ++j1) {
      const double a = (*this)(i1, j1);
      for (std::size_t i2 = 0; i2 < rhs.dim_; ++i2) {
        for (std::size_t j2 = 0; j2 < rhs.dim_; ++j2) {
          out(i1 * rhs.dim_ + i2, j1 * rhs.dim_ + j2) = a * rhs(i2, j2);
        }
      }
    }
  }
  return out;
}

StateVector DenseUnitary::apply(const StateVector& state) const {
  if (state.dimension() != dim_) {
    throw LengthMismatch("matrix of dimension " + std::to_string(dim_) + " applied to state of " +
                         "dimension " + std::to_string(state.dimension()));
  }
  std::vector<double> out(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) acc += (*this)(i, j) * state[j];
    out[i] = acc;
  }
  return StateVector::from_amplitudes(std::move(out));
}

double DenseUnitary::max_abs_difference(const DenseUnitary& other) const {
  if (dim_ != other.dim_) throw LengthMismatch("comparing matrices of different dimensions");
  double worst = 0.0;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
  }
  return worst;
}

double DenseUnitary::orthogonality_defect() const {
  return (transpose() * *this).max_abs_difference(identity(dim_));
}

DenseUnitary q2_matrix() {
  DenseUnitary m(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = i == j ? -0.5 : 0.5;
  }
  return m;
}

void apply_q2_inplace(StateVector& state, unsigned low_qubit) {
  const unsigned high_qubit = low_qubit + 1;
  state.check_qubit(high_qubit);
  // (H x H) CZ (Z x Z) (H x H), rightmost factor first
  state.h(low_qubit);
  state.h(high_qubit);
  state.z(low_qubit);
  state.z(high_qubit);
  state.cz(low_qubit, high_qubit);
  state.h(low_qubit);
  state.h(high_qubit);
}

StateVector apply_q2(StateVector state, unsigned low_qubit) {
  apply_q2_inplace(state, low_qubit);
  return state;
}

DenseUnitary classifier_matrix(unsigned n, unsigned max_rank) {
  if (n == 0) throw SizeError("classifier_matrix: n must be at least 1");
  if (n > max_rank) {
    throw SizeError("classifier_matrix: n = " + std::to_string(n) + " exceeds the dense limit " +
                    std::to_string(max_rank));
  }
  DenseUnitary q = q2_matrix();
  DenseUnitary out = q;
  for (unsigned k = 1; k < n; ++k) out = q.kron(out);
  return out;
}

void apply_classifier_pairs(StateVector& state, unsigned n) {
  if (2 * n > state.qubits()) {
    throw QubitIndexError("classifier on " + std::to_string(n) + " pairs needs at least " +
                          std::to_string(2 * n) + " qubits");
  }
  for (unsigned k = 0; k < n; ++k) apply_q2_inplace(state, 2 * k);
}

StateVector apply_classifier(StateVector state, unsigned n) {
  if (n == 0) throw SizeError("apply_classifier: n must be at least 1");
  if (state.qubits() != 2 * n) {
    throw LengthMismatch("apply_classifier: " + std::to_string(n) + " pairs need " +
                         std::to_string(2 * n) + " qubits, state has " +
                         std::to_string(state.qubits()));
  }
  apply_classifier_pairs(state, n);
  return state;
}

DenseUnitary gate_sequence_matrix(unsigned n) {
  const std::size_t dim = pattern_length(n);
  DenseUnitary out(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const StateVector image = apply_classifier(StateVector::basis_state(2 * n, col), n);
    for (std::size_t row = 0; row < dim; ++row) out(row, col) = image[row];
  }
  return out;
}

}  // namespace patternq
