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

#include "patternq/simulator.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace patternq {

StateVector::StateVector(unsigned qubits) : qubits_(qubits) {
  if (qubits == 0 || qubits > kMaxQubits) {
    throw QubitIndexError("qubit count " + std::to_string(qubits) + " outside [1, " +
                          std::to_string(kMaxQubits) + "]");
  }
  amplitudes_.assign(std::size_t{1} << qubits, 0.0);
  amplitudes_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<double> amplitudes) {
  const std::size_t n = amplitudes.size();
  if (n < 2 || !std::has_single_bit(n)) {
    throw std::invalid_argument("amplitude count " + std::to_string(n) +
                                " is not a power of two >= 2");
  }
  const auto qubits = static_cast<unsigned>(std::countr_zero(n));
  if (qubits > kMaxQubits) {
    throw QubitIndexError("state of " + std::to_string(qubits) + " qubits exceeds the limit");
  }
  return StateVector(qubits, std::move(amplitudes));
}

StateVector StateVector::basis_state(unsigned qubits, std::uint64_t index) {
  StateVector s(qubits);
  if (index >= s.dimension()) {
    throw QubitIndexError("basis index " + std::to_string(index) + " out of range");
  }
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

double StateVector::norm_squared() const noexcept {
  double total = 0.0;
  for (double a : amplitudes_) total += a * a;
  return total;
}

void StateVector::check_qubit(unsigned qubit) const {
  if (qubit >= qubits_) {
    throw QubitIndexError("qubit " + std::to_string(qubit) + " out of range for " +
                          std::to_string(qubits_) + "-qubit state");
  }
}

void StateVector::h(unsigned qubit) {
  check_qubit(qubit);
  const std::size_t stride = std::size_t{1} << qubit;
  const double s = std::numbers::sqrt2 / 2.0;
  for (std::size_t base = 0; base < amplitudes_.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const double a0 = amplitudes_[i];
      const double a1 = amplitudes_[i + stride];
      amplitudes_[i] = s * (a0 + a1);
      amplitudes_[i + stride] = s * (a0 - a1);
    }
  }
}

void StateVector::z(unsigned qubit) {
  check_qubit(qubit);
  const std::size_t mask = std::size_t{1} << qubit;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & mask) amplitudes_[i] = -amplitudes_[i];
  }
}

void StateVector::cz(unsigned q1, unsigned q2) {
  check_qubit(q1);
  check_qubit(q2);
  if (q1 == q2) throw QubitIndexError("cz needs two distinct qubits");
  const std::size_t mask = (std::size_t{1} << q1) | (std::size_t{1} << q2);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & mask) == mask) amplitudes_[i] = -amplitudes_[i];
  }
}

StateVector zero_state(unsigned qubits) { return StateVector(qubits); }

StateVector apply_h(StateVector state, unsigned qubit) {
  state.h(qubit);
  return state;
}

StateVector apply_z(StateVector state, unsigned qubit) {
  state.z(qubit);
  return state;
}

StateVector apply_cz(StateVector state, unsigned q1, unsigned q2) {
  state.cz(q1, q2);
  return state;
}

namespace {

void require_same_size(const StateVector& a, const StateVector& b) {
  if (a.qubits() != b.qubits()) {
    throw LengthMismatch("states have " + std::to_string(a.qubits()) + " and " +
                         std::to_string(b.qubits()) + " qubits");
  }
}

}  // namespace

double inner_product(const StateVector& a, const StateVector& b) {
  require_same_size(a, b);
  double total = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) total += a[i] * b[i];
  return total;
}

double max_abs_difference(const StateVector& a, const StateVector& b) {
  require_same_size(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

Outcome argmax_basis(const StateVector& state) {
  Outcome best{0, state[0] * state[0]};
  for (std::size_t i = 1; i < state.dimension(); ++i) {
    const double p = state[i] * state[i];
    if (p > best.probability) best = {i, p};
  }
  return best;
}

bool is_dyadic(const StateVector& state, unsigned k) {
  const double scale = std::ldexp(1.0, static_cast<int>(k));
  for (double a : state.amplitudes()) {
    const double scaled = a * scale;
    if (std::abs(scaled - std::round(scaled)) > kTolerance) return false;
  }
  return true;
}

Histogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("sample: shots must be at least 1");
  std::vector<double> weights(state.dimension());
  for (std::size_t i = 0; i < weights.size(); ++i) weights[i] = state[i] * state[i];

  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::uint64_t> pick(weights.begin(), weights.end());
  Histogram h;
  h.qubits = state.qubits();
  h.shots = shots;
  for (std::uint64_t s = 0; s < shots; ++s) ++h.counts[pick(rng)];
  return h;
}

}  // namespace patternq
