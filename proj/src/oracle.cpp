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

#include "patternq/oracle.hpp"

#include <string>
#include <utility>

namespace patternq {

const char* to_string(Interpretation i) noexcept {
  return i == Interpretation::Original ? "original" : "negation";
}

void Oracle::apply_phase(StateVector& state) const {
  if (state.qubits() != arity()) {
    throw LengthMismatch("phase oracle of arity " + std::to_string(arity()) + " applied to " +
                         std::to_string(state.qubits()) + "-qubit state");
  }
  count_query();
  auto amps = state.amplitudes();
  for (std::size_t x = 0; x < amps.size(); ++x) {
    if (pattern_.at(x)) amps[x] = -amps[x];
  }
}

void Oracle::apply_xor(StateVector& state) const {
  if (state.qubits() != arity() + 1) {
    throw LengthMismatch("xor oracle of arity " + std::to_string(arity()) + " needs " +
                         std::to_string(arity() + 1) + " qubits, got " +
                         std::to_string(state.qubits()));
  }
  count_query();
  auto amps = state.amplitudes();
  const std::size_t output_bit = pattern_.size();
  for (std::size_t x = 0; x < output_bit; ++x) {
    if (pattern_.at(x)) std::swap(amps[x], amps[x | output_bit]);
  }
}

bool Oracle::evaluate(const BitVector& x) const {
  if (x.size() != arity()) {
    throw LengthMismatch("classical query of " + std::to_string(x.size()) +
                         " bits to a function of arity " + std::to_string(arity()));
  }
  count_query();
  return pattern_.at(x.to_integer());
}

StateVector apply_phase_oracle(const Oracle& o, StateVector state) {
  o.apply_phase(state);
  return state;
}

StateVector apply_xor_oracle(const Oracle& o, StateVector state) {
  o.apply_xor(state);
  return state;
}

bool classical_eval(const Oracle& o, const BitVector& x) { return o.evaluate(x); }

Interpretation disambiguate(const Oracle& o, const PatternVector& candidate) {
  const PatternVector& hidden = o.pattern();
  if (hidden.size() != candidate.size() ||
      !(hidden == candidate || is_equivalent(hidden, candidate))) {
    throw OutOfPromise("hidden function is neither " + candidate.to_string() +
                       " nor its negation");
  }
  const bool answer = o.evaluate(BitVector(o.arity()));
  return answer == candidate.at(0) ? Interpretation::Original : Interpretation::Negation;
}

}  // namespace patternq
