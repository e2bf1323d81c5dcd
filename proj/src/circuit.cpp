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

#include "patternq/circuit.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "patternq/classifier.hpp"

namespace patternq {

const PatternVector& CircuitSpec::hidden() const {
  for (const auto& step : steps) {
    if (const auto* o = std::get_if<OracleStep>(&step)) return o->pattern;
  }
  throw std::logic_error("circuit has no oracle step");
}

CircuitSpec build_circuit(unsigned n, const PatternVector& hidden) {
  if (n == 0) throw SizeError("build_circuit: rank must be at least 1");
  if (hidden.rank() != n) {
    throw LengthMismatch("build_circuit: rank " + std::to_string(n) + " needs a pattern of " +
                         std::to_string(pattern_length(n)) + " bits, got " +
                         std::to_string(hidden.size()));
  }
  CircuitSpec c;
  c.rank = n;
  c.steps = {HadamardWall{}, OracleStep{hidden}, ClassifierStep{}, MeasureAll{}};
  return c;
}

namespace {

void validate(const CircuitSpec& c) {
  const bool canonical = c.steps.size() == 4 && std::holds_alternative<HadamardWall>(c.steps[0]) &&
                         std::holds_alternative<OracleStep>(c.steps[1]) &&
                         std::holds_alternative<ClassifierStep>(c.steps[2]) &&
                         std::holds_alternative<MeasureAll>(c.steps[3]);
  if (!canonical) {
    throw std::invalid_argument("circuit steps must be: hadamard wall, oracle, classifier, measure");
  }
  if (c.hidden().rank() != c.rank) throw LengthMismatch("oracle pattern does not match rank");
}

// Input-register amplitudes of a state psi (x) |->, with |-> on the top qubit.
StateVector drop_minus_register(const StateVector& full) {
  const std::size_t half = full.dimension() / 2;
  std::vector<double> input(half);
  for (std::size_t x = 0; x < half; ++x) {
    const double low = full[x];
    const double high = full[x + half];
    if (std::abs(low + high) > kTolerance) {
      throw std::logic_error("output register is no longer in the |-> state");
    }
    input[x] = (low - high) / std::numbers::sqrt2;
  }
  return StateVector::from_amplitudes(std::move(input));
}

}  // namespace

ClassificationResult run_with_oracle(unsigned n, const Oracle& oracle, const RunOptions& options) {
  if (oracle.arity() != 2 * n) {
    throw LengthMismatch("oracle arity " + std::to_string(oracle.arity()) + " does not match " +
                         std::to_string(2 * n) + " input qubits");
  }
  const std::uint64_t queries_before = oracle.query_count();
  const unsigned inputs = 2 * n;

  ClassificationResult result;
  StateVector input_state(inputs);

  if (options.faithful) {
    // output register prepared as |1>, then H gives |->
    StateVector state = StateVector::basis_state(inputs + 1, std::uint64_t{1} << inputs);
    for (unsigned q = 0; q <= inputs; ++q) state.h(q);
    oracle.apply_xor(state);
    if (options.keep_states) result.oracle_state = drop_minus_register(state);
    apply_classifier_pairs(state, n);
    input_state = drop_minus_register(state);
  } else {
    StateVector state(inputs);
    for (unsigned q = 0; q < inputs; ++q) state.h(q);
    oracle.apply_phase(state);
    if (options.keep_states) result.oracle_state = state;
    apply_classifier_pairs(state, n);
    input_state = std::move(state);
  }

  const Outcome outcome = argmax_basis(input_state);
  result.index = outcome.index;
  result.bits = BitVector::from_integer(inputs, outcome.index);
  result.probability = outcome.probability;
  result.queries_used = oracle.query_count() - queries_before;
  if (options.keep_states) result.final_state = std::move(input_state);
  return result;
}

ClassificationResult run(const CircuitSpec& c, const RunOptions& options) {
  validate(c);
  const Oracle oracle(c.hidden());
  return run_with_oracle(c.rank, oracle, options);
}

ClassificationResult classify(const PatternVector& hidden, const RunOptions& options) {
  ClassificationResult result = run(build_circuit(hidden.rank(), hidden), options);
  const auto match = locate_in_hierarchy(hidden);
  if (match && match->index != result.index) {
    throw std::logic_error("pattern " + hidden.to_string() + " is basis member " +
                           std::to_string(match->index) + " but classified as " +
                           std::to_string(result.index));
  }
  result.negated = match && match->negated;
  result.out_of_promise = !match || result.probability < 1.0 - kTolerance;
  return result;
}

std::vector<ClassificationResult> classify_exhaustive(unsigned n, unsigned max_rank,
                                                      const RunOptions& options) {
  const PatternBasis b = basis(n, max_rank);
  std::vector<ClassificationResult> results;
  results.reserve(b.size());
  for (const auto& member : b.members()) results.push_back(classify(member, options));
  return results;
}

const char* to_string(Player p) noexcept { return p == Player::Alice ? "Alice" : "Bob"; }

GameTranscript play_game(unsigned n, std::uint64_t seed, const GameOptions& options) {
  if (n == 0 || n > options.max_rank) {
    throw SizeError("game rank " + std::to_string(n) + " outside [1, " +
                    std::to_string(options.max_rank) + "]");
  }
  const std::size_t members = pattern_length(n);
  std::mt19937_64 rng(seed);

  GameTranscript t;
  t.rank = n;
  t.seed = seed;
  // 2^64 is a multiple of 4^n, so the modulus is unbiased
  t.bob_index = rng() % members;
  if (options.forced_index) {
    if (*options.forced_index >= members) {
      throw std::out_of_range("forced index " + std::to_string(*options.forced_index) +
                              " out of range for rank " + std::to_string(n));
    }
    t.bob_index = *options.forced_index;
  }
  t.bob_negated = options.allow_negation && (rng() & 1u) != 0;

  PatternVector hidden = hierarchy_member(n, t.bob_index);
  if (t.bob_negated) hidden = negate(hidden);
  const Oracle oracle(std::move(hidden));

  // Alice sees only the oracle.
  const ClassificationResult answer = run_with_oracle(n, oracle);
  t.alice_index = answer.index;
  if (options.allow_negation) {
    t.alice_negated =
        disambiguate(oracle, hierarchy_member(n, t.alice_index)) == Interpretation::Negation;
    t.disambiguation_used = true;
  }
  t.queries = oracle.query_count();
  t.winner = (t.alice_index == t.bob_index && t.alice_negated == t.bob_negated) ? Player::Alice
                                                                                 : Player::Bob;
  return t;
}

std::string export_text(const CircuitSpec& c) {
  validate(c);
  const unsigned inputs = c.input_qubits();
  std::ostringstream out;
  out << "# classification circuit, rank " << c.rank << ", " << inputs << " qubits\n";
  out << "# qubit 0 is the least significant bit\n";
  for (const auto& step : c.steps) {
    if (std::holds_alternative<HadamardWall>(step)) {
      for (unsigned q = 0; q < inputs; ++q) out << "h q" << q << '\n';
    } else if (const auto* o = std::get_if<OracleStep>(&step)) {
      out << "oracle " << o->pattern.bits().to_string() << '\n';
    } else if (std::holds_alternative<ClassifierStep>(step)) {
      for (unsigned k = 0; k < c.rank; ++k) {
        const unsigned lo = 2 * k, hi = 2 * k + 1;
        out << "h q" << lo << "\nh q" << hi << '\n';
        out << "z q" << lo << "\nz q" << hi << '\n';
        out << "cz q" << lo << " q" << hi << '\n';
        out << "h q" << lo << "\nh q" << hi << '\n';
      }
    } else {
      out << "measure\n";
    }
  }
  return out.str();
}

}  // namespace patternq
