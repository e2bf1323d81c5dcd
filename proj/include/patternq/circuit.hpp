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

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "patternq/bit_vector.hpp"
#include "patternq/oracle.hpp"
#include "patternq/patterns.hpp"
#include "patternq/simulator.hpp"

namespace patternq {

struct HadamardWall {
  friend bool operator==(const HadamardWall&, const HadamardWall&) = default;
};
struct OracleStep {
  PatternVector pattern;
  friend bool operator==(const OracleStep&, const OracleStep&) = default;
};
struct ClassifierStep {
  friend bool operator==(const ClassifierStep&, const ClassifierStep&) = default;
};
struct MeasureAll {
  friend bool operator==(const MeasureAll&, const MeasureAll&) = default;
};

using CircuitStep = std::variant<HadamardWall, OracleStep, ClassifierStep, MeasureAll>;

/// The four-stage classification circuit for one hidden pattern.
struct CircuitSpec {
  unsigned rank = 0;
  std::vector<CircuitStep> steps;

  unsigned input_qubits() const noexcept { return 2 * rank; }
  const PatternVector& hidden() const;
};

/// Hadamard wall, oracle, classifier, measurement. Throws LengthMismatch
/// unless hidden.size() == 4^n.
CircuitSpec build_circuit(unsigned n, const PatternVector& hidden);

struct RunOptions {
  /// Keep the post-oracle and pre-measurement input-register states.
  bool keep_states = false;
  /// Materialize the |-> output register and use the XOR oracle.
  bool faithful = false;
};

struct ClassificationResult {
  std::uint64_t index = 0;
  BitVector bits{1};  ///< index in binary, qubit 0 rightmost
  double probability = 0.0;
  std::uint64_t queries_used = 0;
  std::optional<StateVector> oracle_state;  ///< input register right after the oracle
  std::optional<StateVector> final_state;   ///< input register before measurement

  // Filled by classify(): relation of the hidden pattern to the hierarchy.
  bool out_of_promise = false;
  bool negated = false;
};

/// Simulates the circuit; the oracle is built from the circuit's hidden pattern.
ClassificationResult run(const CircuitSpec& c, const RunOptions& options = {});

/// Runs the circuit against an existing oracle, so its query counter sees the call.
ClassificationResult run_with_oracle(unsigned n, const Oracle& oracle,
                                     const RunOptions& options = {});

/**
 * Classifies a pattern of length 4^n.
 *
 * In-promise patterns (basis members or their negations) land on their basis
 * index with probability 1. Anything else is reported with its most likely
 * outcome and `out_of_promise` set; this is not an error.
 */
ClassificationResult classify(const PatternVector& hidden, const RunOptions& options = {});

/// Classifies every member of basis(n); result i belongs to member i.
std::vector<ClassificationResult> classify_exhaustive(unsigned n, unsigned max_rank = 4,
                                                      const RunOptions& options = {});

enum class Player { Alice, Bob };
const char* to_string(Player p) noexcept;

struct GameTranscript {
  unsigned rank = 0;
  std::uint64_t seed = 0;
  std::uint64_t bob_index = 0;
  bool bob_negated = false;
  std::uint64_t alice_index = 0;
  bool alice_negated = false;
  bool disambiguation_used = false;
  std::uint64_t queries = 0;
  Player winner = Player::Bob;
};

struct GameOptions {
  bool allow_negation = false;
  /// Overrides Bob's random draw of the member index.
  std::optional<std::uint64_t> forced_index;
  unsigned max_rank = 4;
};

/// One round: Bob hides a seeded random basis member (negated at random when
/// allowed); Alice answers with one quantum query, plus one classical query to
/// settle the negation when negation is allowed.
GameTranscript play_game(unsigned n, std::uint64_t seed, const GameOptions& options = {});

/// Line-oriented circuit listing: `h qI`, `z qI`, `cz qI qJ`, `oracle <bits>`, `measure`.
std::string export_text(const CircuitSpec& c);

}  // namespace patternq
