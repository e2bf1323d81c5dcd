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

#include "patternq/verify.hpp"

#include <cmath>
#include <set>

#include "patternq/circuit.hpp"
#include "patternq/classifier.hpp"
#include "patternq/oracle.hpp"
#include "patternq/patterns.hpp"

namespace patternq {

namespace {

bool is_signed_basis_ket(const StateVector& s, std::uint64_t index) {
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    const double expected = i == index ? 1.0 : 0.0;
    if (std::abs(std::abs(s[i]) - expected) > kTolerance) return false;
  }
  return true;
}

StateVector negated(StateVector s) {
  for (double& a : s.amplitudes()) a = -a;
  return s;
}

void check_rank(unsigned n, std::vector<CheckResult>& out) {
  const PatternBasis b = basis(n, kDefaultMaxRank);
  const std::uint64_t count = b.size();
  const std::uint64_t pairs = count * (count - 1) / 2;

  {
    std::set<std::string> distinct;
    for (const auto& m : b.members()) distinct.insert(m.bits().to_string());
    out.push_back({"distinct members", n, distinct.size(), pattern_length(n)});
  }
  {
    CheckResult c{"orthogonality pairs", n, 0, pairs};
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) c.passed += is_orthogonal(b.member(i), b.member(j));
    }
    out.push_back(c);
  }
  {
    CheckResult c{"negation-free members", n, 0, pairs};
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        c.passed += !is_equivalent(b.member(i), b.member(j));
      }
    }
    out.push_back(c);
  }
  {
    const Ratio expected = imbalance_closed_form(n);
    CheckResult c{"imbalance ratio", n, 0, count};
    for (const auto& m : b.members()) {
      const bool ones_minority = m.bits().count() * 2 < m.size();
      c.passed += imbalance_ratio(m) == expected && ones_minority;
    }
    out.push_back(c);
  }
  {
    CheckResult c{"closed-form members", n, 0, count};
    for (std::size_t i = 0; i < count; ++i) c.passed += hierarchy_member(n, i) == b.member(i);
    out.push_back(c);
  }

  std::vector<ClassificationResult> results;
  results.reserve(count);
  for (const auto& m : b.members()) results.push_back(classify(m, {.keep_states = true}));

  {
    CheckResult c{"classify_exhaustive", n, 0, count};
    for (std::size_t i = 0; i < count; ++i) {
      c.passed += results[i].index == i && std::abs(results[i].probability - 1.0) <= kTolerance &&
                  !results[i].out_of_promise;
    }
    out.push_back(c);
  }
  {
    CheckResult c{"signed basis ket", n, 0, count};
    for (std::size_t i = 0; i < count; ++i) {
      const auto& r = results[i];
      c.passed += is_signed_basis_ket(*r.final_state, i) && is_dyadic(*r.oracle_state, n) &&
                  is_dyadic(*r.final_state, 0);
    }
    out.push_back(c);
  }
  {
    CheckResult c{"single query", n, 0, count};
    for (const auto& r : results) c.passed += r.queries_used == 1;
    out.push_back(c);
  }
  {
    CheckResult c{"negation symmetry", n, 0, count};
    for (std::size_t i = 0; i < count; ++i) {
      const auto flipped = classify(negate(b.member(i)), {.keep_states = true});
      c.passed += flipped.index == results[i].index && flipped.negated &&
                  max_abs_difference(*flipped.final_state, negated(*results[i].final_state)) <=
                      kTolerance;
    }
    out.push_back(c);
  }
  {
    CheckResult c{"post-oracle orthogonality", n, 0, pairs};
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        c.passed += std::abs(inner_product(*results[i].oracle_state, *results[j].oracle_state)) <=
                    kTolerance;
      }
    }
    out.push_back(c);
  }
  {
    CheckResult c{"faithful mode", n, 0, count};
    for (std::size_t i = 0; i < count; ++i) {
      const auto f = classify(b.member(i), {.keep_states = true, .faithful = true});
      c.passed += f.index == i && f.queries_used == 1 &&
                  max_abs_difference(*f.oracle_state, *results[i].oracle_state) <= kTolerance &&
                  max_abs_difference(*f.final_state, *results[i].final_state) <= kTolerance;
    }
    out.push_back(c);
  }
  {
    CheckResult c{"disambiguation", n, 0, 2 * count};
    for (const auto& m : b.members()) {
      const Oracle same(m);
      c.passed += disambiguate(same, m) == Interpretation::Original && same.query_count() == 1;
      const Oracle other(negate(m));
      c.passed += disambiguate(other, m) == Interpretation::Negation && other.query_count() == 1;
    }
    out.push_back(c);
  }
  {
    const DenseUnitary dense = classifier_matrix(n);
    const DenseUnitary gates = gate_sequence_matrix(n);
    out.push_back({"classifier orthogonality", n, dense.orthogonality_defect() <= kTolerance, 1});
    out.push_back({"classifier involution", n,
                   (dense * dense).max_abs_difference(DenseUnitary::identity(dense.dim())) <=
                       kTolerance,
                   1});
    out.push_back({"gates match dense matrix", n, gates.max_abs_difference(dense) <= kTolerance, 1});
  }
}

}  // namespace

std::vector<CheckResult> run_verification(unsigned rank_max, unsigned limit) {
  if (rank_max == 0 || rank_max > limit) {
    throw SizeError("rank-max " + std::to_string(rank_max) + " outside [1, " +
                    std::to_string(limit) + "]");
  }
  std::vector<CheckResult> out;
  {
    CheckResult c{"recurrence matches closed form", 0, 0, 16};
    for (unsigned k = 1; k <= 16; ++k) {
      c.passed += imbalance_by_recurrence(k) == imbalance_closed_form(k) &&
                  imbalance_closed_form(k) < Ratio(1, 2);
    }
    out.push_back(c);
  }
  for (unsigned n = 1; n <= rank_max; ++n) check_rank(n, out);
  return out;
}

}  // namespace patternq
