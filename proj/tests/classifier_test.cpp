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

#include <gtest/gtest.h>

#include <array>
#include <string>

#include "test_util.hpp"

namespace patternq {
namespace {

// Signs of the expected 16x16 Q4 matrix; every entry has magnitude 1/4.
constexpr std::array<const char*, 16> kExpectedQ4Signs = {
    "+----+++-+++-+++", "-+--+-+++-+++-++", "--+-++-+++-+++-+", "---++++-+++-+++-",
    "-++++----+++-+++", "+-++-+--+-+++-++", "++-+--+-++-+++-+", "+++----++++-+++-",
    "-+++-++++----+++", "+-+++-++-+--+-++", "++-+++-+--+-++-+", "+++-+++----++++-",
    "-+++-+++-++++---", "+-+++-+++-++-+--", "++-+++-+++-+--+-", "+++-+++-+++----+"};

// Reference kernel application written out as a 4x4 product on one pair.
StateVector reference_q2(const StateVector& s, unsigned low) {
  StateVector out = s;
  const std::size_t lo = std::size_t{1} << low, hi = lo << 1;
  for (std::size_t base = 0; base < s.dimension(); ++base) {
    if (base & (lo | hi)) continue;
    const std::size_t idx[4] = {base, base | lo, base | hi, base | lo | hi};
    for (int r = 0; r < 4; ++r) {
      double acc = 0.0;
      for (int c = 0; c < 4; ++c) acc += (r == c ? -0.5 : 0.5) * s[idx[c]];
      out[idx[r]] = acc;
    }
  }
  return out;
}

TEST(Q2Matrix, KnownEntries) {
  const DenseUnitary q = q2_matrix();
  ASSERT_EQ(q.dim(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(q(i, j), i == j ? -0.5 : 0.5);
  }
  EXPECT_EQ(q(0, 0), -0.5);
  EXPECT_EQ(q(2, 1), 0.5);
}

TEST(Q2Matrix, SquaresToIdentityAndRowsSumToOne) {
  const DenseUnitary q = q2_matrix();
  EXPECT_EQ((q * q).max_abs_difference(DenseUnitary::identity(4)), 0.0);
  for (std::size_t i = 0; i < 4; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < 4; ++j) row += q(i, j);
    EXPECT_EQ(row, 1.0);
  }
}

TEST(Q2Gates, ColumnExtractionMatchesMatrixExactly) {
  const DenseUnitary gates = gate_sequence_matrix(1);
  const DenseUnitary q = q2_matrix();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      // dyadic entries: exact after scaling by 2
      EXPECT_EQ(std::round(gates(i, j) * 2.0), q(i, j) * 2.0);
      EXPECT_NEAR(gates(i, j), q(i, j), kTolerance);
    }
  }
}

TEST(ApplyQ2, KnownClassificationColumns) {
  const StateVector f0 = StateVector::from_amplitudes({-0.5, 0.5, 0.5, 0.5});
  const StateVector f2 = StateVector::from_amplitudes({0.5, 0.5, -0.5, 0.5});
  EXPECT_LT(max_abs_difference(apply_q2(f0, 0), StateVector::basis_state(2, 0)), kTolerance);
  EXPECT_LT(max_abs_difference(apply_q2(f2, 0), StateVector::basis_state(2, 2)), kTolerance);
  EXPECT_THROW(apply_q2(f0, 1), QubitIndexError);
}

TEST(ApplyQ2, MatchesReferenceAndIsInvolution) {
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned q = 2 + testing::test_rng()() % 5;
    const unsigned low = testing::test_rng()() % (q - 1);
    const StateVector s = testing::random_state(q);
    EXPECT_LT(max_abs_difference(apply_q2(s, low), reference_q2(s, low)), kTolerance);
    EXPECT_LT(max_abs_difference(apply_q2(apply_q2(s, low), low), s), kTolerance);
  }
}

TEST(ClassifierMatrix, RankOneIsKernel) {
  EXPECT_EQ(classifier_matrix(1).max_abs_difference(q2_matrix()), 0.0);
}

TEST(ClassifierMatrix, RankTwoMatchesExpectedMatrix) {
  const DenseUnitary q4 = classifier_matrix(2);
  ASSERT_EQ(q4.dim(), 16u);
  EXPECT_EQ(q4(0, 0), 0.25);
  EXPECT_EQ(q4(0, 1), -0.25);
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = 0; j < 16; ++j) {
      const double expected = kExpectedQ4Signs[i][j] == '+' ? 0.25 : -0.25;
      ASSERT_EQ(q4(i, j), expected) << "(" << i << ", " << j << ")";
    }
  }
}

TEST(ClassifierMatrix, Guard) {
  EXPECT_THROW(classifier_matrix(0), SizeError);
  EXPECT_THROW(classifier_matrix(5), SizeError);
  EXPECT_NO_THROW(classifier_matrix(4));
}

TEST(ClassifierMatrix, OrthogonalAndInvolutive) {
  for (unsigned n = 1; n <= 3; ++n) {
    const DenseUnitary q = classifier_matrix(n);
    EXPECT_LE(q.orthogonality_defect(), kTolerance);
    EXPECT_LE((q * q).max_abs_difference(DenseUnitary::identity(q.dim())), kTolerance);
  }
}

TEST(ApplyClassifier, AgreesWithDenseMatrix) {
  for (unsigned n = 1; n <= 3; ++n) {
    const DenseUnitary dense = classifier_matrix(n);
    EXPECT_LE(gate_sequence_matrix(n).max_abs_difference(dense), kTolerance);
    for (int trial = 0; trial < 10; ++trial) {
      const StateVector s = testing::random_state(2 * n);
      EXPECT_LE(max_abs_difference(apply_classifier(s, n), dense.apply(s)), kTolerance);
    }
  }
}

TEST(ApplyClassifier, WorkedExamples) {
  const StateVector f3 = StateVector::from_amplitudes({0.5, 0.5, 0.5, -0.5});
  EXPECT_LT(max_abs_difference(apply_classifier(f3, 1), StateVector::basis_state(2, 3)),
            kTolerance);

  // post-oracle state of 1000 1000 1000 0111 on four qubits
  const std::string bits = "1000100010000111";
  std::vector<double> amps(16);
  for (std::size_t x = 0; x < 16; ++x) amps[x] = bits[15 - x] == '1' ? -0.25 : 0.25;
  const StateVector out = apply_classifier(StateVector::from_amplitudes(amps), 2);
  EXPECT_LT(max_abs_difference(out, StateVector::basis_state(4, 3)), kTolerance);

  EXPECT_THROW(apply_classifier(f3, 2), LengthMismatch);
}

TEST(ApplyClassifier, SelfInverseUpToRankFour) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const StateVector s = testing::random_state(2 * n);
      EXPECT_LT(max_abs_difference(apply_classifier(apply_classifier(s, n), n), s), kTolerance);
    }
  }
}

TEST(DenseUnitary, KronIndexesLeftFactorHigh) {
  DenseUnitary a(2), b(2);
  a(0, 1) = 1.0;  // |0><1| on the high factor
  b(1, 0) = 1.0;  // |1><0| on the low factor
  const DenseUnitary k = a.kron(b);
  // row (0,1) = 1, column (1,0) = 2
  EXPECT_EQ(k(1, 2), 1.0);
  double total = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) total += std::abs(k(i, j));
  }
  EXPECT_EQ(total, 1.0);
}

}  // namespace
}  // namespace patternq
