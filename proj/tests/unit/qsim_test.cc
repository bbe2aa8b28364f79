// Copyright 2026 The peglab Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "peglab/errors.h"
#include "peglab/qsim.h"

namespace peglab {
namespace {

RegisterLayout reg(size_t n) { return RegisterLayout::single("A", n); }

TEST(Qsim, QubitZeroIsMostSignificant) {
  const PureState s = PureState::basis(reg(3), BitVec::from_string("100"));
  EXPECT_NEAR(std::abs(s.amplitudes()[4]), 1.0, 1e-15);
  const PureState flipped = apply_unitary_qubits(s, gates::x(), {2});
  EXPECT_NEAR(std::abs(flipped.amplitudes()[5]), 1.0, 1e-15);
}

TEST(Qsim, TraceDistanceZeroPlus) {
  const PureState zero = PureState::zero(reg(1));
  const PureState plus = apply_unitary(zero, gates::h(), {"A"});
  EXPECT_NEAR(trace_distance(DensityMatrix::from_pure(zero), DensityMatrix::from_pure(plus)), std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(overlap(zero, plus), 0.5, 1e-12);
  EXPECT_NEAR(trace_distance(DensityMatrix::from_pure(plus), DensityMatrix::from_pure(plus)), 0, 1e-12);
}

TEST(Qsim, BellStateReducesToMaximallyMixed) {
  const RegisterLayout layout({{"A", 1}, {"B", 1}});
  PureState bell = apply_unitary(PureState::zero(layout), gates::h(), {"A"});
  bell = apply_unitary(bell, gates::cnot(), {"A", "B"});
  const DensityMatrix a = partial_trace(bell, {"A"});
  EXPECT_NEAR(a.entries()(0, 0).real(), 0.5, 1e-12);
  EXPECT_NEAR(a.entries()(1, 1).real(), 0.5, 1e-12);
  EXPECT_NEAR(std::abs(a.entries()(0, 1)), 0.0, 1e-12);
  EXPECT_NEAR(a.purity(), 0.5, 1e-12);
  EXPECT_NEAR(DensityMatrix::from_pure(bell).purity(), 1.0, 1e-12);
}

TEST(Qsim, PartialTraceOfProductState) {
  const RegisterLayout layout({{"A", 1}, {"B", 2}});
  PureState psi = PureState::basis(layout, BitVec::from_string("010"));
  psi = apply_unitary(psi, gates::h(), {"A"});
  const DensityMatrix b = partial_trace(psi, {"B"});
  EXPECT_NEAR(b.entries()(2, 2).real(), 1.0, 1e-12);
  const DensityMatrix a = partial_trace(DensityMatrix::from_pure(psi), {"A"});
  EXPECT_NEAR(a.entries()(0, 1).real(), 0.5, 1e-12);
  EXPECT_NEAR(a.purity(), 1.0, 1e-12);
}

TEST(Qsim, WiesnerOverlapDecaysWithHamming) {
  Rng rng(3);
  for (int t = 0; t < 20; t++) {
    const BitVec theta = rng.bits(4);
    const BitVec x = rng.bits(4);
    const BitVec flip = rng.bits(4);
    const PureState a = wiesner_encode(theta, x);
    const PureState b = wiesner_encode(theta, x ^ flip);
    EXPECT_NEAR(overlap(a, b), flip.popcount() == 0 ? 1.0 : 0.0, 1e-12);
    // Flipping the basis on a qubit halves the overlap.
    const PureState c = wiesner_encode(theta ^ flip, x);
    EXPECT_NEAR(overlap(a, c), std::ldexp(1.0, -static_cast<int>(flip.popcount())), 1e-12);
  }
}

TEST(Qsim, MeasurementStatistics) {
  const PureState plus = apply_unitary(PureState::zero(reg(1)), gates::h(), {"A"});
  Rng rng(4);
  int ones = 0;
  for (int i = 0; i < 20000; i++) {
    const Measurement m = measure_computational(plus, "A", rng);
    ones += m.outcome.get(0);
    EXPECT_NEAR(std::abs(m.post.amplitudes()[m.outcome.get(0)]), 1.0, 1e-12);
  }
  EXPECT_NEAR(ones / 20000.0, 0.5, 0.015);
  const Projection p = project(PureState::zero(reg(1)), "A", BitVec::from_string("1"));
  EXPECT_EQ(p.probability, 0.0);
  EXPECT_FALSE(p.post.has_value());
}

TEST(Qsim, GatesAreUnitary) {
  for (const CMatrix& u : {gates::x(), gates::z(), gates::h(), gates::s(), gates::sdg(), gates::t(), gates::cnot(),
                           gates::swap(), gates::cswap(), gates::identity(3)}) {
    EXPECT_TRUE(is_unitary(u));
  }
  CMatrix bad = gates::h();
  bad(0, 0) *= 2;
  EXPECT_FALSE(is_unitary(bad));
  EXPECT_THROW(apply_unitary(PureState::zero(reg(1)), bad, {"A"}), std::invalid_argument);
}

TEST(Qsim, SizeAndValidityGuards) {
  EXPECT_THROW(PureState::zero(reg(kMaxQubits + 1)), ParameterRejected);
  CMatrix m = CMatrix::Identity(2, 2);
  EXPECT_THROW(DensityMatrix(reg(1), m), std::invalid_argument);
  CMatrix neg = CMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  const DensityMatrix dm(reg(1), neg);
  EXPECT_THROW(dm.validate(), std::invalid_argument);
}

TEST(Qsim, TraceNormDistanceOfUnnormalizedOperators) {
  CMatrix a = CMatrix::Zero(2, 2), b = CMatrix::Zero(2, 2);
  a(0, 0) = 0.5;
  b(1, 1) = 0.25;
  EXPECT_NEAR(trace_norm_distance(a, b), 0.375, 1e-12);
}

}  // namespace
}  // namespace peglab
