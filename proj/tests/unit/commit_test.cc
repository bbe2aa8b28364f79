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

#include "peglab/commit.h"

namespace peglab {
namespace {

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

TEST(Commit, CatalogCompleteness) {
  std::vector<CommitScheme> all = toy_schemes();
  all.push_back(dual_commit(basis_commit(), swap_commit()));
  all.push_back(xor_combine({swap_commit(), basis_commit()}));
  all.push_back(xor_combine({basis_commit(), basis_commit(), basis_commit()}));
  for (const CommitScheme& s : all) {
    for (int b : {0, 1}) EXPECT_NEAR(completeness(s, b), 1.0, 1e-9) << s.name();
  }
}

TEST(Commit, HidingExamples) {
  EXPECT_NEAR(hiding_advantage(basis_commit()), 1.0, 1e-12);
  EXPECT_NEAR(hiding_advantage(swap_commit()), 0.5, 1e-12);
  for (double tau : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    EXPECT_NEAR(hiding_advantage(leaky_commit(tau)), 0.5 + tau / 2, 1e-12);
  }
  EXPECT_NEAR(hiding_advantage(purification_commit(Pmf::bernoulli(0.5), Pmf::bernoulli(0.75))), 0.625, 1e-12);
  const Pmf p = Pmf::from_probabilities({0.2, 0.3, 0.5}, 2);
  EXPECT_NEAR(hiding_advantage(purification_commit(p, p)), 0.5, 1e-12);
  EXPECT_NEAR(hiding_advantage(purification_commit(Pmf::point(BitVec::from_string("00")),
                                                   Pmf::uniform({BitVec::from_string("01"), BitVec::from_string("11")}))),
              1.0, 1e-12);
}

TEST(Commit, PurificationReducedStateIsDiagonal) {
  const CommitScheme s = purification_commit(Pmf::bernoulli(0.5), Pmf::bernoulli(0.75));
  const CMatrix r1 = reduced_commit_state(s, 1);
  EXPECT_NEAR(r1(0, 0).real(), 0.25, 1e-12);
  EXPECT_NEAR(r1(1, 1).real(), 0.75, 1e-12);
  EXPECT_NEAR(std::abs(r1(0, 1)), 0.0, 1e-12);
}

TEST(Commit, BindingExamples) {
  EXPECT_NEAR(binding_experiment(basis_commit(), superposition_attacker(basis_commit())).advantage, 0.5, 1e-12);
  EXPECT_NEAR(binding_experiment(swap_commit(), superposition_attacker(swap_commit())).advantage, 0.75, 1e-12);
  for (const CommitScheme& s : toy_schemes()) {
    AdversaryStrategy honest;
    honest.state = s.commit_state(0);
    EXPECT_NEAR(binding_experiment(s, honest).advantage, 0.5, 1e-12) << s.name();
  }
}

TEST(Commit, ExplicitMeasurement) {
  const CommitScheme s = swap_commit();
  AdversaryStrategy adv = superposition_attacker(s);
  CMatrix plus = CMatrix::Constant(2, 2, 0.5);
  adv.pi0 = plus;
  EXPECT_NEAR(binding_experiment(s, adv).advantage, 0.75, 1e-12);
  CMatrix bad = CMatrix::Identity(2, 2) * 2.0;
  adv.pi0 = bad;
  EXPECT_THROW(binding_experiment(s, adv), std::invalid_argument);
}

TEST(Commit, SideRegisterIsCarried) {
  // M entangled with a private qubit E before the swap: D holds half a Bell pair.
  const CommitScheme s = swap_commit();
  AdversaryStrategy adv;
  adv.e_qubits = 1;
  adv.state = CVector::Zero(8);
  adv.state(0b000) = std::sqrt(0.5);
  adv.state(0b101) = std::sqrt(0.5);
  s.apply(adv.state, 3, {0, 1});
  // Unmeasured branch keeps the Bell pair on (D, E); measured branch dephases it.
  const BindingResult r = binding_experiment(s, adv);
  EXPECT_NEAR(r.p_accept, 1.0, 1e-12);
  EXPECT_NEAR(r.advantage, 0.75, 1e-12);
}

TEST(Commit, ExperimentAlgebraElision) {
  std::vector<CommitScheme> all = toy_schemes();
  all.push_back(dual_commit(swap_commit(), basis_commit()));
  for (const CommitScheme& s : all) {
    const AdversaryStrategy adv = superposition_attacker(s);
    const BindingResult a = binding_experiment(s, adv, BindingForm::kDirect);
    const BindingResult b = binding_experiment(s, adv, BindingForm::kInflated);
    EXPECT_NEAR(a.p_accept, b.p_accept, 1e-9);
    EXPECT_NEAR(a.advantage, b.advantage, 1e-9);
    EXPECT_LT(max_abs(a.sigma0 - b.sigma0), 1e-9);
    EXPECT_LT(max_abs(a.sigma1 - b.sigma1), 1e-9);
  }
}

TEST(Commit, SampledExperimentTracksExact) {
  const CommitScheme s = swap_commit();
  Rng rng(1);
  EXPECT_NEAR(binding_experiment(s, superposition_attacker(s), rng, 4000), 0.75, 0.03);
}

TEST(Commit, DualCommitInvariants) {
  const CommitScheme both_hiding = dual_commit(swap_commit(), swap_commit());
  EXPECT_NEAR(hiding_advantage(both_hiding), 0.5, 1e-12);
  const CommitScheme d = dual_commit(basis_commit(), swap_commit());
  EXPECT_NEAR(binding_experiment(d, superposition_attacker(d)).advantage,
              binding_experiment(basis_commit(), superposition_attacker(basis_commit())).advantage, 1e-12);
  ASSERT_TRUE(d.copy_pair.has_value());
  const double r = std::sqrt(0.5);
  EXPECT_LT(cnot_copy_asymmetry(d, {r, 0}, {0, r}), 1e-12);
  EXPECT_LT(cnot_copy_asymmetry(d, {0.6, 0}, {0, 0.8}), 1e-12);
  EXPECT_THROW(cnot_copy_asymmetry(basis_commit(), {1, 0}, {0, 0}), std::invalid_argument);
}

TEST(Commit, XorCombineInvariants) {
  for (const auto& parts : std::vector<std::vector<CommitScheme>>{
           {swap_commit(), basis_commit()}, {basis_commit(), swap_commit()}, {leaky_commit(0.7), swap_commit()},
           {basis_commit(), swap_commit(), leaky_commit(0.3)}}) {
    const CommitScheme x = xor_combine(parts);
    EXPECT_LT(max_abs(reduced_commit_state(x, 0) - reduced_commit_state(x, 1)), 1e-12) << x.name();
    EXPECT_NEAR(hiding_advantage(x), 0.5, 1e-12);
  }
  const CommitScheme bb = xor_combine({basis_commit(), basis_commit()});
  EXPECT_NEAR(binding_experiment(bb, superposition_attacker(bb)).advantage, 0.5, 1e-12);
  EXPECT_THROW(xor_combine({basis_commit()}), std::invalid_argument);
}

TEST(Commit, ConstructorValidation) {
  EXPECT_THROW(CommitScheme("bad", 1, {0}, {0}, {}), std::invalid_argument);
  CMatrix nonunitary = CMatrix::Identity(2, 2) * 2.0;
  EXPECT_THROW(CommitScheme("bad", 1, {0}, {1}, {{nonunitary, {0}}}), std::invalid_argument);
  EXPECT_THROW(CommitScheme("bad", 1, {0}, {1}, {{gates::h(), {3}}}), std::exception);
}

TEST(Commit, DescriptorIsStable) {
  const std::string a = leaky_commit(0.3).descriptor_json();
  EXPECT_EQ(a, leaky_commit(0.3).descriptor_json());
  EXPECT_NE(a, leaky_commit(0.4).descriptor_json());
  EXPECT_NE(a.find("checksum"), std::string::npos);
}

TEST(Commit, FlavorSwapInterface) {
  FlavorSwap swap = identity_flavor_swap;
  CommitScheme s = basis_commit();
  s.hiding_flavor = "computational";
  s.binding_flavor = "statistical";
  const CommitScheme t = swap(s);
  EXPECT_EQ(t.hiding_flavor, "statistical");
  EXPECT_EQ(t.binding_flavor, "computational");
  EXPECT_NEAR(hiding_advantage(t), hiding_advantage(s), 1e-12);
}

}  // namespace
}  // namespace peglab
