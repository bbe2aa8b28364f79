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
#include "peglab/fixtures.h"
#include "peglab/pseudoentropy.h"
#include "peglab/puzzles.h"
#include "test_util.h"

namespace peglab {
namespace {

SliceParams small_params() {
  SliceParams p = SliceParams::defaults(4);
  return p;
}

TEST(Pseudoentropy, DefaultsFollowTheScaledFormulas) {
  const SliceParams p = SliceParams::defaults(4);
  EXPECT_EQ(p.levels, 8u);
  EXPECT_EQ(p.pad, 4u);
  EXPECT_EQ(p.slack, 3u);
  EXPECT_NEAR(p.density_floor, 1.0 / 24, 1e-15);
  EXPECT_EQ(p.i_max, 12u);
  SliceParams bad = p;
  bad.slack = bad.pad;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Pseudoentropy, FlatSliceExamples) {
  const SliceParams params = small_params();
  const FlatSlice u = find_flat_slice(Pmf::uniform_bits(3), params);
  EXPECT_EQ(u.j_s, 3);
  EXPECT_EQ(u.g_s.size(), 8u);
  EXPECT_NEAR(u.mass, 1.0, 1e-12);
  // Half-open buckets: H = 1 and H = 2 land in different buckets, H = 3 twice.
  const FlatSlice q = find_flat_slice(Pmf::from_probabilities({0.5, 0.25, 0.125, 0.125}, 2), params);
  EXPECT_EQ(q.j_s, 1);
  EXPECT_NEAR(q.mass, 0.5, 1e-12);
  double total = q.tail;
  for (double m : q.bucket_mass) total += m;
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_THROW(find_flat_slice(Pmf(), params), std::invalid_argument);
}

TEST(Pseudoentropy, FlatSlicePigeonhole) {
  Rng rng(1);
  for (int t = 0; t < 50; t++) {
    const Pmf p = testing_util::random_pmf(rng, 4);
    const FlatSlice s = find_flat_slice(p, small_params());
    EXPECT_GE(s.mass, (1 - s.tail) / small_params().levels - 1e-15);
    for (const BitVec& k : s.g_s) {
      const double h = sample_entropy(p, k);
      EXPECT_GE(h, s.j_s - 1e-9);
      EXPECT_LT(h, s.j_s + 1);
    }
  }
}

TEST(Pseudoentropy, PointMassAlwaysInF) {
  Rng rng(2);
  const BitVec k0 = BitVec::from_string("1011");
  for (int t = 0; t < 20; t++) {
    const HashSeed h = sample_hash_seed(rng, 4);
    const SliceAnalysis a(Pmf::point(k0), h, small_params());
    EXPECT_TRUE(a.in_f(h.eval(k0, a.i_s())));
    EXPECT_NEAR(a.trigger_mass(), 1.0, 1e-12);
  }
}

TEST(Pseudoentropy, CollidingKeysRejectY) {
  // Two keys of equal weight in A_s with identical hashes: all rows ignore bit 0.
  std::vector<BitVec> rows(6, BitVec::from_string("01"));
  const HashSeed h(rows, BitVec(6));
  const Pmf ks = Pmf::from_probabilities({0.0, 0.5, 0.0, 0.5}, 2);
  SliceParams p = SliceParams::defaults(2);
  const SliceAnalysis a(ks, h, p);
  EXPECT_FALSE(a.in_f(h.eval(BitVec::from_string("01"), a.i_s())));
}

TEST(Pseudoentropy, IndexAboveMaxIsRejected) {
  SliceParams p = small_params();
  p.i_max = 1;
  Rng rng(3);
  EXPECT_THROW(SliceAnalysis(Pmf::uniform_bits(4), sample_hash_seed(rng, 4), p), ParameterRejected);
}

TEST(Pseudoentropy, GPairConditionals) {
  Rng rng(4);
  const Pmf pt = Pmf::point(BitVec::from_string("0110"));
  const HashSeed h = sample_hash_seed(rng, 4);
  const SliceAnalysis a(pt, h, small_params());
  const BitVec r = BitVec::from_string("0100");
  const auto on = g_pair_conditional(pt, h, a.i_s(), r, a);
  ASSERT_EQ(on.size(), 1u);
  EXPECT_NEAR(on[0].g0.prob(BitVec::from_string("1")), 1.0, 1e-12);
  EXPECT_NEAR(on[0].g1.prob(BitVec::from_string("1")), 0.5, 1e-12);
  const auto off = g_pair_conditional(pt, h, a.i_s() + 1, r, a);
  for (const auto& c : off) EXPECT_EQ(c.g0, c.g1);
}

TEST(Pseudoentropy, GPairMatchesEnumeration) {
  const JointPmf joint = *tabulated_puzzle_by_name("geometric").exact_joint;
  const Pmf ks = condition(joint, BitVec::from_string("0"));
  Rng rng(5);
  const SliceParams params = SliceParams::defaults(3);
  for (int t = 0; t < 10; t++) {
    const HashSeed h = sample_hash_seed(rng, 3);
    const SliceAnalysis a(ks, h, params);
    const BitVec r = rng.bits(3);
    for (const BitConditional& c : g_pair_conditional(ks, h, a.i_s(), r, a)) {
      double w = 0, one0 = 0, one1 = 0;
      for (const auto& [k, p] : ks.atoms()) {
        if (h.eval(k, a.i_s()) != c.y) continue;
        w += p;
        const bool trig = a.in_g(k) && a.in_f(c.y);
        one0 += k.dot(r) ? p : 0;
        one1 += trig ? p / 2 : (k.dot(r) ? p : 0);
      }
      EXPECT_NEAR(c.weight, w, 1e-12);
      EXPECT_NEAR(c.g0.prob(BitVec::from_string("1")), one0 / w, 1e-12);
      EXPECT_NEAR(c.g1.prob(BitVec::from_string("1")), one1 / w, 1e-12);
    }
  }
}

TEST(Pseudoentropy, DisabledTriggerGivesExactZeroGap) {
  const JointPmf joint = *tabulated_puzzle_by_name("geometric").exact_joint;
  SliceParams p = SliceParams::defaults(3);
  p.density_floor = 1;
  Rng rng(6);
  const GapReport r = wpeg_entropy_gap(joint, p, 20, rng);
  EXPECT_EQ(r.gap, 0.0);
  EXPECT_EQ(r.radius, 0.0);
  EXPECT_TRUE(r.exact);
  Rng rng2(7);
  const HashSeed h = sample_hash_seed(rng2, 3);
  const auto [g0, g1] = g_distributions(joint, h, p);
  EXPECT_EQ(g0, g1);
}

TEST(Pseudoentropy, PointMassPuzzleGapAccounting) {
  // Every K_s is a point mass: at i = i_s the trigger always fires and turns a
  // deterministic bit into a fair one, so the gap is exactly 1/(3n) bits.
  std::vector<JointPmf::Atom> atoms;
  for (uint64_t v = 0; v < 4; v++) atoms.push_back({BitVec::from_uint(v, 2), BitVec::from_uint(v, 2), 0.25});
  const JointPmf joint = JointPmf::from_atoms(atoms);
  Rng rng(8);
  const GapReport r = wpeg_entropy_gap(joint, SliceParams::defaults(2), 10, rng);
  EXPECT_NEAR(r.gap, 1.0 / 6, 1e-12);
  EXPECT_NEAR(r.trigger_mass, 1.0 / 6, 1e-12);
}

TEST(Pseudoentropy, GeometricGapIsPositive) {
  const JointPmf joint = *tabulated_puzzle_by_name("geometric").exact_joint;
  Rng rng(9);
  const GapReport r = wpeg_entropy_gap(joint, SliceParams::defaults(3), 100, rng);
  EXPECT_GT(r.gap, 0);
  // The sampled gap agrees with H(G1) - H(G0) computed from full tables, seed by seed.
  Rng rng2(10);
  const HashSeed h = sample_hash_seed(rng2, 3);
  const auto [g0, g1] = g_distributions(joint, h, SliceParams::defaults(3));
  EXPECT_NEAR(shannon_entropy(g1) - shannon_entropy(g0), wpeg_seed_value(joint, h, SliceParams::defaults(3)) / 9, 1e-9);
}

TEST(Pseudoentropy, BiasedCoin) {
  const BiasedCoin zero = biased_coin_bounds(0);
  EXPECT_NEAR(zero.entropy, 1, 1e-15);
  EXPECT_NEAR(zero.lower, 1, 1e-15);
  EXPECT_NEAR(zero.upper, 1, 1e-15);
  const BiasedCoin one = biased_coin_bounds(1);
  EXPECT_NEAR(one.entropy, 0, 1e-15);
  EXPECT_FALSE(one.lower_applies);
  EXPECT_TRUE(one.holds);
  EXPECT_THROW(biased_coin_bounds(1.5), std::invalid_argument);
}

TEST(Pseudoentropy, PublicSlicing) {
  const Pmf a = Pmf::bernoulli(0.5);
  const BitVec z = BitVec::from_string("0"), o = BitVec::from_string("1");
  std::map<BitVec, Pmf> det{{z, Pmf::point(z)}, {o, Pmf::point(o)}};
  std::map<BitVec, Pmf> unif{{z, Pmf::bernoulli(0.5)}, {o, Pmf::bernoulli(0.5)}};
  const PublicSlicingReport none = public_slicing_check(a, det, det, {});
  EXPECT_NEAR(none.joint_difference, 0, 1e-12);
  const PublicSlicingReport all = public_slicing_check(a, det, unif, {z, o});
  EXPECT_NEAR(all.joint_difference, 1, 1e-12);
  EXPECT_NEAR(all.d, 1, 1e-12);
  EXPECT_TRUE(all.holds);
  EXPECT_THROW(public_slicing_check(a, det, unif, {z}), std::invalid_argument);
}

TEST(Pseudoentropy, CoreLemmaPointMassAndOracle) {
  const BitVec star = BitVec::from_string("0101");
  EXPECT_NEAR(core_lemma_gap(Pmf::point(star), star, 1, 0).gap, 1.0, 1e-12);
  const Pmf u = Pmf::uniform_bits(4);
  EXPECT_NEAR(core_lemma_gap(u, star, 0, 1).gap, testing_util::oracle_core_lemma_gap(u, star), 1e-9);
  const CoreLemmaFixture f = core_lemma_fixture();
  const CoreLemmaReport r = core_lemma_gap(f.x, f.x_star, f.theta_heavy, f.theta_light);
  EXPECT_NEAR(r.gap, testing_util::oracle_core_lemma_gap(f.x, f.x_star), 1e-9);
  EXPECT_GT(r.gap, 0);
  EXPECT_GE(r.gap, r.bound - 1e-9);
  EXPECT_THROW(core_lemma_gap(f.x, f.x_star, 0.5, f.theta_light), std::invalid_argument);
  EXPECT_THROW(core_lemma_gap(f.x, f.x_star, f.theta_heavy, 0.001), std::invalid_argument);
}

TEST(Pseudoentropy, PegProduct) {
  PegParams p;
  p.q = 8;
  p.eps = 0.01;
  const PegReport r = peg_product(Pmf::uniform_bits(1), Pmf::uniform_bits(1), p);
  // Water-filling may spill the trimmed mass onto fresh atoms, so the cap is 0.99 / 256.
  EXPECT_NEAR(r.h_min_smooth_g1, 8 - std::log2(0.99), 1e-9);
  EXPECT_GE(r.h_min_smooth_g1, 8 - std::sqrt(16 * std::log2(100)) * std::log2(5));
  ASSERT_TRUE(r.product_g0.has_value());
  EXPECT_NEAR(shannon_entropy(*r.product_g0), 8, 1e-9);
  PegParams single;
  single.q = 1;
  single.eps = 0;
  const Pmf g = Pmf::from_probabilities({0.7, 0.2, 0.1}, 2);
  const PegReport s = peg_product(g, g, single);
  EXPECT_NEAR(s.h_min_smooth_g1, min_entropy(g), 1e-12);
  EXPECT_NEAR(s.h_max_smooth_g0, max_entropy(g), 1e-12);
}

TEST(Pseudoentropy, ConcentrationOnBiasedBit) {
  const Pmf x = Pmf::bernoulli(0.9);
  const Pmf prod = product_power(x, 12);
  const double bound = 12 * shannon_entropy(x) - concentration_deviation(12, 0.01, 2);
  EXPECT_GE(smooth_min_entropy(prod, 0.01), bound);
}

TEST(Pseudoentropy, InverterBeatsRandomGuessing) {
  const PuzzleInstance demo = tabulated_puzzle_by_name("flat");
  const SliceParams params = SliceParams::defaults(4);
  Rng rng(11);
  InverterParams ip;
  const InverterReport good = distinguisher_to_inverter(
      demo, likelihood_ratio_distinguisher(*demo.exact_joint, params), params, ip, 60, rng);
  EXPECT_GT(good.success_rate, good.random_guess_baseline);
  EXPECT_THROW(distinguisher_to_inverter(demo, [](const GSample&) { return false; }, params, ip, 0, rng),
               std::invalid_argument);
}

}  // namespace
}  // namespace peglab
