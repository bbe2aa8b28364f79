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

#include "peglab/efi.h"
#include "peglab/fixtures.h"

namespace peglab {
namespace {

TEST(Efi, EmptyTruncation) {
  Rng rng(1);
  const Pmf g = Pmf::uniform_bits(3);
  EXPECT_EQ(efi_sample(g, 0, 0, rng).y.size(), 0u);
  EXPECT_EQ(efi_sample(g, 0, 1, rng).y.size(), 0u);
  EXPECT_THROW(efi_sample(g, 10, 0, rng), std::invalid_argument);
}

TEST(Efi, UniformBranchIsUniform) {
  Rng rng(2);
  std::vector<int> counts(4, 0);
  const int n = 20000;
  for (int i = 0; i < n; i++) counts[efi_sample(Pmf::point(BitVec(3)), 2, 1, rng).y.to_uint()]++;
  for (int c : counts) EXPECT_NEAR(c / static_cast<double>(n), 0.25, 0.015);
}

TEST(Efi, PointMassIsDeterministicGivenSeed) {
  Rng rng(3);
  const BitVec x = BitVec::from_string("101");
  for (int t = 0; t < 10; t++) {
    const EfiSample s = efi_sample(Pmf::point(x), 5, 0, rng);
    EXPECT_EQ(s.y, s.h.eval(x, 5));
  }
  Rng r2(4);
  const Estimate e = efi_distance(Pmf::point(x), 4, 20, r2);
  EXPECT_NEAR(e.value, 1 - 1.0 / 16, 1e-12);
}

TEST(Efi, SStar) {
  EXPECT_NEAR(s_star(Pmf::uniform_bits(4), 1.5).value, 5.5, 1e-12);
  EXPECT_NEAR(s_star(Pmf::point(BitVec(2)), 0).value, 0, 1e-12);
  const Pmf g = efi_product_fixture();
  double hmax = 0;
  for (const auto& [x, p] : g.atoms()) hmax = std::max(hmax, -std::log2(p));
  EXPECT_NEAR(s_star(g, 0).h_max, hmax, 1e-12);
}

TEST(Efi, PerSeedMonotoneInTruncation) {
  Rng rng(5);
  const Pmf g = Pmf::from_probabilities({0.4, 0.3, 0.2, 0.1}, 2);
  for (int t = 0; t < 30; t++) {
    const HashSeed h = sample_hash_seed(rng, 2);
    double prev = 0;
    for (size_t s = 0; s <= 6; s++) {
      const double d = hashed_distance_to_uniform(h, g, s);
      EXPECT_GE(d, prev - 1e-12);
      prev = d;
    }
  }
}

TEST(Efi, SupportSideBound) {
  Rng rng(6);
  const Pmf g = Pmf::from_probabilities({0.5, 0.25, 0.25}, 2);
  const size_t s = 5;
  for (int t = 0; t < 30; t++) {
    EXPECT_GE(hashed_distance_to_uniform(sample_hash_seed(rng, 2), g, s), efi_support_bound(g, s) - 1e-12);
  }
}

TEST(Efi, SweepRowsAndCrossover) {
  Rng rng(7);
  const Pmf g = Pmf::from_probabilities({0.25, 0.25, 0.25, 0.25}, 2);
  const auto rows = efi_sweep(g, 0, 6, 50, rng);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_NEAR(rows[0].estimate, 0, 1e-12);
  for (size_t i = 0; i < rows.size(); i++) EXPECT_EQ(rows[i].s, i);
  EXPECT_THROW(efi_sweep(g, 3, 2, 5, rng), std::invalid_argument);
}

}  // namespace
}  // namespace peglab
