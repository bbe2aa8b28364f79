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

#include <benchmark/benchmark.h>

#include "peglab/commit.h"
#include "peglab/dist.h"
#include "peglab/fixtures.h"
#include "peglab/gf2.h"
#include "peglab/pseudoentropy.h"
#include "peglab/puzzles.h"
#include "peglab/qsim.h"

namespace peglab {
namespace {

void BM_SmoothMinEntropyProduct(benchmark::State& state) {
  const Pmf x = Pmf::from_probabilities({0.4, 0.3, 0.2, 0.1}, 2);
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(smooth_min_entropy(product_spectrum(x, t), 0.01));
}
BENCHMARK(BM_SmoothMinEntropyProduct)->Arg(4)->Arg(12)->Arg(32);

void BM_ExtractorDistance(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  const Pmf x = Pmf::uniform_bits(n);
  for (auto _ : state) benchmark::DoNotOptimize(extractor_distance(x));
}
BENCHMARK(BM_ExtractorDistance)->Arg(6)->Arg(10);

void BM_HashedDistance(benchmark::State& state) {
  const Pmf g0 = efi_product_fixture();
  Rng rng(1);
  const HashSeed h = sample_hash_seed(rng, 12);
  for (auto _ : state) benchmark::DoNotOptimize(hashed_distance_to_uniform(h, g0, 10));
}
BENCHMARK(BM_HashedDistance);

void BM_GlDecode(benchmark::State& state) {
  const size_t n = 8;
  Rng rng(2);
  const BitVec x = rng.bits(n);
  auto oracle = [&x](const BitVec& r) { return inner_product(x, r); };
  for (auto _ : state) {
    Rng run(3);
    benchmark::DoNotOptimize(gl_decode(oracle, n, 0.25, run));
  }
}
BENCHMARK(BM_GlDecode);

void BM_ApplyGate(benchmark::State& state) {
  const size_t nq = static_cast<size_t>(state.range(0));
  CVector psi = CVector::Zero(static_cast<Eigen::Index>(size_t{1} << nq));
  psi(0) = 1;
  const CMatrix h = gates::h();
  for (auto _ : state) {
    for (size_t q = 0; q < nq; q++) kernels::apply(psi, nq, h, {q});
    benchmark::DoNotOptimize(psi.data());
  }
}
BENCHMARK(BM_ApplyGate)->Arg(8)->Arg(14);

void BM_ShadowEstimate(benchmark::State& state) {
  const PureState target = wiesner_encode(BitVec::from_uint(5, 3), BitVec::from_uint(3, 3));
  Rng rng(4);
  const Shadow shadow = shadow_gen(target, 96, rng);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_overlap(shadow, target, 8));
}
BENCHMARK(BM_ShadowEstimate);

void BM_WpegSeedValue(benchmark::State& state) {
  const JointPmf joint = *tabulated_puzzle_by_name("geometric").exact_joint;
  const SliceParams params = SliceParams::defaults(3);
  Rng rng(5);
  const HashSeed h = sample_hash_seed(rng, 3);
  for (auto _ : state) benchmark::DoNotOptimize(wpeg_seed_value(joint, h, params));
}
BENCHMARK(BM_WpegSeedValue);

void BM_BindingExperiment(benchmark::State& state) {
  const CommitScheme s = xor_combine({swap_commit(), basis_commit()});
  const AdversaryStrategy adv = superposition_attacker(s);
  for (auto _ : state) benchmark::DoNotOptimize(binding_experiment(s, adv).advantage);
}
BENCHMARK(BM_BindingExperiment);

}  // namespace
}  // namespace peglab

BENCHMARK_MAIN();
