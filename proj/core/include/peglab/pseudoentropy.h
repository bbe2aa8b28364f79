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

#ifndef PEGLAB_PSEUDOENTROPY_H_
#define PEGLAB_PSEUDOENTROPY_H_

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "peglab/bitvec.h"
#include "peglab/dist.h"
#include "peglab/gf2.h"
#include "peglab/puzzles.h"
#include "peglab/rng.h"

namespace peglab {

/// Desk-scale stand-ins for the asymptotic slicing constants.
struct SliceParams {
  size_t levels = 0;
  size_t pad = 0;
  size_t slack = 0;
  /// Minimum conditional mass of the flat slice behind y. A value >= 1 disables the
  /// trigger entirely.
  double density_floor = 0;
  /// Reported only; the asymptotic ceiling on off-slice atoms.
  double mass_ceiling = 0;
  size_t i_max = 0;

  /// levels = 2n, pad = 2 + ceil(log2 n), slack = 1 + ceil(log2 n),
  /// density_floor = 1/(6n), mass_ceiling = 2/n^600 (underflows to 0), i_max = 3n.
  static SliceParams defaults(size_t n);
  void validate() const;
  bool trigger_disabled() const { return density_floor >= 1; }
};

struct FlatSlice {
  int j_s = 0;
  std::vector<BitVec> g_s;
  double mass = 0;
  /// Mass with sample entropy >= levels.
  double tail = 0;
  std::vector<double> bucket_mass;
};

/// Buckets C_j = {k : j <= H(k) < j + 1} (a 1e-9 guard absorbs rounding below
/// integers); returns the heaviest, ties to the smaller j.
FlatSlice find_flat_slice(const Pmf& k_s, const SliceParams& params);

/// Per-(s, h) slicing data with an exact F_s membership predicate.
class SliceAnalysis {
 public:
  /// Throws ParameterRejected when i_s exceeds i_max or the hash output length.
  SliceAnalysis(const Pmf& k_s, const HashSeed& h, const SliceParams& params);

  int j_s() const { return slice_.j_s; }
  size_t i_s() const { return i_s_; }
  const FlatSlice& slice() const { return slice_; }
  const std::vector<BitVec>& g_s() const { return slice_.g_s; }
  const std::vector<BitVec>& a_s() const { return a_s_; }
  bool in_g(const BitVec& k) const { return g_set_.count(k) > 0; }
  bool in_a(const BitVec& k) const { return a_set_.count(k) > 0; }

  /// (h, y) in F_s: Pr[k in G_s | h(k)_{i_s} = y] >= density_floor and at most one
  /// key of A_s hashes to y. False for y outside the image and when disabled.
  bool in_f(const BitVec& y) const;
  /// Pr[k in G_s | h(k)_{i_s} = y]; 0 outside the image.
  double conditional_slice_mass(const BitVec& y) const;
  /// Pr_{k <- K_s}[k in G_s and (h, h(k)_{i_s}) in F_s].
  double trigger_mass() const;

 private:
  struct Bin {
    double mass = 0;
    double slice_mass = 0;
    size_t a_count = 0;
  };

  FlatSlice slice_;
  size_t i_s_ = 0;
  std::vector<BitVec> a_s_;
  std::set<BitVec> g_set_;
  std::set<BitVec> a_set_;
  std::map<BitVec, Bin> bins_;
  double density_floor_ = 0;
  bool disabled_ = false;
};

/// Final-bit conditionals of G_0 and G_1 given (s, h, i, r, y).
struct BitConditional {
  BitVec y;
  /// Pr[h(k)_i = y].
  double weight = 0;
  Pmf g0;
  Pmf g1;
};

std::vector<BitConditional> g_pair_conditional(const Pmf& k_s, const HashSeed& h, size_t i,
                                                const BitVec& r, const SliceAnalysis& analysis);

struct PerPuzzleGap {
  BitVec s;
  double weight = 0;
  int j_s = 0;
  size_t i_s = 0;
  double slice_mass = 0;
  /// Mean over sampled seeds of Pr[s] * D(s, h, i_s) / (3n).
  double gap_contribution = 0;
  double trigger_mass = 0;
};

struct GapReport {
  double gap = 0;
  double radius = 0;
  /// Pr[G_1 replaces the final bit], averaged over seeds.
  double trigger_mass = 0;
  size_t seed_samples = 0;
  size_t key_bits = 0;
  /// True when the trigger is structurally disabled and the zero gap is exact.
  bool exact = false;
  std::vector<PerPuzzleGap> per_s;
};

/// H(G_1) - H(G_0): exact in everything except the hash seed, which is sampled.
GapReport wpeg_entropy_gap(const JointPmf& puzzle, const SliceParams& params, size_t seed_samples, Rng& rng);

/// Per-seed value Sum_s Pr[s] D(s, h, i_s) in [-1, 1] (before the 1/(3n) factor).
double wpeg_seed_value(const JointPmf& puzzle, const HashSeed& h, const SliceParams& params);

/// Full G_0 and G_1 for a fixed seed over labels tuple(s, i, r, y, bit).
std::pair<Pmf, Pmf> g_distributions(const JointPmf& puzzle, const HashSeed& h, const SliceParams& params);

struct BiasedCoin {
  double d = 0;
  double entropy = 0;
  double lower = 0;
  double upper = 0;
  bool lower_applies = false;
  bool holds = false;
};

/// Bit with Pr[1] = (1 + d) / 2 against 1 - d^2 (d <= 1/2) and 1 - d^2/2.
BiasedCoin biased_coin_bounds(double d);

struct CoreLemmaReport {
  double gap = 0;
  double p_star = 0;
  bool heavy_case = false;
  /// Mean over r of the per-r chain (B1 <= 1/2 ? 1 - B1^2 : 0) - (1 - B0^2 / 2).
  double bound = 0;
};

/// H(R, alpha_1(X, R)) - H(R, alpha_0(X, R)) by enumerating every r.
CoreLemmaReport core_lemma_gap(const Pmf& x, const BitVec& x_star, double theta_heavy, double theta_light);

struct PublicSlicingReport {
  /// H(A, B_1) - H(A, B_0) from the joint distributions.
  double joint_difference = 0;
  /// Sum_a Pr[a] (H(B_1 | a) - H(B_0 | a)).
  double chain_rule_difference = 0;
  double d = 0;
  double a_star_mass = 0;
  double bound = 0;
  bool holds = false;
};

PublicSlicingReport public_slicing_check(const Pmf& a, const std::map<BitVec, Pmf>& b0_given_a,
                                         const std::map<BitVec, Pmf>& b1_given_a,
                                         const std::set<BitVec>& a_star);

struct PegParams {
  int q = 1;
  double eps = 0.01;
  double c = 1;
  /// Context for the two repetition formulas.
  size_t n = 1;
  size_t output_len = 1;
};

struct PegReport {
  int t = 1;
  double eps = 0;
  double h_min_smooth_g1 = 0;
  double h_max_smooth_g0 = 0;
  double difference = 0;
  double shannon_g0 = 0;
  double shannon_g1 = 0;
  /// t H(G_1) - sqrt(2 t log2(1/eps)) log2(3 + |U_1|).
  double concentration_lower_g1 = 0;
  /// t H(G_0) + sqrt(2 t log2(1/eps)) log2(3 + |U_0|).
  double concentration_upper_g0 = 0;
  /// n^{c+3} L^2 and n^{2c+3} L^2.
  double q_statement = 0;
  double q_proof = 0;
  std::optional<Pmf> product_g0;
  std::optional<Pmf> product_g1;
};

/// Smooth entropies of the q-fold products are exact via type classes; product
/// Pmfs are materialized only within the 2^24 atom guard.
PegReport peg_product(const Pmf& g0, const Pmf& g1, const PegParams& params);

/// sqrt(2 t log2(1/eps)) log2(3 + alphabet).
double concentration_deviation(int t, double eps, size_t alphabet);

/// One draw (s, h, i, r, y, b) of G_0 or G_1.
struct GSample {
  const BitVec& s;
  const HashSeed& h;
  size_t i;
  const BitVec& r;
  const BitVec& y;
  bool bit;
};

using Distinguisher = std::function<bool(const GSample&)>;

/// Outputs 1 iff Pr_{G_1}[sample] > Pr_{G_0}[sample], computed exactly from the table.
Distinguisher likelihood_ratio_distinguisher(const JointPmf& puzzle, const SliceParams& params);

struct InverterParams {
  /// Suffix length guessed by enumeration; 0 selects params.pad.
  size_t ell_star = 0;
  double gl_eps = 0.25;
  GlConfig gl{64, 2};
};

struct InverterReport {
  size_t trials = 0;
  size_t successes = 0;
  double success_rate = 0;
  double radius = 0;
  /// 1 / |keyspace|.
  double random_guess_baseline = 0;
  /// Mean over trials of 1 - (1 - a_s / 2^n)^Q with Q the candidates tested.
  double budget_matched_baseline = 0;
  double mean_candidates = 0;
};

/// Runs the predictor / Goldreich-Levin / suffix-guessing pipeline against a
/// tabulated puzzle.
InverterReport distinguisher_to_inverter(const PuzzleInstance& puzzle, const Distinguisher& distinguisher,
                                         const SliceParams& params, const InverterParams& inverter,
                                         size_t trials, Rng& rng);

}  // namespace peglab

#endif  // PEGLAB_PSEUDOENTROPY_H_
