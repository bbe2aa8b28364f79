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

#ifndef PEGLAB_GF2_H_
#define PEGLAB_GF2_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "peglab/bitvec.h"
#include "peglab/dist.h"
#include "peglab/rng.h"

namespace peglab {

/// Pairwise-independent hash h: {0,1}^n -> {0,1}^{3n}, bit j = <a_j, x> xor b_j.
class HashSeed {
 public:
  HashSeed(std::vector<BitVec> rows, BitVec offsets);

  /// Seed length in bits for input length n: 3n(n+1).
  static size_t seed_length(size_t n) { return 3 * n * (n + 1); }

  size_t n_in() const { return n_in_; }
  size_t n_out() const { return rows_.size(); }
  const std::vector<BitVec>& rows() const { return rows_; }
  const BitVec& offsets() const { return offsets_; }

  /// First i output bits; 0 <= i <= n_out.
  BitVec eval(const BitVec& x, size_t i) const;

  /// u32 little-endian n_in, then rows row-major followed by offsets, bits packed
  /// little-endian within bytes.
  std::vector<uint8_t> encode() const;
  static HashSeed decode(const std::vector<uint8_t>& bytes);

  bool operator==(const HashSeed& other) const = default;

 private:
  size_t n_in_;
  std::vector<BitVec> rows_;
  BitVec offsets_;
};

HashSeed sample_hash_seed(Rng& rng, size_t n);
/// Toeplitz-structured rows (a_j[c] depends only on j - c); same interface.
HashSeed sample_toeplitz_seed(Rng& rng, size_t n);
BitVec hash_eval(const HashSeed& h, const BitVec& x, size_t i);
bool inner_product(const BitVec& x, const BitVec& r);

/// SD((R, <X,R>), (R, U_1)) = 2^-n sum_r |Pr[<X,r> = 1] - 1/2|, exact, n <= 16.
double extractor_distance(const Pmf& x);

struct Estimate {
  double value = 0;
  double radius = 0;
  size_t samples = 0;
};

/// Two-sided Hoeffding radius for the mean of `samples` values in a range of width
/// `range`.
double hoeffding_radius(size_t samples, double range, double confidence = 0.99);

/// Exact SD(h(X)_m, U_m) for one seed.
double hashed_distance_to_uniform(const HashSeed& h, const Pmf& x, size_t m);

/// Monte Carlo over seeds of the exact per-seed SD(h(X)_m, U_m).
Estimate lhl_distance(const std::function<HashSeed(Rng&)>& sampler, const Pmf& x, size_t m,
                      size_t n_seeds, Rng& rng);

struct GlConfig {
  /// Query budget; 0 selects 64 n / eps^2.
  size_t queries = 0;
  /// Maximum list length; 0 selects 4 / eps^2.
  size_t list_cap = 0;
};

/// Classical Goldreich-Levin list decoder with majority voting over pairwise
/// independent queries r_J xor e_i.
std::vector<BitVec> gl_decode(const std::function<bool(const BitVec&)>& predictor, size_t n,
                              double eps, Rng& rng, const GlConfig& config = {});

/// Pr_h[h(x)_i = h(x')_i] counted over every seed through the rows' action on x xor x'.
Rational collision_probability_exact(size_t n, const BitVec& x, const BitVec& x_prime, size_t i);
/// Pr_h[bit j of h(x) = 1] over every seed.
Rational output_bit_probability_exact(size_t n, const BitVec& x, size_t j);

}  // namespace peglab

#endif  // PEGLAB_GF2_H_
