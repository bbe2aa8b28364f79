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

#ifndef PEGLAB_RNG_H_
#define PEGLAB_RNG_H_

#include <cstdint>
#include <limits>
#include <string_view>

#include "peglab/bitvec.h"

namespace peglab {

uint64_t mix64(uint64_t x);
uint64_t fnv1a64(std::string_view text);

/// Counter-based, splittable generator.
///
/// Output i of a stream with key K is mix64(K + mix64(i)). `split(tag)` derives a
/// child key from (K, tag) only, so children do not depend on how many values the
/// parent has already produced. All derived quantities (uniform doubles, bounded
/// integers, Bernoulli draws) are computed here rather than through <random>
/// distributions so streams reproduce bit-for-bit across standard libraries.
class Rng {
 public:
  using result_type = uint64_t;

  explicit Rng(uint64_t seed = 0) : key_(mix64(seed ^ 0x5851f42d4c957f2dULL)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<uint64_t>::max(); }
  result_type operator()() { return next_u64(); }

  uint64_t next_u64();
  /// Uniform on [0, 1) with 53 bits of precision.
  double uniform();
  /// Uniform on {0, ..., n-1}; n must be positive.
  uint64_t below(uint64_t n);
  bool bernoulli(double p);
  BitVec bits(size_t n);

  /// Child stream determined by this stream's key and the tag alone; the counter
  /// is not consulted, so splitting twice with one tag repeats the child.
  Rng split(uint64_t tag) const;
  Rng split(std::string_view tag) const { return split(fnv1a64(tag)); }

  /// Child keyed by the next output; advances this stream. Library routines that
  /// take Rng& fork once and then split by index.
  Rng fork() { return split(next_u64()); }

  /// Child stream hash(seed, subcommand, trial_index) used by the experiment runner.
  static Rng derive(uint64_t seed, std::string_view subcommand, uint64_t trial_index);

  uint64_t key() const { return key_; }
  uint64_t counter() const { return counter_; }

 private:
  struct RawKey {};
  Rng(RawKey, uint64_t key) : key_(key) {}

  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace peglab

#endif  // PEGLAB_RNG_H_
