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

#ifndef PEGLAB_EFI_H_
#define PEGLAB_EFI_H_

#include <functional>
#include <vector>

#include "peglab/bitvec.h"
#include "peglab/dist.h"
#include "peglab/gf2.h"
#include "peglab/rng.h"

namespace peglab {

struct EfiParams {
  /// Truncation length in bits.
  size_t s = 0;
  /// H_max(G0) + gap_term.
  double s_star = 0;
  /// Instantiated gap term (the n^c / 2 analog), given directly.
  double gap_term = 0;
  double eps = 0;

  static EfiParams make(const Pmf& g0, size_t s, double gap_term, double eps);
};

struct EfiSample {
  HashSeed h;
  BitVec y;
};

/// b = 0: (h, h(x)_s) for x <- G0; b = 1: (h, U_s). The seed is fresh per call and
/// maps L-bit labels to 3L bits.
EfiSample efi_sample(const Pmf& g0, size_t s, int b, Rng& rng);
EfiSample efi_sample(const std::function<BitVec(Rng&)>& g0_sampler, size_t label_bits, size_t s, int b,
                     Rng& rng);

/// Mean over sampled seeds of the exact SD(h(G0)_s, U_s), with a 99% Hoeffding radius.
Estimate efi_distance(const Pmf& g0, size_t s, size_t seed_samples, Rng& rng);

/// 1 - 2^{H_max(G0) - s}: every seed leaves at least this distance, since the image
/// has at most 2^{H_max} points.
double efi_support_bound(const Pmf& g0, size_t s);

struct SStar {
  double h_max = 0;
  double gap_term = 0;
  double value = 0;
  /// log2 of the number of output bits the hash can produce (3L); s* must not exceed it.
  double log_output_bound = 0;
};

SStar s_star(const Pmf& g0, double gap_term);

struct SweepRow {
  size_t s = 0;
  double estimate = 0;
  double radius = 0;
  double support_bound = 0;
};

/// efi_distance for s = s_begin..s_end inclusive, each seed stream split by s.
std::vector<SweepRow> efi_sweep(const Pmf& g0, size_t s_begin, size_t s_end, size_t seed_samples, Rng& rng);

struct Crossover {
  double h_min_smooth = 0;
  double h_max = 0;
  double margin = 0;
  size_t s_low = 0;
  size_t s_high = 0;
  Estimate low;
  Estimate high;
  bool witnessed = false;
  /// Per-seed exact check of the support-side bound at s_high.
  bool support_bound_holds = false;
};

/// s_low = ceil(H^eps_min - margin) (clamped at 0), s_high = floor(H_max + margin).
Crossover efi_crossover(const Pmf& g0, double eps, double margin, size_t seed_samples, Rng& rng);

}  // namespace peglab

#endif  // PEGLAB_EFI_H_
