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

#include "peglab/efi.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "peglab/errors.h"

namespace peglab {

namespace {

size_t label_bits(const Pmf& g0) {
  auto w = g0.label_width();
  if (!w || *w == 0) throw std::invalid_argument("EFI needs a nonempty Pmf with equal-length labels");
  return *w;
}

}  // namespace

EfiParams EfiParams::make(const Pmf& g0, size_t s, double gap_term, double eps) {
  if (!(eps >= 0 && eps < 1)) throw std::invalid_argument("EfiParams: eps must lie in [0, 1)");
  EfiParams p;
  p.s = s;
  p.gap_term = gap_term;
  p.eps = eps;
  p.s_star = max_entropy(g0) + gap_term;
  return p;
}

EfiSample efi_sample(const std::function<BitVec(Rng&)>& g0_sampler, size_t label_bits, size_t s, int b,
                     Rng& rng) {
  if (b != 0 && b != 1) throw std::invalid_argument("efi_sample: b must be 0 or 1");
  if (s > 3 * label_bits) throw std::invalid_argument("efi_sample: s exceeds the hash output length");
  HashSeed h = sample_hash_seed(rng, label_bits);
  if (b == 1) return {std::move(h), rng.bits(s)};
  const BitVec x = g0_sampler(rng);
  BitVec y = h.eval(x, s);
  return {std::move(h), std::move(y)};
}

EfiSample efi_sample(const Pmf& g0, size_t s, int b, Rng& rng) {
  return efi_sample([&g0](Rng& r) { return g0.sample(r); }, label_bits(g0), s, b, rng);
}

Estimate efi_distance(const Pmf& g0, size_t s, size_t seed_samples, Rng& rng) {
  const size_t l = label_bits(g0);
  if (s > 3 * l) throw std::invalid_argument("efi_distance: s exceeds the hash output length");
  return lhl_distance([l](Rng& r) { return sample_hash_seed(r, l); }, g0, s, seed_samples, rng);
}

double efi_support_bound(const Pmf& g0, size_t s) {
  return 1 - std::exp2(max_entropy(g0) - static_cast<double>(s));
}

SStar s_star(const Pmf& g0, double gap_term) {
  SStar out;
  out.h_max = max_entropy(g0);
  out.gap_term = gap_term;
  out.value = out.h_max + gap_term;
  out.log_output_bound = std::log2(3.0 * static_cast<double>(label_bits(g0)));
  return out;
}

std::vector<SweepRow> efi_sweep(const Pmf& g0, size_t s_begin, size_t s_end, size_t seed_samples, Rng& rng) {
  if (s_begin > s_end) throw std::invalid_argument("efi_sweep: empty range");
  std::vector<SweepRow> rows;
  const Rng base = rng.fork();
  for (size_t s = s_begin; s <= s_end; s++) {
    Rng stream = base.split(s);
    const Estimate e = efi_distance(g0, s, seed_samples, stream);
    rows.push_back({s, e.value, e.radius, std::max(0.0, efi_support_bound(g0, s))});
  }
  return rows;
}

Crossover efi_crossover(const Pmf& g0, double eps, double margin, size_t seed_samples, Rng& rng) {
  if (margin < 0) throw std::invalid_argument("efi_crossover: margin must be nonnegative");
  const size_t l = label_bits(g0);
  Crossover c;
  c.h_min_smooth = smooth_min_entropy(g0, eps);
  c.h_max = max_entropy(g0);
  c.margin = margin;
  c.s_low = static_cast<size_t>(std::max(0.0, std::ceil(c.h_min_smooth - margin - kEntropyTol)));
  c.s_high = std::min(static_cast<size_t>(std::floor(c.h_max + margin + kEntropyTol)), 3 * l);
  const Rng base = rng.fork();
  Rng low_rng = base.split("low");
  Rng high_rng = base.split("high");
  c.low = efi_distance(g0, c.s_low, seed_samples, low_rng);
  c.high = efi_distance(g0, c.s_high, seed_samples, high_rng);
  c.witnessed = c.low.value + c.low.radius < 0.1 && c.high.value - c.high.radius > 0.9;

  const double bound = efi_support_bound(g0, c.s_high);
  c.support_bound_holds = true;
  // Same seeds as the high estimate (lhl_distance forks once, then splits by index).
  Rng high_again = base.split("high");
  const Rng check = high_again.fork();
  for (size_t t = 0; t < seed_samples; t++) {
    Rng stream = check.split(t);
    const HashSeed h = sample_hash_seed(stream, l);
    if (hashed_distance_to_uniform(h, g0, c.s_high) < bound - kMassTol) c.support_bound_holds = false;
  }
  return c;
}

}  // namespace peglab
