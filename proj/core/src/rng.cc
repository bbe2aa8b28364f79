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

#include "peglab/rng.h"

#include <stdexcept>

namespace peglab {

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t fnv1a64(std::string_view text) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : text) {
    h ^= static_cast<uint8_t>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t Rng::next_u64() {
  uint64_t out = mix64(key_ + mix64(counter_));
  counter_++;
  return out;
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

uint64_t Rng::below(uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below requires n > 0");
  uint64_t limit = max() - max() % n;
  while (true) {
    uint64_t v = next_u64();
    if (v < limit) return v % n;
  }
}

bool Rng::bernoulli(double p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  return uniform() < p;
}

BitVec Rng::bits(size_t n) {
  BitVec out(n);
  uint64_t word = 0;
  for (size_t j = 0; j < n; j++) {
    if (j % 64 == 0) word = next_u64();
    if ((word >> (j % 64)) & 1) out.set(j, true);
  }
  return out;
}

Rng Rng::split(uint64_t tag) const {
  return Rng(RawKey{}, mix64(key_ ^ mix64(tag ^ 0x632be59bd9b4e019ULL)));
}

Rng Rng::derive(uint64_t seed, std::string_view subcommand, uint64_t trial_index) {
  return Rng(seed).split(subcommand).split(trial_index);
}

}  // namespace peglab
