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

#ifndef PEGLAB_TESTS_TEST_UTIL_H_
#define PEGLAB_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cmath>
#include <vector>

#include "peglab/dist.h"
#include "peglab/rng.h"

namespace peglab::testing_util {

/// Random Pmf on `width`-bit labels with a random support (at least one atom).
inline Pmf random_pmf(Rng& rng, size_t width) {
  const size_t count = size_t{1} << width;
  std::vector<double> probs(count, 0.0);
  double total = 0;
  for (size_t i = 0; i < count; i++) {
    if (rng.bernoulli(0.6)) total += (probs[i] = rng.uniform() + 1e-3);
  }
  if (total == 0) {
    probs[rng.below(count)] = 1;
    total = 1;
  }
  for (double& q : probs) q /= total;
  return Pmf::from_probabilities(probs, width);
}

/// Shannon entropy in long double, straight from the definition.
inline long double oracle_shannon(const Pmf& p) {
  long double h = 0;
  for (const auto& [x, q] : p.atoms()) {
    const long double v = q;
    h -= v * std::log2(v);
  }
  return h;
}

/// -log2 of the water-filling cap, found by bisection on the trimmed mass.
inline long double oracle_smooth_min(const Pmf& p, double eps) {
  long double lo = 0, hi = 1;
  for (int it = 0; it < 200; it++) {
    const long double mid = (lo + hi) / 2;
    long double cut = 0;
    for (const auto& [x, q] : p.atoms()) cut += std::max<long double>(q - mid, 0);
    (cut > eps ? lo : hi) = mid;
  }
  return -std::log2(hi);
}

/// Random perturbation of p within SD eps: moves mass off the heaviest atoms onto
/// fresh atoms. Returns -log2 of the largest resulting atom.
inline double perturbed_min_entropy(const Pmf& p, double eps, Rng& rng) {
  std::vector<double> q;
  for (const auto& [x, v] : p.atoms()) q.push_back(v);
  std::sort(q.rbegin(), q.rend());
  double budget = eps * rng.uniform();
  for (size_t i = 0; i < q.size() && budget > 0; i++) {
    const double take = std::min(budget, q[i] * rng.uniform());
    q[i] -= take;
    budget -= take;
  }
  // Relocated mass is spread over enough fresh atoms to stay below the current max.
  return -std::log2(*std::max_element(q.begin(), q.end()));
}

/// H(R, alpha_1(X, R)) - H(R, alpha_0(X, R)) by materializing both joint tables:
/// alpha_0 = <X, R>, alpha_1 replaces the bit by a fair coin when X = x_star.
inline double oracle_core_lemma_gap(const Pmf& x, const BitVec& x_star) {
  const size_t n = x_star.size();
  std::vector<Pmf::Atom> a0, a1;
  for (uint64_t rv = 0; rv < (uint64_t{1} << n); rv++) {
    const BitVec r = BitVec::from_uint(rv, n);
    const double pr = std::ldexp(1.0, -static_cast<int>(n));
    double one0 = 0, one1 = 0;
    for (const auto& [k, p] : x.atoms()) {
      const bool bit = k.dot(r);
      if (bit) one0 += p;
      one1 += (k == x_star) ? p / 2 : (bit ? p : 0);
    }
    a0.emplace_back(r.concat(BitVec::from_string("0")), pr * (1 - one0));
    a0.emplace_back(r.concat(BitVec::from_string("1")), pr * one0);
    a1.emplace_back(r.concat(BitVec::from_string("0")), pr * (1 - one1));
    a1.emplace_back(r.concat(BitVec::from_string("1")), pr * one1);
  }
  return static_cast<double>(oracle_shannon(Pmf::from_atoms(a1)) - oracle_shannon(Pmf::from_atoms(a0)));
}

}  // namespace peglab::testing_util

#endif  // PEGLAB_TESTS_TEST_UTIL_H_
