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

#include "peglab/gf2.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "peglab/errors.h"

namespace peglab {

HashSeed::HashSeed(std::vector<BitVec> rows, BitVec offsets)
    : n_in_(rows.empty() ? 0 : rows.front().size()), rows_(std::move(rows)), offsets_(std::move(offsets)) {
  if (n_in_ == 0) throw std::invalid_argument("HashSeed needs n >= 1");
  if (rows_.size() != 3 * n_in_) throw std::invalid_argument("HashSeed needs exactly 3n rows");
  for (const auto& r : rows_) {
    if (r.size() != n_in_) throw std::invalid_argument("HashSeed rows must all have length n");
  }
  if (offsets_.size() != rows_.size()) throw std::invalid_argument("HashSeed needs 3n offset bits");
}

BitVec HashSeed::eval(const BitVec& x, size_t i) const {
  if (x.size() != n_in_) throw std::invalid_argument("hash input length mismatch");
  if (i > rows_.size()) throw std::out_of_range("hash output truncation exceeds 3n");
  BitVec out(i);
  for (size_t j = 0; j < i; j++) {
    if (rows_[j].dot(x) != offsets_.get(j)) out.set(j, true);
  }
  return out;
}

std::vector<uint8_t> HashSeed::encode() const {
  const size_t total_bits = rows_.size() * n_in_ + offsets_.size();
  std::vector<uint8_t> out(4 + (total_bits + 7) / 8, 0);
  uint32_t n = static_cast<uint32_t>(n_in_);
  for (size_t b = 0; b < 4; b++) out[b] = static_cast<uint8_t>((n >> (8 * b)) & 0xFF);
  size_t k = 0;
  auto put = [&](bool bit) {
    if (bit) out[4 + k / 8] |= static_cast<uint8_t>(1u << (k % 8));
    k++;
  };
  for (const auto& r : rows_) {
    for (size_t c = 0; c < n_in_; c++) put(r.get(c));
  }
  for (size_t j = 0; j < offsets_.size(); j++) put(offsets_.get(j));
  return out;
}

HashSeed HashSeed::decode(const std::vector<uint8_t>& bytes) {
  if (bytes.size() < 4) throw std::invalid_argument("HashSeed encoding missing header");
  size_t n = 0;
  for (size_t b = 0; b < 4; b++) n |= static_cast<size_t>(bytes[b]) << (8 * b);
  if (n == 0 || n > 4096) throw std::invalid_argument("HashSeed encoding has invalid n");
  const size_t total_bits = 3 * n * n + 3 * n;
  if (bytes.size() != 4 + (total_bits + 7) / 8) throw std::invalid_argument("HashSeed encoding length mismatch");
  size_t k = 0;
  auto take = [&]() {
    bool bit = (bytes[4 + k / 8] >> (k % 8)) & 1;
    k++;
    return bit;
  };
  std::vector<BitVec> rows(3 * n, BitVec(n));
  for (auto& r : rows) {
    for (size_t c = 0; c < n; c++) r.set(c, take());
  }
  BitVec offsets(3 * n);
  for (size_t j = 0; j < 3 * n; j++) offsets.set(j, take());
  return HashSeed(std::move(rows), std::move(offsets));
}

HashSeed sample_hash_seed(Rng& rng, size_t n) {
  if (n < 1) throw std::invalid_argument("sample_hash_seed requires n >= 1");
  std::vector<BitVec> rows;
  rows.reserve(3 * n);
  for (size_t j = 0; j < 3 * n; j++) rows.push_back(rng.bits(n));
  BitVec offsets = rng.bits(3 * n);
  return HashSeed(std::move(rows), std::move(offsets));
}

HashSeed sample_toeplitz_seed(Rng& rng, size_t n) {
  if (n < 1) throw std::invalid_argument("sample_toeplitz_seed requires n >= 1");
  BitVec diag = rng.bits(4 * n - 1);
  std::vector<BitVec> rows(3 * n, BitVec(n));
  for (size_t j = 0; j < 3 * n; j++) {
    for (size_t c = 0; c < n; c++) rows[j].set(c, diag.get(j + n - 1 - c));
  }
  BitVec offsets = rng.bits(3 * n);
  return HashSeed(std::move(rows), std::move(offsets));
}

BitVec hash_eval(const HashSeed& h, const BitVec& x, size_t i) { return h.eval(x, i); }

bool inner_product(const BitVec& x, const BitVec& r) { return x.dot(r); }

double extractor_distance(const Pmf& x) {
  auto width = x.label_width();
  if (!width) throw std::invalid_argument("extractor_distance needs equal-length labels");
  const size_t n = *width;
  if (n > 16) throw ParameterRejected("extractor_distance limited to n <= 16");
  const size_t dim = size_t{1} << n;
  std::vector<double> f(dim, 0.0);
  for (const auto& [label, q] : x.atoms()) f[label.to_uint()] += q;
  // Walsh-Hadamard transform: f[r] becomes sum_x p(x) (-1)^{<x,r>}.
  for (size_t len = 1; len < dim; len <<= 1) {
    for (size_t i = 0; i < dim; i += len << 1) {
      for (size_t j = i; j < i + len; j++) {
        double a = f[j];
        double b = f[j + len];
        f[j] = a + b;
        f[j + len] = a - b;
      }
    }
  }
  double total = 0;
  for (double v : f) total += std::abs(v) / 2;
  return total / static_cast<double>(dim);
}

double hoeffding_radius(size_t samples, double range, double confidence) {
  if (samples == 0) throw std::invalid_argument("hoeffding_radius needs at least one sample");
  if (!(confidence > 0 && confidence < 1)) throw std::invalid_argument("confidence must be in (0,1)");
  return range * std::sqrt(std::log(2.0 / (1.0 - confidence)) / (2.0 * static_cast<double>(samples)));
}

double hashed_distance_to_uniform(const HashSeed& h, const Pmf& x, size_t m) {
  if (m > h.n_out()) throw std::out_of_range("output length exceeds hash range");
  std::map<BitVec, double> image;
  for (const auto& [label, q] : x.atoms()) image[h.eval(label, m)] += q;
  const double u = std::ldexp(1.0, -static_cast<int>(m));
  double sum = 0;
  for (const auto& [y, q] : image) sum += std::abs(q - u);
  // Every string outside the image contributes 2^-m.
  double missing = 1.0 - static_cast<double>(image.size()) * u;
  return std::clamp((sum + missing) / 2, 0.0, 1.0);
}

Estimate lhl_distance(const std::function<HashSeed(Rng&)>& sampler, const Pmf& x, size_t m,
                      size_t n_seeds, Rng& rng) {
  auto width = x.label_width();
  if (!width) throw std::invalid_argument("lhl_distance needs equal-length labels");
  if (m > 3 * *width) throw std::invalid_argument("lhl_distance requires m <= 3n");
  if (n_seeds == 0) throw std::invalid_argument("lhl_distance needs at least one seed");
  double total = 0;
  const Rng base = rng.fork();
  for (size_t t = 0; t < n_seeds; t++) {
    Rng stream = base.split(t);
    total += hashed_distance_to_uniform(sampler(stream), x, m);
  }
  Estimate e;
  e.samples = n_seeds;
  e.value = total / static_cast<double>(n_seeds);
  e.radius = hoeffding_radius(n_seeds, 1.0);
  return e;
}

std::vector<BitVec> gl_decode(const std::function<bool(const BitVec&)>& predictor, size_t n,
                              double eps, Rng& rng, const GlConfig& config) {
  if (!(eps > 0)) throw std::invalid_argument("gl_decode requires eps > 0");
  if (n < 1) throw std::invalid_argument("gl_decode requires n >= 1");
  const double inv_eps2 = 1.0 / (eps * eps);
  const size_t queries = config.queries ? config.queries
                                        : static_cast<size_t>(std::ceil(64.0 * static_cast<double>(n) * inv_eps2));
  const size_t list_cap = config.list_cap ? config.list_cap : static_cast<size_t>(std::floor(4.0 * inv_eps2));

  size_t l = 1;
  while (l < 20 && (size_t{1} << (l + 1)) <= list_cap && n * ((size_t{1} << (l + 1)) - 1) <= queries) l++;

  std::vector<BitVec> basis;
  for (size_t j = 0; j < l; j++) basis.push_back(rng.bits(n));
  const size_t subsets = (size_t{1} << l) - 1;
  // answers[J-1][i] = predictor(r_J xor e_i), shared by every guess.
  std::vector<std::vector<uint8_t>> answers(subsets, std::vector<uint8_t>(n, 0));
  for (size_t mask = 1; mask <= subsets; mask++) {
    BitVec r(n);
    for (size_t j = 0; j < l; j++) {
      if ((mask >> j) & 1) r ^= basis[j];
    }
    for (size_t i = 0; i < n; i++) {
      BitVec q = r;
      q.flip(i);
      answers[mask - 1][i] = predictor(q) ? 1 : 0;
    }
  }

  std::vector<BitVec> out;
  for (size_t guess = 0; guess < (size_t{1} << l); guess++) {
    BitVec candidate(n);
    for (size_t i = 0; i < n; i++) {
      size_t ones = 0;
      for (size_t mask = 1; mask <= subsets; mask++) {
        bool rho = std::popcount(guess & mask) & 1;
        if (rho != static_cast<bool>(answers[mask - 1][i])) ones++;
      }
      if (2 * ones > subsets) candidate.set(i, true);
    }
    if (std::find(out.begin(), out.end(), candidate) == out.end()) out.push_back(candidate);
  }
  if (list_cap >= 1 && out.size() > list_cap) out.resize(list_cap);
  return out;
}

Rational collision_probability_exact(size_t n, const BitVec& x, const BitVec& x_prime, size_t i) {
  if (n < 1 || n > 3) throw ParameterRejected("exact pairwise counting limited to n <= 3");
  if (x.size() != n || x_prime.size() != n) throw std::invalid_argument("input length mismatch");
  if (i > 3 * n) throw std::out_of_range("truncation exceeds 3n");
  // Offsets cancel in h(x) xor h(x'), so a row contributes a collision on its bit iff
  // <a_j, x xor x'> = 0. Rows are independent: count one row, raise to the i-th power,
  // and multiply by the free choices of the remaining rows and offsets.
  const BitVec d = x ^ x_prime;
  boost::multiprecision::cpp_int good_rows = 0;
  const uint64_t row_space = uint64_t{1} << n;
  for (uint64_t a = 0; a < row_space; a++) {
    if (!BitVec::from_uint(a, n).dot(d)) good_rows += 1;
  }
  using boost::multiprecision::cpp_int;
  cpp_int colliding = boost::multiprecision::pow(good_rows, static_cast<unsigned>(i)) *
                      boost::multiprecision::pow(cpp_int(row_space), static_cast<unsigned>(3 * n - i)) *
                      boost::multiprecision::pow(cpp_int(2), static_cast<unsigned>(3 * n));
  cpp_int total = boost::multiprecision::pow(cpp_int(2), static_cast<unsigned>(HashSeed::seed_length(n)));
  return Rational(colliding, total);
}

Rational output_bit_probability_exact(size_t n, const BitVec& x, size_t j) {
  if (n < 1 || n > 3) throw ParameterRejected("exact counting limited to n <= 3");
  if (x.size() != n) throw std::invalid_argument("input length mismatch");
  if (j >= 3 * n) throw std::out_of_range("output bit index exceeds 3n");
  boost::multiprecision::cpp_int ones = 0;
  const uint64_t row_space = uint64_t{1} << n;
  for (uint64_t a = 0; a < row_space; a++) {
    for (int b = 0; b < 2; b++) {
      if (BitVec::from_uint(a, n).dot(x) != static_cast<bool>(b)) ones += 1;
    }
  }
  return Rational(ones, boost::multiprecision::cpp_int(2 * row_space));
}

}  // namespace peglab
