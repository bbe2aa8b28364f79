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

#include "peglab/pseudoentropy.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "peglab/errors.h"

namespace peglab {

namespace {

constexpr size_t kMaxKeyBits = 16;

size_t ceil_log2(size_t n) {
  size_t c = 0;
  while ((size_t{1} << c) < n) c++;
  return c;
}

size_t key_bits(const JointPmf& puzzle) {
  if (puzzle.atoms().empty()) throw std::invalid_argument("puzzle table is empty");
  const size_t n = puzzle.atoms().front().key.size();
  for (const auto& a : puzzle.atoms()) {
    if (a.key.size() != n) throw std::invalid_argument("puzzle keys must share one length");
  }
  if (n == 0 || n > kMaxKeyBits) throw ParameterRejected("puzzle keys must have 1..16 bits");
  return n;
}

size_t slice_index(const FlatSlice& slice, const SliceParams& params) {
  return static_cast<size_t>(slice.j_s) + params.pad;
}

void check_slice_index(size_t i_s, const SliceParams& params, size_t n) {
  if (i_s > params.i_max) {
    throw ParameterRejected("slice index i_s = " + std::to_string(i_s) + " exceeds i_max = " +
                            std::to_string(params.i_max));
  }
  if (i_s > 3 * n) throw ParameterRejected("slice index exceeds the hash output length 3n");
}

struct KeyEntry {
  BitVec key;
  double p;
  bool trigger;
};

// Sum_y w_y [H2(p1) - H2(p0)] averaged over all r, for keys grouped by y.
double bit_gap(const std::vector<std::vector<KeyEntry>>& groups, size_t n) {
  const uint64_t count = uint64_t{1} << n;
  std::vector<std::vector<uint64_t>> ids;
  for (const auto& g : groups) {
    std::vector<uint64_t> v;
    for (const auto& e : g) v.push_back(e.key.to_uint());
    ids.push_back(std::move(v));
  }
  double total = 0;
  for (uint64_t r = 0; r < count; r++) {
    for (size_t gi = 0; gi < groups.size(); gi++) {
      double w = 0;
      double one0 = 0;
      double one1 = 0;
      for (size_t e = 0; e < groups[gi].size(); e++) {
        const KeyEntry& k = groups[gi][e];
        const bool bit = std::popcount(ids[gi][e] & r) & 1;
        w += k.p;
        if (bit) one0 += k.p;
        one1 += k.trigger ? k.p / 2 : (bit ? k.p : 0);
      }
      total += w * (binary_entropy(one1 / w) - binary_entropy(one0 / w));
    }
  }
  return total / static_cast<double>(count);
}

// D(s, h, i_s): the contribution of one puzzle at the slicing index.
double puzzle_seed_gap(const Pmf& k_s, const HashSeed& h, const SliceParams& params, size_t n,
                       double* trigger_mass) {
  SliceAnalysis analysis(k_s, h, params);
  *trigger_mass = analysis.trigger_mass();
  if (*trigger_mass <= 0) return 0;
  std::map<BitVec, std::vector<KeyEntry>> by_y;
  for (const auto& [k, p] : k_s.atoms()) {
    const BitVec y = h.eval(k, analysis.i_s());
    by_y[y].push_back({k, p, analysis.in_g(k) && analysis.in_f(y)});
  }
  std::vector<std::vector<KeyEntry>> groups;
  for (auto& [y, entries] : by_y) {
    if (std::any_of(entries.begin(), entries.end(), [](const KeyEntry& e) { return e.trigger; })) {
      groups.push_back(std::move(entries));
    }
  }
  return bit_gap(groups, n);
}

std::vector<uint64_t> key_ids(const Pmf& p) {
  std::vector<uint64_t> out;
  for (const auto& [k, q] : p.atoms()) out.push_back(k.to_uint());
  return out;
}

}  // namespace

SliceParams SliceParams::defaults(size_t n) {
  if (n == 0) throw std::invalid_argument("SliceParams::defaults needs n >= 1");
  SliceParams p;
  const size_t lg = ceil_log2(n);
  p.levels = 2 * n;
  p.pad = 2 + lg;
  p.slack = 1 + lg;
  p.density_floor = 1.0 / (6.0 * static_cast<double>(n));
  p.mass_ceiling = 2.0 * std::pow(static_cast<double>(n), -600.0);
  p.i_max = 3 * n;
  return p;
}

void SliceParams::validate() const {
  if (levels < 1) throw std::invalid_argument("SliceParams: levels must be positive");
  if (pad < 1) throw std::invalid_argument("SliceParams: pad must be positive");
  if (slack >= pad) throw std::invalid_argument("SliceParams: slack must be below pad");
  if (i_max < 1) throw std::invalid_argument("SliceParams: i_max must be positive");
  if (!(density_floor > 0 && density_floor <= 1)) {
    throw std::invalid_argument("SliceParams: density_floor must lie in (0, 1]");
  }
  if (!std::isfinite(mass_ceiling) || mass_ceiling < 0) {
    throw std::invalid_argument("SliceParams: mass_ceiling must be finite and nonnegative");
  }
}

FlatSlice find_flat_slice(const Pmf& k_s, const SliceParams& params) {
  params.validate();
  if (k_s.empty()) throw std::invalid_argument("find_flat_slice: empty support");
  FlatSlice out;
  out.bucket_mass.assign(params.levels, 0.0);
  for (const auto& [k, p] : k_s.atoms()) {
    const double j = std::floor(-std::log2(p) + kEntropyTol);
    if (j >= static_cast<double>(params.levels)) {
      out.tail += p;
    } else {
      out.bucket_mass[static_cast<size_t>(std::max(j, 0.0))] += p;
    }
  }
  size_t best = 0;
  for (size_t j = 1; j < params.levels; j++) {
    if (out.bucket_mass[j] > out.bucket_mass[best]) best = j;
  }
  out.j_s = static_cast<int>(best);
  out.mass = out.bucket_mass[best];
  for (const auto& [k, p] : k_s.atoms()) {
    const double j = std::floor(-std::log2(p) + kEntropyTol);
    if (std::max(j, 0.0) == static_cast<double>(best)) out.g_s.push_back(k);
  }
  return out;
}

SliceAnalysis::SliceAnalysis(const Pmf& k_s, const HashSeed& h, const SliceParams& params)
    : slice_(find_flat_slice(k_s, params)),
      density_floor_(params.density_floor),
      disabled_(params.trigger_disabled()) {
  if (k_s.label_width() != h.n_in()) throw std::invalid_argument("key length does not match hash input");
  i_s_ = slice_index(slice_, params);
  check_slice_index(i_s_, params, h.n_in());
  const double limit = static_cast<double>(slice_.j_s + static_cast<int>(params.slack)) + kEntropyTol;
  for (const auto& [k, p] : k_s.atoms()) {
    if (-std::log2(p) <= limit) {
      a_s_.push_back(k);
      a_set_.insert(k);
    }
  }
  g_set_.insert(slice_.g_s.begin(), slice_.g_s.end());
  for (const auto& [k, p] : k_s.atoms()) {
    Bin& bin = bins_[h.eval(k, i_s_)];
    bin.mass += p;
    if (in_g(k)) bin.slice_mass += p;
    if (in_a(k)) bin.a_count++;
  }
}

bool SliceAnalysis::in_f(const BitVec& y) const {
  if (disabled_) return false;
  auto it = bins_.find(y);
  if (it == bins_.end()) return false;
  const Bin& b = it->second;
  return b.slice_mass / b.mass >= density_floor_ - kMassTol && b.a_count <= 1;
}

double SliceAnalysis::conditional_slice_mass(const BitVec& y) const {
  auto it = bins_.find(y);
  if (it == bins_.end()) return 0;
  return it->second.slice_mass / it->second.mass;
}

double SliceAnalysis::trigger_mass() const {
  double m = 0;
  for (const auto& [y, bin] : bins_) {
    if (in_f(y)) m += bin.slice_mass;
  }
  return m;
}

std::vector<BitConditional> g_pair_conditional(const Pmf& k_s, const HashSeed& h, size_t i, const BitVec& r,
                                                const SliceAnalysis& analysis) {
  if (i > h.n_out()) throw std::out_of_range("g_pair_conditional: i exceeds 3n");
  if (r.size() != h.n_in()) throw std::invalid_argument("g_pair_conditional: r has the wrong length");
  struct Acc {
    double w = 0;
    double one0 = 0;
    double one1 = 0;
  };
  std::map<BitVec, Acc> acc;
  for (const auto& [k, p] : k_s.atoms()) {
    const BitVec y = h.eval(k, i);
    const bool bit = k.dot(r);
    const bool trigger = i == analysis.i_s() && analysis.in_g(k) && analysis.in_f(y);
    Acc& a = acc[y];
    a.w += p;
    if (bit) a.one0 += p;
    a.one1 += trigger ? p / 2 : (bit ? p : 0);
  }
  std::vector<BitConditional> out;
  for (const auto& [y, a] : acc) {
    out.push_back({y, a.w, Pmf::bernoulli(std::clamp(a.one0 / a.w, 0.0, 1.0)),
                   Pmf::bernoulli(std::clamp(a.one1 / a.w, 0.0, 1.0))});
  }
  return out;
}

double wpeg_seed_value(const JointPmf& puzzle, const HashSeed& h, const SliceParams& params) {
  const size_t n = key_bits(puzzle);
  double total = 0;
  const Pmf marginal = puzzle.puzzle_marginal();
  for (const auto& [s, ps] : marginal.atoms()) {
    double trig = 0;
    total += ps * puzzle_seed_gap(condition(puzzle, s), h, params, n, &trig);
  }
  return total;
}

GapReport wpeg_entropy_gap(const JointPmf& puzzle, const SliceParams& params, size_t seed_samples, Rng& rng) {
  params.validate();
  const size_t n = key_bits(puzzle);
  if (seed_samples == 0) throw std::invalid_argument("wpeg_entropy_gap needs seed_samples >= 1");
  const double three_n = 3.0 * static_cast<double>(n);

  struct PuzzleCtx {
    BitVec s;
    double weight;
    Pmf k_s;
  };
  std::vector<PuzzleCtx> ctx;
  GapReport report;
  report.key_bits = n;
  const Pmf marginal = puzzle.puzzle_marginal();
  for (const auto& [s, ps] : marginal.atoms()) {
    Pmf k_s = condition(puzzle, s);
    const FlatSlice slice = find_flat_slice(k_s, params);
    const size_t i_s = slice_index(slice, params);
    check_slice_index(i_s, params, n);
    report.per_s.push_back({s, ps, slice.j_s, i_s, slice.mass, 0, 0});
    ctx.push_back({s, ps, std::move(k_s)});
  }

  if (params.trigger_disabled()) {
    report.exact = true;
    report.seed_samples = 0;
    return report;
  }

  double sum = 0;
  double trigger = 0;
  const Rng base = rng.fork();
  for (size_t t = 0; t < seed_samples; t++) {
    Rng child = base.split(t);
    const HashSeed h = sample_hash_seed(child, n);
    double value = 0;
    for (size_t j = 0; j < ctx.size(); j++) {
      double trig = 0;
      const double d = puzzle_seed_gap(ctx[j].k_s, h, params, n, &trig);
      value += ctx[j].weight * d;
      report.per_s[j].gap_contribution += ctx[j].weight * d;
      report.per_s[j].trigger_mass += trig;
      trigger += ctx[j].weight * trig;
    }
    sum += std::clamp(value, -1.0, 1.0);
  }
  const double samples = static_cast<double>(seed_samples);
  for (auto& p : report.per_s) {
    p.gap_contribution /= samples * three_n;
    p.trigger_mass /= samples;
  }
  report.seed_samples = seed_samples;
  report.gap = sum / samples / three_n;
  report.radius = hoeffding_radius(seed_samples, 2.0) / three_n;
  report.trigger_mass = trigger / samples / three_n;
  return report;
}

std::pair<Pmf, Pmf> g_distributions(const JointPmf& puzzle, const HashSeed& h, const SliceParams& params) {
  const size_t n = key_bits(puzzle);
  if (h.n_in() != n) throw std::invalid_argument("hash input length does not match keys");
  const size_t atoms_bound = puzzle.atoms().size() * 3 * n * (size_t{1} << n) * 2;
  if (atoms_bound > kMaxProductAtoms) throw ParameterRejected("g_distributions would exceed 2^24 atoms");
  const double scale = 1.0 / (3.0 * static_cast<double>(n) * std::ldexp(1.0, static_cast<int>(n)));
  std::vector<Pmf::Atom> g0;
  std::vector<Pmf::Atom> g1;
  const Pmf marginal = puzzle.puzzle_marginal();
  for (const auto& [s, ps] : marginal.atoms()) {
    const Pmf k_s = condition(puzzle, s);
    const SliceAnalysis analysis(k_s, h, params);
    for (size_t i = 1; i <= 3 * n; i++) {
      const BitVec i_bits = BitVec::from_uint(i, 16);
      for (uint64_t rv = 0; rv < (uint64_t{1} << n); rv++) {
        const BitVec r = BitVec::from_uint(rv, n);
        for (const auto& [k, p] : k_s.atoms()) {
          const BitVec y = h.eval(k, i);
          const bool bit = k.dot(r);
          const double w = ps * p * scale;
          auto label = [&](bool b) { return BitVec::tuple({s, i_bits, r, y, BitVec::from_uint(b, 1)}); };
          g0.emplace_back(label(bit), w);
          if (i == analysis.i_s() && analysis.in_g(k) && analysis.in_f(y)) {
            g1.emplace_back(label(false), w / 2);
            g1.emplace_back(label(true), w / 2);
          } else {
            g1.emplace_back(label(bit), w);
          }
        }
      }
    }
  }
  return {Pmf::from_atoms(std::move(g0)), Pmf::from_atoms(std::move(g1))};
}

BiasedCoin biased_coin_bounds(double d) {
  if (!(d >= 0 && d <= 1)) throw std::invalid_argument("biased_coin_bounds: d must lie in [0, 1]");
  BiasedCoin c;
  c.d = d;
  c.entropy = binary_entropy((1 + d) / 2);
  c.lower = 1 - d * d;
  c.upper = 1 - d * d / 2;
  c.lower_applies = d <= 0.5;
  c.holds = c.entropy <= c.upper + kEntropyTol && (!c.lower_applies || c.entropy >= c.lower - kEntropyTol);
  return c;
}

CoreLemmaReport core_lemma_gap(const Pmf& x, const BitVec& x_star, double theta_heavy, double theta_light) {
  const size_t n = x_star.size();
  if (n == 0 || n > kMaxKeyBits) throw ParameterRejected("core_lemma_gap supports 1 <= n <= 16");
  if (x.empty() || x.label_width() != n) throw std::invalid_argument("X must be a Pmf over {0,1}^n");
  CoreLemmaReport rep;
  rep.p_star = x.prob(x_star);
  if (rep.p_star < theta_heavy) {
    throw std::invalid_argument("core_lemma_gap: heavy clause violated, Pr[x*] is below theta_heavy");
  }
  for (const auto& [v, p] : x.atoms()) {
    if (v != x_star && p > theta_light) {
      throw std::invalid_argument("core_lemma_gap: light clause violated by atom " + v.to_string());
    }
  }
  rep.heavy_case = rep.p_star > 1 - 1.0 / static_cast<double>(n);

  // Walsh-Hadamard transform gives E[(-1)^<X,r>] for every r at once.
  const size_t count = size_t{1} << n;
  std::vector<double> w(count, 0.0);
  const std::vector<uint64_t> ids = key_ids(x);
  for (size_t a = 0; a < ids.size(); a++) w[ids[a]] += x.atoms()[a].second;
  for (size_t len = 1; len < count; len <<= 1) {
    for (size_t base = 0; base < count; base += 2 * len) {
      for (size_t j = base; j < base + len; j++) {
        const double u = w[j];
        const double v = w[j + len];
        w[j] = u + v;
        w[j + len] = u - v;
      }
    }
  }
  const uint64_t star = x_star.to_uint();
  double gap = 0;
  double bound = 0;
  for (uint64_t r = 0; r < count; r++) {
    const double one0 = std::clamp((1 - w[r]) / 2, 0.0, 1.0);
    const bool star_bit = std::popcount(star & r) & 1;
    const double one1 = std::clamp(one0 - (star_bit ? rep.p_star : 0) + rep.p_star / 2, 0.0, 1.0);
    gap += binary_entropy(one1) - binary_entropy(one0);
    const double b0 = std::abs(2 * one0 - 1);
    const double b1 = std::abs(2 * one1 - 1);
    bound += (b1 <= 0.5 ? 1 - b1 * b1 : 0.0) - (1 - b0 * b0 / 2);
  }
  rep.gap = gap / static_cast<double>(count);
  rep.bound = bound / static_cast<double>(count);
  return rep;
}

PublicSlicingReport public_slicing_check(const Pmf& a, const std::map<BitVec, Pmf>& b0_given_a,
                                         const std::map<BitVec, Pmf>& b1_given_a,
                                         const std::set<BitVec>& a_star) {
  PublicSlicingReport rep;
  std::vector<Pmf::Atom> j0;
  std::vector<Pmf::Atom> j1;
  bool first = true;
  for (const auto& [av, pa] : a.atoms()) {
    auto i0 = b0_given_a.find(av);
    auto i1 = b1_given_a.find(av);
    if (i0 == b0_given_a.end() || i1 == b1_given_a.end()) {
      throw std::invalid_argument("public_slicing_check: missing conditional for " + av.to_string());
    }
    const double diff = shannon_entropy(i1->second) - shannon_entropy(i0->second);
    const bool starred = a_star.count(av) > 0;
    if (!starred && std::abs(diff) > kEntropyTol) {
      throw std::invalid_argument("public_slicing_check: conditionals differ in entropy outside A*");
    }
    if (starred) {
      rep.d = first ? diff : std::min(rep.d, diff);
      first = false;
      rep.a_star_mass += pa;
    }
    rep.chain_rule_difference += pa * diff;
    for (const auto& [bv, pb] : i0->second.atoms()) j0.emplace_back(BitVec::tuple({av, bv}), pa * pb);
    for (const auto& [bv, pb] : i1->second.atoms()) j1.emplace_back(BitVec::tuple({av, bv}), pa * pb);
  }
  rep.joint_difference =
      shannon_entropy(Pmf::from_atoms(std::move(j1))) - shannon_entropy(Pmf::from_atoms(std::move(j0)));
  rep.bound = rep.d * rep.a_star_mass;
  rep.holds = rep.joint_difference >= rep.bound - kEntropyTol;
  return rep;
}

double concentration_deviation(int t, double eps, size_t alphabet) {
  if (eps <= 0) return std::numeric_limits<double>::infinity();
  return std::sqrt(2.0 * t * std::log2(1 / eps)) * std::log2(3.0 + static_cast<double>(alphabet));
}

PegReport peg_product(const Pmf& g0, const Pmf& g1, const PegParams& params) {
  if (params.q < 1) throw std::invalid_argument("peg_product: q must be >= 1");
  if (!(params.eps >= 0 && params.eps < 1)) throw std::invalid_argument("peg_product: eps must lie in [0, 1)");
  PegReport rep;
  rep.t = params.q;
  rep.eps = params.eps;
  rep.h_min_smooth_g1 = smooth_min_entropy(product_spectrum(g1, params.q), params.eps);
  rep.h_max_smooth_g0 = smooth_max_entropy(product_spectrum(g0, params.q), params.eps);
  rep.difference = rep.h_min_smooth_g1 - rep.h_max_smooth_g0;
  rep.shannon_g0 = shannon_entropy(g0);
  rep.shannon_g1 = shannon_entropy(g1);
  rep.concentration_lower_g1 =
      params.q * rep.shannon_g1 - concentration_deviation(params.q, params.eps, g1.support_size());
  rep.concentration_upper_g0 =
      params.q * rep.shannon_g0 + concentration_deviation(params.q, params.eps, g0.support_size());
  const double n = static_cast<double>(params.n);
  const double l2 = static_cast<double>(params.output_len) * static_cast<double>(params.output_len);
  rep.q_statement = std::pow(n, params.c + 3) * l2;
  rep.q_proof = std::pow(n, 2 * params.c + 3) * l2;
  auto fits = [&](const Pmf& g) {
    return std::pow(static_cast<double>(g.support_size()), params.q) <= static_cast<double>(kMaxProductAtoms);
  };
  if (fits(g0)) rep.product_g0 = product_power(g0, params.q);
  if (fits(g1)) rep.product_g1 = product_power(g1, params.q);
  return rep;
}

Distinguisher likelihood_ratio_distinguisher(const JointPmf& puzzle, const SliceParams& params) {
  params.validate();
  auto cache = std::make_shared<std::map<BitVec, Pmf>>();
  for (const auto& s : puzzle.puzzles()) (*cache)[s] = condition(puzzle, s);
  return [cache, params](const GSample& g) {
    auto it = cache->find(g.s);
    if (it == cache->end() || params.trigger_disabled()) return false;
    const Pmf& k_s = it->second;
    const SliceAnalysis analysis(k_s, g.h, params);
    if (g.i != analysis.i_s()) return false;
    double p0 = 0;
    double p1 = 0;
    const bool triggered = analysis.in_f(g.y);
    for (const auto& [k, p] : k_s.atoms()) {
      if (g.h.eval(k, g.i) != g.y) continue;
      const bool bit = k.dot(g.r);
      if (bit == g.bit) p0 += p;
      if (triggered && analysis.in_g(k)) {
        p1 += p / 2;
      } else if (bit == g.bit) {
        p1 += p;
      }
    }
    return p1 > p0 + kMassTol;
  };
}

InverterReport distinguisher_to_inverter(const PuzzleInstance& puzzle, const Distinguisher& distinguisher,
                                         const SliceParams& params, const InverterParams& inverter,
                                         size_t trials, Rng& rng) {
  if (trials == 0) throw std::invalid_argument("distinguisher_to_inverter: trials must be positive");
  if (!puzzle.exact_joint) throw std::invalid_argument("distinguisher_to_inverter needs a tabulated puzzle");
  params.validate();
  const JointPmf& joint = *puzzle.exact_joint;
  const size_t n = key_bits(joint);
  const size_t ell_star = inverter.ell_star ? inverter.ell_star : params.pad;
  if (ell_star > 20) throw ParameterRejected("suffix guessing limited to 20 bits");

  std::map<BitVec, double> accepted_keys;
  for (const auto& a : joint.atoms()) accepted_keys[a.puzzle] += 1;
  const double space = std::ldexp(1.0, static_cast<int>(n));

  InverterReport rep;
  rep.trials = trials;
  rep.random_guess_baseline = 1 / space;
  double baseline = 0;
  double candidates = 0;
  const Rng base = rng.fork();
  for (size_t t = 0; t < trials; t++) {
    Rng trial = base.split(t);
    Rng samp_rng = trial.split("samp");
    const auto [k, s] = puzzle.samp(samp_rng);
    Rng local = trial.split("invert");
    const HashSeed h = sample_hash_seed(local, n);
    const size_t i = 1 + static_cast<size_t>(local.below(3 * n));
    const size_t li = std::min(i, ell_star);
    const BitVec u = local.bits(i - li);
    std::set<BitVec> tested;
    bool success = false;
    for (uint64_t g = 0; g < (uint64_t{1} << li) && !success; g++) {
      const BitVec y = u.concat(BitVec::from_uint(g, li));
      auto predictor = [&](const BitVec& r) {
        const bool b = local.bernoulli(0.5);
        return b != distinguisher(GSample{s, h, i, r, y, b});
      };
      for (const BitVec& c : gl_decode(predictor, n, inverter.gl_eps, local, inverter.gl)) {
        if (!tested.insert(c).second) continue;
        if (puzzle.ver(c, s)) {
          success = true;
          break;
        }
      }
    }
    if (success) rep.successes++;
    const double q = static_cast<double>(tested.size());
    candidates += q;
    baseline += 1 - std::pow(1 - accepted_keys[s] / space, q);
  }
  const double tr = static_cast<double>(trials);
  rep.success_rate = static_cast<double>(rep.successes) / tr;
  rep.radius = hoeffding_radius(trials, 1.0);
  rep.budget_matched_baseline = baseline / tr;
  rep.mean_candidates = candidates / tr;
  return rep;
}

}  // namespace peglab
