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

// Acceptance runner. Prints one PASS/FAIL line per criterion; exits nonzero when
// any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "peglab/commit.h"
#include "peglab/dist.h"
#include "peglab/efi.h"
#include "peglab/fixtures.h"
#include "peglab/gf2.h"
#include "peglab/pseudoentropy.h"
#include "peglab/puzzles.h"
#include "test_util.h"

#ifndef PEGLAB_CLI_PATH
#define PEGLAB_CLI_PATH "peglab-run"
#endif
#ifndef PEGLAB_MANIFEST_DIR
#define PEGLAB_MANIFEST_DIR "manifests"
#endif

namespace peglab {
namespace {

using testing_util::oracle_core_lemma_gap;
using testing_util::oracle_shannon;
using testing_util::oracle_smooth_min;
using testing_util::random_pmf;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit;  // seconds; 0 means none
  std::function<Outcome()> body;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, a);
  return buf;
}

// Random source over n bits with a few shapes so measured H_min spans a range.
Pmf random_source(Rng& rng, size_t n) {
  const size_t count = size_t{1} << n;
  const size_t support = 1 + rng.below(std::min<size_t>(count, 64));
  std::set<uint64_t> labels;
  while (labels.size() < support) labels.insert(rng.below(count));
  std::vector<Pmf::Atom> atoms;
  double total = 0;
  const int shape = static_cast<int>(rng.below(3));
  size_t idx = 0;
  for (uint64_t v : labels) {
    double w = rng.uniform() + 1e-3;
    if (shape == 1) w = std::ldexp(1.0, -static_cast<int>(idx % 12));
    if (shape == 2) w = 1;
    atoms.emplace_back(BitVec::from_uint(v, n), w);
    total += w;
    idx++;
  }
  for (auto& a : atoms) a.second /= total;
  return Pmf::from_atoms(std::move(atoms));
}

Outcome entropy_toolkit() {
  Rng rng(1001);
  size_t mismatches = 0;
  size_t search_violations = 0;
  double worst = 0;
  for (int t = 0; t < 200; t++) {
    const Pmf p = random_pmf(rng, 1 + rng.below(6));
    long double mx = 0, mn = 1;
    for (const auto& [x, q] : p.atoms()) {
      mx = std::max<long double>(mx, q);
      mn = std::min<long double>(mn, q);
    }
    const double errs[] = {std::abs(shannon_entropy(p) - static_cast<double>(oracle_shannon(p))),
                           std::abs(min_entropy(p) - static_cast<double>(-std::log2(mx))),
                           std::abs(max_entropy(p) - static_cast<double>(-std::log2(mn)))};
    for (double e : errs) {
      worst = std::max(worst, e);
      mismatches += e > 1e-9;
    }
    const double eps = 0.5 * rng.uniform();
    const double wf = smooth_min_entropy(p, eps);
    const double err = std::abs(wf - static_cast<double>(oracle_smooth_min(p, eps)));
    worst = std::max(worst, err);
    mismatches += err > 1e-9;
    if (t < 20) {
      double best = -1;
      for (int step = 0; step < 10000; step++) best = std::max(best, testing_util::perturbed_min_entropy(p, eps, rng));
      search_violations += best > wf + 1e-6;
    }
  }
  return {mismatches == 0 && search_violations == 0,
          "max oracle error " + fmt("%.2e", worst) + ", mismatches " + std::to_string(mismatches) +
              ", search violations " + std::to_string(search_violations)};
}

Outcome extractor_bound() {
  Rng rng(1002);
  size_t violations = 0;
  double tightest = -1;
  for (int t = 0; t < 500; t++) {
    const size_t n = 1 + rng.below(10);
    const Pmf x = random_source(rng, n);
    const double k = min_entropy(x);
    const double d = extractor_distance(x);
    const double bound = std::pow(2.0, (1 - k) / 2);
    violations += d > bound;
    tightest = std::max(tightest, d / bound);
  }
  return {violations == 0,
          "violations " + std::to_string(violations) + ", max distance/bound " + fmt("%.4f", tightest)};
}

Outcome pairwise_independence() {
  size_t failures = 0;
  size_t checks = 0;
  for (size_t n = 1; n <= 3; n++) {
    const uint64_t count = uint64_t{1} << n;
    for (uint64_t a = 0; a < count; a++) {
      for (uint64_t b = 0; b < count; b++) {
        if (a == b) continue;
        const BitVec x = BitVec::from_uint(a, n), xp = BitVec::from_uint(b, n);
        const BitVec d = x ^ xp;
        // Independent count: rows a_j with <a_j, d> = 0, one factor per output bit.
        uint64_t zero_rows = 0;
        for (uint64_t r = 0; r < count; r++) zero_rows += !BitVec::from_uint(r, n).dot(d);
        for (size_t i = 0; i <= 3 * n; i++) {
          const Rational expect = Rational(1) / Rational(boost::multiprecision::cpp_int(1) << i);
          Rational oracle = 1;
          for (size_t j = 0; j < i; j++) oracle *= Rational(zero_rows, count);
          failures += collision_probability_exact(n, x, xp, i) != expect;
          failures += oracle != expect;
          checks++;
        }
      }
    }
  }
  // Full seed enumeration, offsets included, where it is small enough.
  for (size_t n = 1; n <= 2; n++) {
    for (size_t i = 1; i <= 3; i++) {
      const size_t bits = (n + 1) * i;
      for (uint64_t a = 0; a < (uint64_t{1} << n); a++) {
        for (uint64_t b = a + 1; b < (uint64_t{1} << n); b++) {
          uint64_t collide = 0;
          for (uint64_t seed = 0; seed < (uint64_t{1} << bits); seed++) {
            bool same = true;
            for (size_t j = 0; j < i; j++) {
              const BitVec row = BitVec::from_uint((seed >> (j * (n + 1))) & ((uint64_t{1} << n) - 1), n);
              const bool off = (seed >> (j * (n + 1) + n)) & 1;
              same &= (row.dot(BitVec::from_uint(a, n)) ^ off) == (row.dot(BitVec::from_uint(b, n)) ^ off);
            }
            collide += same;
          }
          failures += Rational(collide, uint64_t{1} << bits) != Rational(1, uint64_t{1} << i);
          checks++;
        }
      }
    }
  }
  return {failures == 0, std::to_string(checks) + " exact checks, failures " + std::to_string(failures)};
}

Outcome goldreich_levin() {
  Rng rng(1004);
  const size_t n = 8;
  int noiseless = 0;
  for (int t = 0; t < 100; t++) {
    const BitVec a = rng.bits(n);
    const auto list = gl_decode([&a](const BitVec& r) { return a.dot(r); }, n, 0.15, rng);
    noiseless += std::find(list.begin(), list.end(), a) != list.end();
  }
  const int trials = 1000;
  const double eps = 0.15;
  int recovered = 0;
  for (int t = 0; t < trials; t++) {
    const BitVec a = rng.bits(n);
    // Flip exactly 35% of the 256 inputs, chosen uniformly.
    std::vector<uint64_t> order(256);
    for (uint64_t i = 0; i < 256; i++) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> flipped(256, 0);
    for (size_t i = 0; i < static_cast<size_t>(std::lround(0.35 * 256)); i++) flipped[order[i]] = 1;
    auto oracle = [&](const BitVec& r) { return a.dot(r) ^ (flipped[r.to_uint()] != 0); };
    const auto list = gl_decode(oracle, n, eps, rng);
    recovered += std::find(list.begin(), list.end(), a) != list.end();
  }
  const double rate = recovered / static_cast<double>(trials);
  return {noiseless == 100 && rate >= 4 * eps * eps,
          "noiseless " + std::to_string(noiseless) + "/100, noisy recovery " + fmt("%.3f", rate) + " (target 0.09)"};
}

Outcome biased_coin() {
  size_t failures = 0;
  double min_slack = 1;
  for (int i = 0; i <= 1000; i++) {
    const double d = i * 1e-3;
    const BiasedCoin c = biased_coin_bounds(d);
    const double p = (1 + d) / 2;
    const double h = (p <= 0 || p >= 1) ? 0 : -(p * std::log2(p) + (1 - p) * std::log2(1 - p));
    const double upper_slack = (1 - d * d / 2) - h;
    min_slack = std::min(min_slack, upper_slack);
    failures += upper_slack < -1e-9;
    if (d <= 0.5) {
      const double lower_slack = h - (1 - d * d);
      min_slack = std::min(min_slack, lower_slack);
      failures += lower_slack < -1e-9;
    }
    failures += !c.holds;
    failures += std::abs(c.entropy - h) > 1e-12;
  }
  return {failures == 0, "min slack " + fmt("%.3e", min_slack) + ", failures " + std::to_string(failures)};
}

Outcome public_slicing() {
  Rng rng(1006);
  size_t failures = 0;
  for (int t = 0; t < 100; t++) {
    const Pmf a = random_pmf(rng, 1 + rng.below(3));
    std::map<BitVec, Pmf> b0, b1;
    std::set<BitVec> star;
    for (const auto& [av, pa] : a.atoms()) {
      const Pmf base = random_pmf(rng, 2);
      b0[av] = base;
      if (rng.bernoulli(0.5)) {
        star.insert(av);
        b1[av] = mixture({{0.5, base}, {0.5, Pmf::uniform_bits(2)}});
      } else {
        // Relabelled copy: equal entropy, different distribution.
        b1[av] = push_forward(base, [](const BitVec& x) { return x ^ BitVec::from_string("11"); });
      }
    }
    const PublicSlicingReport r = public_slicing_check(a, b0, b1, star);
    // Independent joint entropies from explicit tables.
    std::vector<Pmf::Atom> j0, j1;
    for (const auto& [av, pa] : a.atoms()) {
      for (const auto& [bv, pb] : b0[av].atoms()) j0.emplace_back(av.concat(bv), pa * pb);
      for (const auto& [bv, pb] : b1[av].atoms()) j1.emplace_back(av.concat(bv), pa * pb);
    }
    const double joint =
        static_cast<double>(oracle_shannon(Pmf::from_atoms(j1)) - oracle_shannon(Pmf::from_atoms(j0)));
    failures += std::abs(joint - r.joint_difference) > 1e-9;
    failures += std::abs(r.chain_rule_difference - r.joint_difference) > 1e-9;
    failures += r.joint_difference < r.d * r.a_star_mass - 1e-9;
  }
  return {failures == 0, "100 instances, failures " + std::to_string(failures)};
}

Outcome core_lemma() {
  const BitVec star = BitVec::from_string("011010");
  const double point = core_lemma_gap(Pmf::point(star), star, 1, 0).gap;
  const CoreLemmaFixture f = core_lemma_fixture();
  const double gap = core_lemma_gap(f.x, f.x_star, f.theta_heavy, f.theta_light).gap;
  const double oracle = oracle_core_lemma_gap(f.x, f.x_star);
  return {std::abs(point - 1) <= 1e-12 && std::abs(gap - oracle) <= 1e-9 && gap > 0,
          "point mass " + fmt("%.12f", point) + ", fixture gap " + fmt("%.9f", gap) + " vs oracle " +
              fmt("%.9f", oracle)};
}

Outcome slice_structure() {
  Rng rng(1008);
  bool ok = true;
  std::string detail;
  for (const char* name : {"flat", "geometric", "two_level"}) {
    const JointPmf joint = *tabulated_puzzle_by_name(name).exact_joint;
    const size_t n = joint.atoms().front().key.size();
    const SliceParams params = SliceParams::defaults(n);
    const Pmf marginal = joint.puzzle_marginal();
    for (const auto& [s, ps] : marginal.atoms()) {
      const FlatSlice slice = find_flat_slice(condition(joint, s), params);
      ok &= slice.mass >= (1 - slice.tail) / static_cast<double>(params.levels);
    }
    const size_t samples = 2000;
    size_t hits = 0;
    for (size_t t = 0; t < samples; t++) {
      const BitVec s = marginal.sample(rng);
      const Pmf ks = condition(joint, s);
      const HashSeed h = sample_hash_seed(rng, n);
      const BitVec k = ks.sample(rng);
      const SliceAnalysis a(ks, h, params);
      hits += a.in_f(h.eval(k, a.i_s()));
    }
    const double rate = hits / static_cast<double>(samples);
    const double lower = rate - hoeffding_radius(samples, 1.0);
    ok &= lower >= params.density_floor - 0.1;
    detail += std::string(name) + " F-density " + fmt("%.3f", rate) + " (floor " + fmt("%.3f", params.density_floor) +
              ") ";
  }
  return {ok, detail};
}

Outcome wpeg_gap() {
  bool ok = true;
  std::string detail;
  for (const char* name : {"geometric", "two_level"}) {
    const JointPmf joint = *tabulated_puzzle_by_name(name).exact_joint;
    const size_t n = joint.atoms().front().key.size();
    Rng rng = Rng::derive(7, "wpeg-gap", 0);
    const GapReport r = wpeg_entropy_gap(joint, SliceParams::defaults(n), 400, rng);
    ok &= r.gap - r.radius > 0;
    detail += std::string(name) + " gap " + fmt("%.4f", r.gap) + " +- " + fmt("%.4f", r.radius) + "; ";
  }
  const JointPmf joint = *tabulated_puzzle_by_name("geometric").exact_joint;
  SliceParams off = SliceParams::defaults(3);
  off.density_floor = 1;
  Rng rng(1009);
  const GapReport r = wpeg_entropy_gap(joint, off, 100, rng);
  ok &= r.gap == 0 && r.radius == 0;
  detail += "disabled control " + fmt("%.1f", r.gap) + " +- " + fmt("%.1f", r.radius);
  return {ok, detail};
}

Outcome concentration() {
  Rng rng(1010);
  size_t violations = 0;
  size_t cross_mismatch = 0;
  double min_margin = 1e9;
  const double eps = 0.01;
  for (int x = 0; x < 20; x++) {
    const size_t width = 1 + rng.below(2);
    const Pmf p = random_pmf(rng, width);
    const size_t alphabet = size_t{1} << width;
    const double h = static_cast<double>(oracle_shannon(p));
    for (int t = 1; t <= 12; t++) {
      const double exact = smooth_min_entropy(product_spectrum(p, t), eps);
      const double bound = t * h - std::sqrt(2 * t * std::log2(1 / eps)) * std::log2(3.0 + alphabet);
      violations += exact < bound;
      min_margin = std::min(min_margin, exact - bound);
      if (std::pow(static_cast<double>(p.support_size()), t) <= 1 << 16) {
        cross_mismatch += std::abs(exact - smooth_min_entropy(product_power(p, t), eps)) > 1e-9;
      }
    }
  }
  return {violations == 0 && cross_mismatch == 0, "violations " + std::to_string(violations) +
                                                      ", min margin " + fmt("%.3f", min_margin) +
                                                      ", materialized mismatches " + std::to_string(cross_mismatch)};
}

Outcome shadows_puzzle() {
  ShadowParams params;
  params.epsilon = 0.1;
  params.snapshots = 96;
  params.groups = 8;
  const OwsgScheme scheme = wiesner_owsg(6);
  const PuzzleInstance puzzle = puzzle_from_owsg(scheme, params);
  Rng rng(1011);
  const int trials = 500;
  int accepted = 0;
  int list_ok = 0;
  for (int t = 0; t < trials; t++) {
    const auto [k, s] = puzzle.samp(rng);
    accepted += puzzle.ver(k, s);
    const PureState psi = scheme.state_gen(k);
    bool all = true;
    for (const BitVec& j : preimage_list(Shadow::decode(s), scheme, params)) {
      all &= overlap(psi, scheme.state_gen(j)) >= 1 - 2 * params.epsilon;
    }
    list_ok += all;
  }
  const double acc = accepted / static_cast<double>(trials);
  const double list_rate = list_ok / static_cast<double>(trials);
  return {acc >= 0.99 && list_rate >= 0.95,
          "acceptance " + fmt("%.3f", acc) + " (need 0.99), list property " + fmt("%.3f", list_rate) + " (need 0.95)"};
}

// Exact SD(h(g)_s, U_s) from an explicit image table.
double oracle_hashed_sd(const HashSeed& h, const Pmf& g, size_t s) {
  std::map<BitVec, double> image;
  for (const auto& [x, p] : g.atoms()) image[h.eval(x, s)] += p;
  const double u = std::ldexp(1.0, -static_cast<int>(s));
  double sum = 0;
  for (const auto& [y, p] : image) sum += std::abs(p - u);
  sum += (std::ldexp(1.0, static_cast<int>(s)) - static_cast<double>(image.size())) * u;
  return sum / 2;
}

Outcome efi_crossover_check() {
  const Pmf g = efi_product_fixture();
  Rng rng = Rng::derive(7, "efi-sweep", 0).split("crossover");
  const Crossover c = efi_crossover(g, kEfiProductEps, kEfiProductMargin, 2000, rng);
  bool ok = c.low.value + c.low.radius < 0.1 && c.high.value - c.high.radius > 0.9;
  ok &= static_cast<double>(c.s_high) - static_cast<double>(c.s_low) <= c.h_max - c.h_min_smooth + 2 * c.margin;
  ok &= c.support_bound_holds;
  // Independent per-seed check of the support-side bound at s_high.
  Rng seeds(1012);
  const double t = static_cast<double>(c.s_high) - c.h_max;
  size_t bad = 0;
  for (int i = 0; i < 200; i++) {
    const HashSeed h = sample_hash_seed(seeds, 12);
    bad += oracle_hashed_sd(h, g, c.s_high) < 1 - std::pow(2.0, -t) - 1e-12;
  }
  ok &= bad == 0;
  return {ok, "s_low " + std::to_string(c.s_low) + " est " + fmt("%.4f", c.low.value) + " +- " +
                  fmt("%.4f", c.low.radius) + ", s_high " + std::to_string(c.s_high) + " est " +
                  fmt("%.4f", c.high.value) + " +- " + fmt("%.4f", c.high.radius) + ", oracle seed failures " +
                  std::to_string(bad)};
}

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Global state after CNOT(M~, M_2) and then measuring , as a density matrix.
CMatrix dephased_after_copy(const CommitScheme& dual, Complex alpha, Complex beta, size_t which) {
  const size_t n = dual.num_qubits();
  CVector psi = CVector::Zero(size_t{1} << n);
  psi(0) = alpha;
  psi(size_t{1} << (n - 1)) = beta;
  kernels::apply(psi, n, gates::cnot(), {dual.copy_pair->first, dual.copy_pair->second});
  CMatrix rho = CMatrix::Zero(psi.size(), psi.size());
  for (int bit : {0, 1}) {
    CVector branch = psi;
    kernels::project(branch, n, {which}, BitVec::from_uint(bit, 1));
    rho += branch * branch.adjoint();
  }
  return rho;
}

Outcome commit_suite() {
  std::vector<CommitScheme> catalog = toy_schemes();
  catalog.push_back(leaky_commit(0.3));
  catalog.push_back(dual_commit(basis_commit(), swap_commit()));
  catalog.push_back(dual_commit(swap_commit(), swap_commit()));
  catalog.push_back(xor_combine({swap_commit(), basis_commit()}));
  catalog.push_back(xor_combine({basis_commit(), basis_commit()}));
  size_t failures = 0;
  for (const CommitScheme& s : catalog) {
    for (int b : {0, 1}) failures += std::abs(completeness(s, b) - 1) > 1e-9;
    const AdversaryStrategy adv = superposition_attacker(s);
    const BindingResult a = binding_experiment(s, adv, BindingForm::kDirect);
    const BindingResult b = binding_experiment(s, adv, BindingForm::kInflated);
    failures += std::abs(a.advantage - b.advantage) > 1e-9 || std::abs(a.p_accept - b.p_accept) > 1e-9;
    failures += max_abs(a.sigma0 - b.sigma0) > 1e-9 || max_abs(a.sigma1 - b.sigma1) > 1e-9;
  }
  // Tagged hiding values.
  failures += std::abs(hiding_advantage(swap_commit()) - 0.5) > 1e-12;
  failures += std::abs(hiding_advantage(basis_commit()) - 1.0) > 1e-12;
  failures += std::abs(hiding_advantage(purification_commit(Pmf::bernoulli(0.5), Pmf::bernoulli(0.75))) - 0.625) > 1e-12;
  for (double tau : {0.1, 0.3, 0.8}) failures += std::abs(hiding_advantage(leaky_commit(tau)) - (0.5 + tau / 2)) > 1e-12;
  // CNOT-copy symmetry, checked against a direct dephasing computation.
  for (const CommitScheme& d : {dual_commit(basis_commit(), swap_commit()), dual_commit(swap_commit(), leaky_commit(0.4))}) {
    for (auto [al, be] : std::vector<std::pair<Complex, Complex>>{{{std::sqrt(0.5), 0}, {0, std::sqrt(0.5)}},
                                                                   {{0.6, 0}, {0.8, 0}}}) {
      const CMatrix r1 = dephased_after_copy(d, al, be, d.copy_pair->first);
      const CMatrix r2 = dephased_after_copy(d, al, be, d.copy_pair->second);
      failures += max_abs(r1 - r2) > 1e-12;
      failures += cnot_copy_asymmetry(d, al, be) > 1e-12;
    }
  }
  // One perfectly hiding component makes the commit registers independent of b.
  for (const auto& parts : std::vector<std::vector<CommitScheme>>{{swap_commit(), basis_commit()},
                                                                  {leaky_commit(0.6), swap_commit()},
                                                                  {basis_commit(), basis_commit(), swap_commit()}}) {
    const CommitScheme x = xor_combine(parts);
    failures += max_abs(reduced_commit_state(x, 0) - reduced_commit_state(x, 1)) > 1e-12;
  }
  return {failures == 0, std::to_string(catalog.size()) + " schemes, failures " + std::to_string(failures)};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("peglab_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::vector<fs::path> manifests;
  for (const auto& e : fs::directory_iterator(PEGLAB_MANIFEST_DIR)) {
    if (e.path().extension() == ".json") manifests.push_back(e.path());
  }
  std::sort(manifests.begin(), manifests.end());
  size_t differing = 0;
  size_t failed = 0;
  for (const fs::path& m : manifests) {
    // Identical command lines; the report is read back after each run.
    const fs::path out = dir / (m.stem().string() + ".json");
    const std::string cmd =
        std::string("\"") + PEGLAB_CLI_PATH + "\" --manifest \"" + m.string() + "\" --out \"" + out.string() + "\"";
    std::string reports[2];
    for (int run = 0; run < 2; run++) {
      fs::remove(out);
      if (std::system(cmd.c_str()) != 0) failed++;
      reports[run] = slurp(out);
    }
    differing += reports[0].empty() || reports[0] != reports[1];
  }
  fs::remove_all(dir);
  return {manifests.size() >= 10 && differing == 0 && failed == 0,
          std::to_string(manifests.size()) + " manifests, differing " + std::to_string(differing) + ", failed runs " +
              std::to_string(failed)};
}

std::vector<Criterion> criteria() {
  return {
      {1, "entropy toolkit exactness", 10, entropy_toolkit},
      {2, "inner-product extractor bound", 30, extractor_bound},
      {3, "exact pairwise independence", 10, pairwise_independence},
      {4, "Goldreich-Levin recovery", 60, goldreich_levin},
      {5, "biased coin bounds", 1, biased_coin},
      {6, "public slicing identity and bound", 5, public_slicing},
      {7, "core lemma harness", 5, core_lemma},
      {8, "flat slice and hash slice structure", 60, slice_structure},
      {9, "weak PEG entropy gap direction", 120, wpeg_gap},
      {10, "entropy concentration", 120, concentration},
      {11, "shadow puzzle correctness", 300, shadows_puzzle},
      {12, "EFI crossover", 60, efi_crossover_check},
      {13, "commitment suite", 60, commit_suite},
      {14, "CLI determinism", 0, determinism},
  };
}

}  // namespace
}  // namespace peglab

int main(int argc, char** argv) {
  CLI::App app{"peglab acceptance criteria"};
  std::vector<int> only;
  app.add_option("--criterion", only, "Run only these criteria (default: all)");
  CLI11_PARSE(app, argc, argv);

  int failures = 0;
  for (const auto& c : peglab::criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    peglab::Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs >= c.time_limit) {
      o.pass = false;
      o.detail += "; over time limit";
    }
    std::printf("%s criterion %2d: %s [%.2fs] %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
