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

#include "commands.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "peglab/commit.h"
#include "peglab/dist.h"
#include "peglab/efi.h"
#include "peglab/errors.h"
#include "peglab/fixtures.h"
#include "peglab/gf2.h"
#include "peglab/owsg.h"
#include "peglab/pseudoentropy.h"
#include "peglab/puzzles.h"
#include "peglab/rng.h"
#include "peglab/version.h"

namespace peglab::cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string num(uint64_t v) { return std::to_string(v); }

// Runs f(t) for t in [0, trials) and returns the results in index order.
template <typename T>
std::vector<T> run_trials(size_t trials, size_t workers, const std::function<T(size_t)>& f) {
  std::vector<T> out(trials);
  workers = std::clamp<size_t>(workers, 1, std::max<size_t>(trials, 1));
  if (workers == 1) {
    for (size_t t = 0; t < trials; t++) out[t] = f(t);
    return out;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; w++) {
    pool.emplace_back([&] {
      for (size_t t = next++; t < trials && !failed; t = next++) {
        try {
          out[t] = f(t);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

double unit(uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

// Random Pmf over `width`-bit labels: each label kept with probability 1/2, weights
// uniform, at least one atom.
Pmf random_pmf(Rng& rng, size_t width) {
  const size_t count = size_t{1} << width;
  std::vector<double> probs(count, 0.0);
  double total = 0;
  for (size_t i = 0; i < count; i++) {
    if (rng.bernoulli(0.5)) {
      probs[i] = rng.uniform() + 1e-3;
      total += probs[i];
    }
  }
  if (total == 0) {
    probs[rng.below(count)] = 1;
    total = 1;
  }
  for (double& p : probs) p /= total;
  return Pmf::from_probabilities(probs, width);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

JointPmf load_joint(const Params& p) {
  if (p.has("fixture_path")) return joint_pmf_from_json(read_file(p.get_string("fixture_path", "")));
  const PuzzleInstance inst = tabulated_puzzle_by_name(p.get_string("fixture", "geometric"));
  return *inst.exact_joint;
}

size_t key_bits(const JointPmf& j) {
  const auto w = j.key_marginal().label_width();
  if (!w) throw std::invalid_argument("puzzle keys must share one width");
  return *w;
}

SliceParams slice_params(const Params& p, size_t n) {
  SliceParams s = SliceParams::defaults(n);
  s.levels = p.get_uint("levels", s.levels);
  s.pad = p.get_uint("pad", s.pad);
  s.slack = p.get_uint("slack", s.slack);
  s.density_floor = p.get_double("density_floor", s.density_floor);
  s.i_max = p.get_uint("i_max", s.i_max);
  s.validate();
  return s;
}

Json mean_radius(double sum, size_t n, double range) {
  return {{"mean", sum / static_cast<double>(n)}, {"radius", hoeffding_radius(n, range)}, {"samples", n}};
}

// ---------------------------------------------------------------------------

struct EntropyRow {
  double shannon = 0, hmin = 0, hmax = 0, smin = 0, smax = 0;
  size_t support = 0;
};

Report run_entropy(const Manifest& m, size_t workers) {
  Params p(m.params, {"width", "eps", "pmf"});
  const double eps = p.get_double("eps", 0.01);
  const size_t width = p.get_uint("width", 4);
  if (width == 0 || width > 12) throw ParameterRejected("entropy: width must lie in [1, 12]");
  std::function<EntropyRow(size_t)> f;
  std::optional<Pmf> fixed;
  if (p.has("pmf")) fixed = pmf_from_json(p.get_object("pmf").dump());
  const size_t trials = fixed ? 1 : m.trials;
  f = [&](size_t t) {
    Rng rng = Rng::derive(m.seed, m.subcommand, t);
    const Pmf x = fixed ? *fixed : random_pmf(rng, width);
    return EntropyRow{shannon_entropy(x), min_entropy(x), max_entropy(x), smooth_min_entropy(x, eps),
                      smooth_max_entropy(x, eps), x.support_size()};
  };
  const auto rows = run_trials<EntropyRow>(trials, workers, f);
  Report r;
  r.table.header = {"index", "support", "shannon", "min_entropy", "max_entropy", "smooth_min", "smooth_max"};
  double sums[5] = {0, 0, 0, 0, 0};
  size_t ordering_violations = 0;
  for (size_t t = 0; t < rows.size(); t++) {
    const auto& e = rows[t];
    r.table.rows.push_back({num(uint64_t{t}), num(uint64_t{e.support}), num(e.shannon), num(e.hmin), num(e.hmax),
                            num(e.smin), num(e.smax)});
    sums[0] += e.shannon;
    sums[1] += e.hmin;
    sums[2] += e.hmax;
    sums[3] += e.smin;
    sums[4] += e.smax;
    if (!(e.hmin <= e.shannon + kEntropyTol && e.shannon <= e.hmax + kEntropyTol)) ordering_violations++;
  }
  const double n = static_cast<double>(rows.size());
  r.results = {{"count", rows.size()},
               {"eps", eps},
               {"mean_shannon", sums[0] / n},
               {"mean_min_entropy", sums[1] / n},
               {"mean_max_entropy", sums[2] / n},
               {"mean_smooth_min", sums[3] / n},
               {"mean_smooth_max", sums[4] / n},
               {"ordering_violations", ordering_violations}};
  return r;
}

Report run_extractor(const Manifest& m, size_t workers) {
  Params p(m.params, {"n"});
  const size_t n = p.get_uint("n", 8);
  if (n == 0 || n > 10) throw ParameterRejected("extractor: n must lie in [1, 10]");
  struct Row {
    double k = 0, d = 0, bound = 0;
  };
  const auto rows = run_trials<Row>(m.trials, workers, [&](size_t t) {
    Rng rng = Rng::derive(m.seed, m.subcommand, t);
    const Pmf x = random_pmf(rng, n);
    const double k = min_entropy(x);
    return Row{k, extractor_distance(x), std::exp2((1 - k) / 2)};
  });
  Report r;
  r.table.header = {"index", "min_entropy", "distance", "bound"};
  size_t violations = 0;
  double worst = 0;
  for (size_t t = 0; t < rows.size(); t++) {
    r.table.rows.push_back({num(uint64_t{t}), num(rows[t].k), num(rows[t].d), num(rows[t].bound)});
    if (rows[t].d > rows[t].bound + 1e-12) violations++;
    worst = std::max(worst, rows[t].d / rows[t].bound);
  }
  r.results = {{"n", n}, {"count", rows.size()}, {"violations", violations}, {"max_ratio", worst}};
  return r;
}

Report run_gl(const Manifest& m, size_t workers) {
  Params p(m.params, {"n", "eps", "noiseless", "queries", "list_cap"});
  const size_t n = p.get_uint("n", 8);
  const double eps = p.get_double("eps", 0.15);
  const bool noiseless = p.get_bool("noiseless", false);
  if (n == 0 || n > 16) throw ParameterRejected("gl: n must lie in [1, 16]");
  if (!(eps > 0 && eps <= 0.5)) throw ParameterRejected("gl: eps must lie in (0, 1/2]");
  GlConfig cfg{p.get_uint("queries", 0), p.get_uint("list_cap", 0)};
  struct Row {
    bool found = false;
    size_t list = 0;
    double advantage = 0;
  };
  const auto rows = run_trials<Row>(m.trials, workers, [&](size_t t) {
    Rng rng = Rng::derive(m.seed, m.subcommand, t);
    const BitVec x = rng.bits(n);
    const uint64_t noise_key = rng.next_u64();
    // Deterministic per-r corruption: the oracle is a fixed function for this trial.
    auto oracle = [&](const BitVec& r) {
      const bool flip = !noiseless && unit(mix64(noise_key ^ r.to_uint())) < 0.5 - eps;
      return inner_product(x, r) != flip;
    };
    size_t agree = 0;
    for (uint64_t v = 0; v < (uint64_t{1} << n); v++) {
      const BitVec r = BitVec::from_uint(v, n);
      if (oracle(r) == inner_product(x, r)) agree++;
    }
    Rng decode = rng.split("decode");
    const auto list = gl_decode(oracle, n, eps, decode, cfg);
    return Row{std::find(list.begin(), list.end(), x) != list.end(), list.size(),
               static_cast<double>(agree) / std::exp2(static_cast<double>(n)) - 0.5};
  });
  size_t found = 0;
  double list_sum = 0, adv_sum = 0;
  for (const Row& row : rows) {
    found += row.found;
    list_sum += static_cast<double>(row.list);
    adv_sum += row.advantage;
  }
  const double total = static_cast<double>(rows.size());
  Report r;
  r.results = {{"n", n},
               {"eps", eps},
               {"noiseless", noiseless},
               {"trials", rows.size()},
               {"recovered", found},
               {"recovery_rate", static_cast<double>(found) / total},
               {"radius", hoeffding_radius(rows.size(), 1.0)},
               {"target", 4 * eps * eps},
               {"mean_list_size", list_sum / total},
               {"mean_oracle_advantage", adv_sum / total}};
  return r;
}

Report run_shadows(const Manifest& m, size_t workers) {
  Params p(m.params, {"n", "snapshots", "groups", "epsilon"});
  const size_t n = p.get_uint("n", 6);
  ShadowParams sp;
  sp.epsilon = p.get_double("epsilon", 0.1);
  sp.snapshots = p.get_uint("snapshots", 0);
  sp.groups = p.get_uint("groups", 8);
  const OwsgScheme scheme = wiesner_owsg(n);
  const PuzzleInstance puzzle = puzzle_from_owsg(scheme, sp);
  const size_t t_snap = sp.snapshots_for(n);
  struct Row {
    double estimate = 0;
    bool accepted = false;
    bool list_ok = false;
    size_t list = 0;
  };
  const auto rows = run_trials<Row>(m.trials, workers, [&](size_t t) {
    Rng rng = Rng::derive(m.seed, m.subcommand, t);
    const auto [k, s] = puzzle.samp(rng);
    const Shadow shadow = Shadow::decode(s);
    const PureState state = scheme.state_gen(k);
    Row row;
    row.estimate = estimate_overlap(shadow, state, sp.groups);
    row.accepted = puzzle.ver(k, s);
    const auto list = preimage_list(shadow, scheme, sp);
    row.list = list.size();
    row.list_ok = std::all_of(list.begin(), list.end(), [&](const BitVec& cand) {
      return overlap(scheme.state_gen(cand), state) >= 1 - 2 * sp.epsilon;
    });
    return row;
  });
  size_t acc = 0, ok = 0;
  double est = 0, list = 0;
  for (const Row& row : rows) {
    acc += row.accepted;
    ok += row.list_ok;
    est += row.estimate;
    list += static_cast<double>(row.list);
  }
  const double total = static_cast<double>(rows.size());
  Report r;
  r.results = {{"n", n},
               {"snapshots", t_snap},
               {"groups", sp.groups},
               {"epsilon", sp.epsilon},
               {"trials", rows.size()},
               {"acceptance_rate", acc / total},
               {"list_property_rate", ok / total},
               {"mean_estimate", est / total},
               {"mean_list_size", list / total},
               {"radius", hoeffding_radius(rows.size(), 1.0)}};
  return r;
}

Report run_puzzle(const Manifest& m, size_t workers) {
  Params p(m.params, {"source", "n", "depth", "snapshots", "groups", "epsilon", "fixture_path"});
  const std::string source = p.get_string("source", "wiesner");
  ShadowParams sp;
  sp.epsilon = p.get_double("epsilon", 0.1);
  sp.snapshots = p.get_uint("snapshots", 0);
  sp.groups = p.get_uint("groups", 8);
  PuzzleInstance puzzle;
  if (p.has("fixture_path")) {
    puzzle = tabulated_puzzle("file", joint_pmf_from_json(read_file(p.get_string("fixture_path", ""))));
  } else if (source == "wiesner") {
    puzzle = puzzle_from_owsg(wiesner_owsg(p.get_uint("n", 6)), sp);
  } else if (source == "random_circuit") {
    puzzle = puzzle_from_owsg(random_circuit_owsg(p.get_uint("n", 4), p.get_uint("depth", 4)), sp);
  } else {
    puzzle = tabulated_puzzle_by_name(source);
  }
  const bool tabulated = puzzle.exact_joint.has_value();
  struct Row {
    bool accepted = false;
    bool inverted = false;
  };
  const auto rows = run_trials<Row>(m.trials, workers, [&](size_t t) {
    Rng rng = Rng::derive(m.seed, m.subcommand, t);
    const auto [k, s] = puzzle.samp(rng);
    Row row;
    row.accepted = puzzle.ver(k, s);
    if (tabulated) {
      const auto inv = brute_force_invert(puzzle, s);
      row.inverted = inv && puzzle.ver(*inv, s);
    }
    return row;
  });
  size_t acc = 0, inv = 0;
  for (const Row& row : rows) {
    acc += row.accepted;
    inv += row.inverted;
  }
  const double total = static_cast<double>(rows.size());
  Report r;
  r.results = {{"puzzle", puzzle.name},
               {"key_len", puzzle.key_len},
               {"trials", rows.size()},
               {"acceptance_rate", acc / total},
               {"radius", hoeffding_radius(rows.size(), 1.0)}};
  if (tabulated) {
    r.results["brute_force_inversion_rate"] = inv / total;
    r.results["conditional_key_entropy"] = conditional_entropy_key_given_puzzle(*puzzle.exact_joint);
  }
  return r;
}

Report run_wpeg_gap(const Manifest& m, size_t /*workers*/) {
  Params p(m.params, {"fixture", "fixture_path", "levels", "pad", "slack", "density_floor", "i_max"});
  const JointPmf joint = load_joint(p);
  const size_t n = key_bits(joint);
  const SliceParams sp = slice_params(p, n);
  Rng rng = Rng::derive(m.seed, m.subcommand, 0);
  const GapReport g = wpeg_entropy_gap(joint, sp, m.trials, rng);
  Report r;
  Json per = Json::array();
  r.table.header = {"s", "weight", "j_s", "i_s", "slice_mass", "gap_contribution", "trigger_mass"};
  for (const auto& e : g.per_s) {
    per.push_back({{"s", e.s.to_string()},
                   {"weight", e.weight},
                   {"j_s", e.j_s},
                   {"i_s", e.i_s},
                   {"slice_mass", e.slice_mass},
                   {"gap_contribution", e.gap_contribution},
                   {"trigger_mass", e.trigger_mass}});
    r.table.rows.push_back({e.s.to_string(), num(e.weight), std::to_string(e.j_s), num(uint64_t{e.i_s}),
                            num(e.slice_mass), num(e.gap_contribution), num(e.trigger_mass)});
  }
  r.results = {{"key_bits", g.key_bits},
               {"seed_samples", g.seed_samples},
               {"gap", g.gap},
               {"radius", g.radius},
               {"gap_minus_radius", g.gap - g.radius},
               {"trigger_mass", g.trigger_mass},
               {"exact", g.exact},
               {"slice_params",
                {{"levels", sp.levels},
                 {"pad", sp.pad},
                 {"slack", sp.slack},
                 {"density_floor", sp.density_floor},
                 {"i_max", sp.i_max}}},
               {"per_s", per}};
  return r;
}

Report run_core_lemma(const Manifest& m, size_t /*workers*/) {
  Params p(m.params, {"fixture", "theta_heavy", "theta_light"});
  const std::string fixture = p.get_string("fixture", "n6");
  CoreLemmaFixture f = core_lemma_fixture();
  if (fixture == "point") {
    f.x = Pmf::point(f.x_star);
    f.theta_heavy = 1;
    f.theta_light = 0;
  } else if (fixture != "n6") {
    throw std::invalid_argument("core-lemma: unknown fixture '" + fixture + "'");
  }
  const double heavy = p.get_double("theta_heavy", f.theta_heavy);
  const double light = p.get_double("theta_light", f.theta_light);
  const CoreLemmaReport rep = core_lemma_gap(f.x, f.x_star, heavy, light);
  Report r;
  r.results = {{"fixture", fixture},
               {"n", f.x_star.size()},
               {"theta_heavy", heavy},
               {"theta_light", light},
               {"p_star", rep.p_star},
               {"heavy_case", rep.heavy_case},
               {"gap", rep.gap},
               {"bound", rep.bound}};
  return r;
}

Report run_concentration(const Manifest& m, size_t workers) {
  Params p(m.params, {"eps", "t_max", "alphabet_max"});
  const double eps = p.get_double("eps", 0.01);
  const int t_max = static_cast<int>(p.get_uint("t_max", 12));
  const size_t alphabet_max = p.get_uint("alphabet_max", 4);
  if (!(eps > 0 && eps < 1)) throw ParameterRejected("concentration: eps must lie in (0, 1)");
  if (t_max < 1 || t_max > 64) throw ParameterRejected("concentration: t_max must lie in [1, 64]");
  if (alphabet_max < 2 || alphabet_max > 16) throw ParameterRejected("concentration: alphabet_max in [2, 16]");
  struct Row {
    size_t alphabet = 0;
    double shannon = 0;
    std::vector<std::pair<double, double>> per_t;
  };
  const auto rows = run_trials<Row>(m.trials, workers, [&](size_t t) {
    Rng rng = Rng::derive(m.seed, m.subcommand, t);
    const size_t a = 2 + rng.below(alphabet_max - 1);
    std::vector<double> probs(a);
    double total = 0;
    for (double& q : probs) total += (q = rng.uniform() + 1e-3);
    for (double& q : probs) q /= total;
    size_t width = 1;
    while ((size_t{1} << width) < a) width++;
    const Pmf x = Pmf::from_probabilities(probs, width);
    Row row{a, shannon_entropy(x), {}};
    for (int k = 1; k <= t_max; k++) {
      const double hmin = smooth_min_entropy(product_spectrum(x, k), eps);
      row.per_t.emplace_back(hmin, k * row.shannon - concentration_deviation(k, eps, a));
    }
    return row;
  });
  Report r;
  r.table.header = {"index", "alphabet", "t", "smooth_min", "lower_bound"};
  size_t violations = 0;
  double min_slack = INFINITY;
  for (size_t i = 0; i < rows.size(); i++) {
    for (size_t k = 0; k < rows[i].per_t.size(); k++) {
      const auto [h, b] = rows[i].per_t[k];
      r.table.rows.push_back({num(uint64_t{i}), num(uint64_t{rows[i].alphabet}), num(uint64_t{k + 1}), num(h), num(b)});
      if (h < b - 1e-9) violations++;
      min_slack = std::min(min_slack, h - b);
    }
  }
  r.results = {{"eps", eps}, {"t_max", t_max}, {"count", rows.size()}, {"violations", violations},
               {"min_slack", min_slack}};
  return r;
}

Report run_efi_sweep(const Manifest& m, size_t workers) {
  Params p(m.params, {"pmf", "s_begin", "s_end", "eps", "margin", "gap_term"});
  const Pmf g0 = p.has("pmf") ? pmf_from_json(p.get_object("pmf").dump()) : efi_product_fixture();
  const auto width = g0.label_width();
  if (!width) throw std::invalid_argument("efi-sweep: labels must share one width");
  const double eps = p.get_double("eps", kEfiProductEps);
  const double margin = p.get_double("margin", kEfiProductMargin);
  const size_t out_bits = 3 * *width;
  const size_t s_begin = p.get_uint("s_begin", 0);
  const size_t s_end = p.get_uint("s_end", std::min(out_bits, static_cast<size_t>(max_entropy(g0)) + 8));
  if (s_begin > s_end || s_end > out_bits) throw ParameterRejected("efi-sweep: need s_begin <= s_end <= 3L");
  const Rng root = Rng::derive(m.seed, m.subcommand, 0);
  Rng sweep_rng = root.split("sweep");
  const auto rows = run_trials<SweepRow>(s_end - s_begin + 1, workers, [&](size_t k) {
    const size_t s = s_begin + k;
    Rng stream = sweep_rng.split(s);
    const Estimate e = efi_distance(g0, s, m.trials, stream);
    return SweepRow{s, e.value, e.radius, std::max(0.0, efi_support_bound(g0, s))};
  });
  Rng cross_rng = root.split("crossover");
  const Crossover c = efi_crossover(g0, eps, margin, m.trials, cross_rng);
  const SStar star = s_star(g0, p.get_double("gap_term", 0));
  Report r;
  r.table.header = {"s", "sd_estimate", "radius"};
  Json sweep = Json::array();
  for (const SweepRow& row : rows) {
    r.table.rows.push_back({num(uint64_t{row.s}), num(row.estimate), num(row.radius)});
    sweep.push_back({{"s", row.s}, {"sd_estimate", row.estimate}, {"radius", row.radius},
                     {"support_bound", row.support_bound}});
  }
  r.results = {{"label_bits", *width},
               {"seed_samples", m.trials},
               {"h_max", max_entropy(g0)},
               {"h_min_smooth", smooth_min_entropy(g0, eps)},
               {"s_star", star.value},
               {"sweep", sweep},
               {"crossover",
                {{"s_low", c.s_low},
                 {"s_high", c.s_high},
                 {"margin", c.margin},
                 {"low", {{"estimate", c.low.value}, {"radius", c.low.radius}}},
                 {"high", {{"estimate", c.high.value}, {"radius", c.high.radius}}},
                 {"witnessed", c.witnessed},
                 {"support_bound_holds", c.support_bound_holds}}}};
  return r;
}

Json scheme_summary(const CommitScheme& s, Rng& rng, size_t trials) {
  const AdversaryStrategy adv = superposition_attacker(s);
  const BindingResult direct = binding_experiment(s, adv);
  const BindingResult inflated = binding_experiment(s, adv, BindingForm::kInflated);
  const Json desc = Json::parse(s.descriptor_json());
  return {{"name", s.name()},
          {"qubits", s.num_qubits()},
          {"completeness", {completeness(s, 0), completeness(s, 1)}},
          {"hiding_advantage", hiding_advantage(s)},
          {"binding_advantage", direct.advantage},
          {"binding_sampled", binding_experiment(s, adv, rng, trials)},
          {"elision_difference",
           std::max((direct.sigma0 - inflated.sigma0).cwiseAbs().maxCoeff(),
                    (direct.sigma1 - inflated.sigma1).cwiseAbs().maxCoeff())},
          {"checksum", desc["checksum"]}};
}

Report run_commit_suite(const Manifest& m, size_t workers) {
  Params p(m.params, {"tau"});
  const double tau = p.get_double("tau", 0.5);
  std::vector<CommitScheme> schemes = toy_schemes();
  if (p.has("tau")) schemes.push_back(leaky_commit(tau));
  schemes.push_back(dual_commit(basis_commit(), swap_commit()));
  schemes.push_back(dual_commit(swap_commit(), swap_commit()));
  schemes.push_back(xor_combine({swap_commit(), basis_commit()}));
  schemes.push_back(xor_combine({basis_commit(), basis_commit()}));
  const auto rows = run_trials<Json>(schemes.size(), workers, [&](size_t i) {
    Rng rng = Rng::derive(m.seed, m.subcommand, i);
    Json j = scheme_summary(schemes[i], rng, m.trials);
    if (schemes[i].copy_pair) {
      j["cnot_copy_asymmetry"] = cnot_copy_asymmetry(schemes[i], Complex(0.6, 0), Complex(0, 0.8));
    }
    j["commit_state_b_difference"] =
        (reduced_commit_state(schemes[i], 0) - reduced_commit_state(schemes[i], 1)).cwiseAbs().maxCoeff();
    return j;
  });
  Report r;
  r.table.header = {"name", "completeness0", "completeness1", "hiding", "binding", "binding_sampled"};
  for (const Json& j : rows) {
    r.table.rows.push_back({j["name"].get<std::string>(), num(j["completeness"][0].get<double>()),
                            num(j["completeness"][1].get<double>()), num(j["hiding_advantage"].get<double>()),
                            num(j["binding_advantage"].get<double>()), num(j["binding_sampled"].get<double>())});
  }
  r.results = {{"tau", tau}, {"sampled_trials", m.trials}, {"schemes", rows}};
  return r;
}

}  // namespace

std::string Table::to_csv() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); i++) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out;
}

Report run(const Manifest& manifest, size_t workers) {
  using Runner = Report (*)(const Manifest&, size_t);
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"entropy", run_entropy},         {"extractor", run_extractor},   {"gl", run_gl},
      {"shadows", run_shadows},         {"puzzle", run_puzzle},         {"wpeg-gap", run_wpeg_gap},
      {"core-lemma", run_core_lemma},   {"concentration", run_concentration},
      {"efi-sweep", run_efi_sweep},     {"commit-suite", run_commit_suite}};
  for (const auto& [name, fn] : table) {
    if (name == manifest.subcommand) return fn(manifest, workers);
  }
  throw SchemaError("unknown subcommand '" + manifest.subcommand + "'");
}

std::string render_report(const Manifest& manifest, const Report& report, const Json* timing) {
  Json doc = {{"manifest", manifest.to_json()}, {"version", version()}, {"results", report.results}};
  if (timing) doc["timing"] = *timing;
  return doc.dump(2) + "\n";
}

}  // namespace peglab::cli
