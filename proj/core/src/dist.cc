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

#include "peglab/dist.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "peglab/errors.h"

namespace peglab {

namespace {

// Neumaier compensated summation.
class Accumulator {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

void require_nonempty(const Pmf& p, const char* op) {
  if (p.empty()) throw std::invalid_argument(std::string(op) + ": empty support");
}

void require_normalized(const Pmf& p, const char* op) {
  require_nonempty(p, op);
  if (p.subnormalized()) {
    throw std::invalid_argument(std::string(op) + ": subnormalized input rejected");
  }
}

void require_eps(double eps, const char* op) {
  if (!(eps >= 0)) throw std::invalid_argument(std::string(op) + ": eps must be >= 0");
  if (eps >= 1) throw std::invalid_argument(std::string(op) + ": eps must be < 1");
}

double min_prob(const Pmf& p) {
  double m = 1;
  for (const auto& [x, q] : p.atoms()) m = std::min(m, q);
  return m;
}

double max_prob(const Pmf& p) {
  double m = 0;
  for (const auto& [x, q] : p.atoms()) m = std::max(m, q);
  return m;
}

}  // namespace

Pmf Pmf::from_atoms(std::vector<Atom> atoms, bool subnormalized) {
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.first < b.first; });
  Pmf out;
  out.subnormalized_ = subnormalized;
  Accumulator total;
  for (auto& [x, q] : atoms) {
    if (!(q >= 0) || q > 1 + kMassTol) {
      throw std::invalid_argument("Pmf probabilities must lie in [0, 1]");
    }
    if (!out.atoms_.empty() && out.atoms_.back().first == x) {
      out.atoms_.back().second += q;
    } else {
      out.atoms_.emplace_back(std::move(x), q);
    }
    total.add(q);
  }
  std::erase_if(out.atoms_, [](const Atom& a) { return a.second == 0; });
  for (const auto& a : out.atoms_) {
    if (a.second > 1 + kMassTol) throw std::invalid_argument("merged Pmf atom exceeds 1");
  }
  out.total_mass_ = total.value();
  if (subnormalized) {
    if (out.total_mass_ > 1 + kMassTol) throw std::invalid_argument("Pmf total mass exceeds 1");
  } else if (std::abs(out.total_mass_ - 1) > kMassTol) {
    throw std::invalid_argument("Pmf total mass must be 1 within 1e-12");
  }
  return out;
}

Pmf Pmf::point(const BitVec& x) { return from_atoms({{x, 1.0}}); }

Pmf Pmf::uniform(std::vector<BitVec> labels) {
  if (labels.empty()) throw std::invalid_argument("Pmf::uniform needs at least one label");
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw std::invalid_argument("Pmf::uniform labels must be distinct");
  }
  double q = 1.0 / static_cast<double>(labels.size());
  std::vector<Atom> atoms;
  atoms.reserve(labels.size());
  for (auto& x : labels) atoms.emplace_back(std::move(x), q);
  return from_atoms(std::move(atoms));
}

Pmf Pmf::uniform_bits(size_t n) {
  if (n > 24) throw ParameterRejected("Pmf::uniform_bits limited to 24 bits");
  std::vector<BitVec> labels;
  for (uint64_t v = 0; v < (uint64_t{1} << n); v++) labels.push_back(BitVec::from_uint(v, n));
  return uniform(std::move(labels));
}

Pmf Pmf::bernoulli(double p) {
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("Bernoulli parameter must be in [0,1]");
  return from_atoms({{BitVec::from_string("0"), 1 - p}, {BitVec::from_string("1"), p}});
}

Pmf Pmf::from_probabilities(const std::vector<double>& probs, size_t width) {
  if (width < 64 && probs.size() > (uint64_t{1} << width)) {
    throw std::invalid_argument("too many probabilities for label width");
  }
  std::vector<Atom> atoms;
  for (size_t i = 0; i < probs.size(); i++) atoms.emplace_back(BitVec::from_uint(i, width), probs[i]);
  return from_atoms(std::move(atoms));
}

double Pmf::prob(const BitVec& x) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                             [](const Atom& a, const BitVec& key) { return a.first < key; });
  if (it != atoms_.end() && it->first == x) return it->second;
  return 0;
}

std::optional<size_t> Pmf::label_width() const {
  if (atoms_.empty()) return std::nullopt;
  size_t w = atoms_.front().first.size();
  for (const auto& a : atoms_) {
    if (a.first.size() != w) return std::nullopt;
  }
  return w;
}

std::vector<BitVec> Pmf::support() const {
  std::vector<BitVec> out;
  out.reserve(atoms_.size());
  for (const auto& a : atoms_) out.push_back(a.first);
  return out;
}

BitVec Pmf::sample(Rng& rng) const {
  if (atoms_.empty()) throw std::invalid_argument("cannot sample from an empty Pmf");
  double u = rng.uniform() * total_mass_;
  double acc = 0;
  for (const auto& a : atoms_) {
    acc += a.second;
    if (u < acc) return a.first;
  }
  return atoms_.back().first;
}

JointPmf JointPmf::from_atoms(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    if (a.puzzle != b.puzzle) return a.puzzle < b.puzzle;
    return a.key < b.key;
  });
  JointPmf out;
  Accumulator total;
  for (auto& a : atoms) {
    if (!(a.p >= 0) || a.p > 1 + kMassTol) {
      throw std::invalid_argument("JointPmf probabilities must lie in [0, 1]");
    }
    total.add(a.p);
    if (!out.atoms_.empty() && out.atoms_.back().key == a.key && out.atoms_.back().puzzle == a.puzzle) {
      out.atoms_.back().p += a.p;
    } else {
      out.atoms_.push_back(std::move(a));
    }
  }
  std::erase_if(out.atoms_, [](const Atom& a) { return a.p == 0; });
  if (std::abs(total.value() - 1) > kMassTol) {
    throw std::invalid_argument("JointPmf total mass must be 1 within 1e-12");
  }
  return out;
}

Pmf JointPmf::key_marginal() const {
  std::vector<Pmf::Atom> atoms;
  for (const auto& a : atoms_) atoms.emplace_back(a.key, a.p);
  return Pmf::from_atoms(std::move(atoms));
}

Pmf JointPmf::puzzle_marginal() const {
  std::vector<Pmf::Atom> atoms;
  for (const auto& a : atoms_) atoms.emplace_back(a.puzzle, a.p);
  return Pmf::from_atoms(std::move(atoms));
}

std::vector<BitVec> JointPmf::puzzles() const {
  std::vector<BitVec> out;
  for (const auto& a : atoms_) {
    if (out.empty() || out.back() != a.puzzle) out.push_back(a.puzzle);
  }
  return out;
}

Pmf JointPmf::flatten() const {
  std::vector<Pmf::Atom> atoms;
  for (const auto& a : atoms_) atoms.emplace_back(BitVec::tuple({a.key, a.puzzle}), a.p);
  return Pmf::from_atoms(std::move(atoms));
}

std::pair<BitVec, BitVec> JointPmf::sample(Rng& rng) const {
  if (atoms_.empty()) throw std::invalid_argument("cannot sample from an empty JointPmf");
  double u = rng.uniform();
  double acc = 0;
  for (const auto& a : atoms_) {
    acc += a.p;
    if (u < acc) return {a.key, a.puzzle};
  }
  return {atoms_.back().key, atoms_.back().puzzle};
}

double JointPmf::prob(const BitVec& key, const BitVec& puzzle) const {
  for (const auto& a : atoms_) {
    if (a.key == key && a.puzzle == puzzle) return a.p;
  }
  return 0;
}

double binary_entropy(double p) {
  if (p <= 0 || p >= 1) return 0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

double shannon_entropy(const Pmf& p) {
  require_normalized(p, "shannon_entropy");
  Accumulator acc;
  for (const auto& [x, q] : p.atoms()) acc.add(-q * std::log2(q));
  return std::max(0.0, acc.value());
}

double sample_entropy(const Pmf& p, const BitVec& x) {
  double q = p.prob(x);
  if (q <= 0) throw std::invalid_argument("sample_entropy: atom not in support");
  return -std::log2(q);
}

double min_entropy(const Pmf& p) {
  require_nonempty(p, "min_entropy");
  return -std::log2(max_prob(p));
}

double max_entropy(const Pmf& p) {
  require_nonempty(p, "max_entropy");
  return -std::log2(min_prob(p));
}

double smooth_min_entropy(const Pmf& p, double eps) {
  require_eps(eps, "smooth_min_entropy");
  require_nonempty(p, "smooth_min_entropy");
  return smooth_min_entropy(spectrum(p), eps);
}

double smooth_max_entropy(const Pmf& p, double eps) {
  require_eps(eps, "smooth_max_entropy");
  require_nonempty(p, "smooth_max_entropy");
  std::vector<Pmf::Atom> order = p.atoms();
  std::stable_sort(order.begin(), order.end(), [](const Pmf::Atom& a, const Pmf::Atom& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  double removed = 0;
  size_t k = 0;
  const double limit = eps * (1 + 1e-12);
  while (k < order.size() && removed + order[k].second <= limit) {
    removed += order[k].second;
    k++;
  }
  if (k == order.size()) throw std::invalid_argument("smooth_max_entropy: eps removes all mass");
  return -std::log2(order[k].second);
}

double statistical_distance(const Pmf& p, const Pmf& q) {
  Accumulator acc;
  const auto& a = p.atoms();
  const auto& b = q.atoms();
  size_t i = 0;
  size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      acc.add(a[i].second);
      i++;
    } else if (i == a.size() || b[j].first < a[i].first) {
      acc.add(b[j].second);
      j++;
    } else {
      acc.add(std::abs(a[i].second - b[j].second));
      i++;
      j++;
    }
  }
  return std::clamp(acc.value() / 2, 0.0, 1.0);
}

Rational statistical_distance_exact(const Pmf& p, const Pmf& q) {
  if (p.support_size() + q.support_size() > (size_t{1} << 17)) {
    throw ParameterRejected("exact statistical distance limited to supports of 2^16 atoms");
  }
  Rational acc = 0;
  auto exact = [](double x) { return Rational(x); };
  const auto& a = p.atoms();
  const auto& b = q.atoms();
  size_t i = 0;
  size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      acc += exact(a[i].second);
      i++;
    } else if (i == a.size() || b[j].first < a[i].first) {
      acc += exact(b[j].second);
      j++;
    } else {
      Rational d = exact(a[i].second) - exact(b[j].second);
      acc += d < 0 ? Rational(-d) : d;
      i++;
      j++;
    }
  }
  return acc / 2;
}

Pmf condition(const JointPmf& j, const BitVec& s) {
  Accumulator mass;
  std::vector<Pmf::Atom> atoms;
  for (const auto& a : j.atoms()) {
    if (a.puzzle == s) {
      atoms.emplace_back(a.key, a.p);
      mass.add(a.p);
    }
  }
  double m = mass.value();
  if (m <= 0) throw ZeroProbabilityEvent("condition: puzzle has zero marginal mass");
  for (auto& a : atoms) a.second /= m;
  // Renormalization can leave the total a few ulps off; re-scale by the realized sum.
  Accumulator check;
  for (const auto& a : atoms) check.add(a.second);
  double c = check.value();
  for (auto& a : atoms) a.second /= c;
  return Pmf::from_atoms(std::move(atoms));
}

double conditional_entropy_key_given_puzzle(const JointPmf& j) {
  Accumulator acc;
  Pmf s = j.puzzle_marginal();
  for (const auto& [puzzle, ps] : s.atoms()) acc.add(ps * shannon_entropy(condition(j, puzzle)));
  return acc.value();
}

Pmf product_power(const Pmf& p, int t) {
  if (t < 1) throw std::invalid_argument("product_power requires t >= 1");
  require_nonempty(p, "product_power");
  double atoms_needed = std::pow(static_cast<double>(p.support_size()), t);
  if (atoms_needed > static_cast<double>(kMaxProductAtoms)) {
    throw ParameterRejected("product_power: support exceeds 2^24 atoms");
  }
  bool fixed_width = p.label_width().has_value();
  std::vector<Pmf::Atom> current;
  for (const auto& a : p.atoms()) {
    current.emplace_back(fixed_width ? a.first : BitVec::tuple({a.first}), a.second);
  }
  for (int step = 1; step < t; step++) {
    std::vector<Pmf::Atom> next;
    next.reserve(current.size() * p.support_size());
    for (const auto& [x, q] : current) {
      for (const auto& [y, r] : p.atoms()) {
        next.emplace_back(x.concat(fixed_width ? y : BitVec::tuple({y})), q * r);
      }
    }
    current = std::move(next);
  }
  // Products of normalized masses are normalized up to rounding well below 1e-12.
  return Pmf::from_atoms(std::move(current), p.subnormalized());
}

Pmf push_forward(const Pmf& p, const std::function<BitVec(const BitVec&)>& f) {
  std::vector<Pmf::Atom> atoms;
  atoms.reserve(p.support_size());
  for (const auto& [x, q] : p.atoms()) atoms.emplace_back(f(x), q);
  return Pmf::from_atoms(std::move(atoms), p.subnormalized());
}

Pmf mixture(const std::vector<std::pair<double, Pmf>>& parts) {
  Accumulator w;
  std::vector<Pmf::Atom> atoms;
  for (const auto& [weight, pmf] : parts) {
    if (!(weight >= 0)) throw std::invalid_argument("mixture weights must be nonnegative");
    w.add(weight);
    for (const auto& [x, q] : pmf.atoms()) atoms.emplace_back(x, weight * q);
  }
  if (std::abs(w.value() - 1) > kMassTol) throw std::invalid_argument("mixture weights must sum to 1");
  return Pmf::from_atoms(std::move(atoms));
}

MassSpectrum spectrum(const Pmf& p) {
  std::map<double, double, std::greater<>> levels;
  for (const auto& [x, q] : p.atoms()) levels[q] += 1;
  return MassSpectrum(levels.begin(), levels.end());
}

MassSpectrum product_spectrum(const Pmf& p, int t) {
  if (t < 1) throw std::invalid_argument("product_spectrum requires t >= 1");
  require_nonempty(p, "product_spectrum");
  std::vector<double> probs;
  for (const auto& [x, q] : p.atoms()) probs.push_back(q);
  const size_t u = probs.size();
  std::vector<double> log_fact(static_cast<size_t>(t) + 1, 0.0);
  for (int i = 1; i <= t; i++) log_fact[i] = log_fact[i - 1] + std::log(static_cast<double>(i));

  std::map<double, double, std::greater<>> levels;
  std::vector<int> counts(u, 0);
  // Enumerate compositions of t into u parts.
  std::function<void(size_t, int)> rec = [&](size_t idx, int remaining) {
    if (idx + 1 == u) {
      counts[idx] = remaining;
      double logp = 0;
      double log_mult = log_fact[t];
      for (size_t i = 0; i < u; i++) {
        logp += counts[i] * std::log(probs[i]);
        log_mult -= log_fact[counts[i]];
      }
      levels[std::exp(logp)] += std::round(std::exp(log_mult));
      return;
    }
    for (int c = remaining; c >= 0; c--) {
      counts[idx] = c;
      rec(idx + 1, remaining - c);
    }
  };
  rec(0, t);
  return MassSpectrum(levels.begin(), levels.end());
}

double smooth_min_entropy(const MassSpectrum& s, double eps) {
  require_eps(eps, "smooth_min_entropy");
  if (s.empty()) throw std::invalid_argument("smooth_min_entropy: empty spectrum");
  MassSpectrum levels = s;
  std::sort(levels.begin(), levels.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  if (eps == 0) return -std::log2(levels.front().first);
  // Water-filling: find lambda with sum (p - lambda)^+ = eps.
  double count = 0;
  double mass = 0;
  for (size_t k = 0; k < levels.size(); k++) {
    count += levels[k].second;
    mass += levels[k].second * levels[k].first;
    double next = k + 1 < levels.size() ? levels[k + 1].first : 0.0;
    double trimmed = mass - count * next;
    if (trimmed >= eps) {
      double lambda = (mass - eps) / count;
      return -std::log2(lambda);
    }
  }
  throw std::invalid_argument("smooth_min_entropy: eps exceeds available mass");
}

double smooth_max_entropy(const MassSpectrum& s, double eps) {
  require_eps(eps, "smooth_max_entropy");
  if (s.empty()) throw std::invalid_argument("smooth_max_entropy: empty spectrum");
  MassSpectrum levels = s;
  std::sort(levels.begin(), levels.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  double removed = 0;
  for (const auto& [q, c] : levels) {
    double room = eps * (1 + 1e-12) - removed;
    double k = room >= 0 ? std::min(c, std::floor(room / q)) : 0.0;
    if (k < c) return -std::log2(q);
    removed += c * q;
  }
  throw std::invalid_argument("smooth_max_entropy: eps removes all mass");
}

double shannon_entropy(const MassSpectrum& s) {
  Accumulator acc;
  for (const auto& [q, c] : s) acc.add(-c * q * std::log2(q));
  return std::max(0.0, acc.value());
}

double max_entropy(const MassSpectrum& s) {
  if (s.empty()) throw std::invalid_argument("max_entropy: empty spectrum");
  double m = 1;
  for (const auto& [q, c] : s) m = std::min(m, q);
  return -std::log2(m);
}

}  // namespace peglab
