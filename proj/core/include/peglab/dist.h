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

#ifndef PEGLAB_DIST_H_
#define PEGLAB_DIST_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "peglab/bitvec.h"
#include "peglab/rng.h"

namespace peglab {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kEntropyTol = 1e-9;
inline constexpr double kMassTol = 1e-12;
inline constexpr size_t kMaxProductAtoms = size_t{1} << 24;

/// Finite probability mass function over bit strings.
///
/// Atoms are kept sorted by label with duplicates merged and zero-mass atoms
/// dropped. A normalized Pmf has total mass 1 within kMassTol; smoothing results may
/// be flagged subnormalized.
class Pmf {
 public:
  using Atom = std::pair<BitVec, double>;

  Pmf() = default;

  static Pmf from_atoms(std::vector<Atom> atoms, bool subnormalized = false);
  static Pmf point(const BitVec& x);
  static Pmf uniform(std::vector<BitVec> labels);
  static Pmf uniform_bits(size_t n);
  /// One-bit labels, "1" with probability p.
  static Pmf bernoulli(double p);
  /// Label i is from_uint(i, width).
  static Pmf from_probabilities(const std::vector<double>& probs, size_t width);

  const std::vector<Atom>& atoms() const { return atoms_; }
  size_t support_size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  double total_mass() const { return total_mass_; }
  bool subnormalized() const { return subnormalized_; }

  double prob(const BitVec& x) const;
  bool contains(const BitVec& x) const { return prob(x) > 0; }
  /// Common label length, or nullopt when labels differ in length or the Pmf is empty.
  std::optional<size_t> label_width() const;
  std::vector<BitVec> support() const;

  BitVec sample(Rng& rng) const;

  bool operator==(const Pmf& other) const = default;

 private:
  std::vector<Atom> atoms_;
  double total_mass_ = 0;
  bool subnormalized_ = false;
};

/// Distribution over (key, puzzle) pairs.
class JointPmf {
 public:
  struct Atom {
    BitVec key;
    BitVec puzzle;
    double p;
  };

  JointPmf() = default;
  static JointPmf from_atoms(std::vector<Atom> atoms);

  /// Atoms sorted by (puzzle, key).
  const std::vector<Atom>& atoms() const { return atoms_; }
  Pmf key_marginal() const;
  Pmf puzzle_marginal() const;
  std::vector<BitVec> puzzles() const;
  /// Pmf over tuple(key, puzzle) labels.
  Pmf flatten() const;
  std::pair<BitVec, BitVec> sample(Rng& rng) const;
  double prob(const BitVec& key, const BitVec& puzzle) const;

 private:
  std::vector<Atom> atoms_;
};

double binary_entropy(double p);

double shannon_entropy(const Pmf& p);
double sample_entropy(const Pmf& p, const BitVec& x);
double min_entropy(const Pmf& p);
/// Largest sample entropy over the support (not log of the support size).
double max_entropy(const Pmf& p);
double smooth_min_entropy(const Pmf& p, double eps);
double smooth_max_entropy(const Pmf& p, double eps);
double statistical_distance(const Pmf& p, const Pmf& q);
Rational statistical_distance_exact(const Pmf& p, const Pmf& q);

Pmf condition(const JointPmf& j, const BitVec& s);
/// H(K | S) = sum_s Pr[s] H(K_s).
double conditional_entropy_key_given_puzzle(const JointPmf& j);

Pmf product_power(const Pmf& p, int t);
Pmf push_forward(const Pmf& p, const std::function<BitVec(const BitVec&)>& f);
Pmf mixture(const std::vector<std::pair<double, Pmf>>& parts);

/// Probability multiset: (probability, multiplicity) with probabilities distinct.
using MassSpectrum = std::vector<std::pair<double, double>>;

MassSpectrum spectrum(const Pmf& p);
/// Spectrum of the t-fold product computed by type classes; never materializes atoms.
MassSpectrum product_spectrum(const Pmf& p, int t);
double smooth_min_entropy(const MassSpectrum& s, double eps);
double smooth_max_entropy(const MassSpectrum& s, double eps);
double shannon_entropy(const MassSpectrum& s);
double max_entropy(const MassSpectrum& s);

std::string to_json(const Pmf& p);
std::string to_json(const JointPmf& j);
Pmf pmf_from_json(std::string_view text);
JointPmf joint_pmf_from_json(std::string_view text);

}  // namespace peglab

#endif  // PEGLAB_DIST_H_
