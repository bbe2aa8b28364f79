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

#ifndef PEGLAB_COMMIT_H_
#define PEGLAB_COMMIT_H_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "peglab/dist.h"
#include "peglab/qsim.h"
#include "peglab/rng.h"

namespace peglab {

struct Gate {
  CMatrix u;
  std::vector<size_t> qubits;
};

/// Non-interactive bit commitment given as a gate list over (M, W).
///
/// Qubit 0 is M and qubits 1..w are W. After Com the same qubits are read as the
/// partition (C, D).
class CommitScheme {
 public:
  CommitScheme(std::string name, size_t w_qubits, std::vector<size_t> c_qubits, std::vector<size_t> d_qubits,
               std::vector<Gate> gates);

  const std::string& name() const { return name_; }
  size_t num_qubits() const { return 1 + w_qubits_; }
  size_t w_count() const { return w_qubits_; }
  std::vector<size_t> w_qubits() const;
  const std::vector<size_t>& c_qubits() const { return c_qubits_; }
  const std::vector<size_t>& d_qubits() const { return d_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }

  /// Claimed flavors, descriptive only.
  std::string hiding_flavor = "unspecified";
  std::string binding_flavor = "unspecified";
  /// Set by dual_commit: (M~, M_2), the CNOT control and target.
  std::optional<std::pair<size_t, size_t>> copy_pair;

  /// Applies Com (or Com^dagger) to a register embedded in a larger system; scheme
  /// qubit q acts on global qubit map[q].
  void apply(CVector& psi, size_t total_qubits, const std::vector<size_t>& map, bool inverse = false) const;
  void apply(CVector& psi, bool inverse = false) const;

  /// Com |b>|0^w>.
  CVector commit_state(int b) const;

  /// Canonical JSON: layout, gates as flattened (re, im) arrays, and an FNV-1a checksum.
  std::string descriptor_json() const;

 private:
  std::string name_;
  size_t w_qubits_;
  std::vector<size_t> c_qubits_;
  std::vector<size_t> d_qubits_;
  std::vector<Gate> gates_;
};

/// Pr[receiver outputs b] after an honest commit to b and honest opening.
double completeness(const CommitScheme& scheme, int b);

/// Unnormalized Tr_D of Com |b, 0>.
CMatrix reduced_commit_state(const CommitScheme& scheme, int b);

/// 1/2 + TD(rho_C^0, rho_C^1) / 2.
double hiding_advantage(const CommitScheme& scheme);

/// Malicious committer: a state over the scheme's qubits followed by e private
/// qubits, and a two-outcome measurement {Pi_0, I - Pi_0} on (D, E) with D in the
/// scheme's order. Without Pi_0 the Helstrom-optimal measurement is used.
struct AdversaryStrategy {
  CVector state;
  size_t e_qubits = 0;
  std::optional<CMatrix> pi0;
};

/// Honest commitment to |+> with no side register.
AdversaryStrategy superposition_attacker(const CommitScheme& scheme);

struct BindingResult {
  double p_accept = 0;
  double advantage = 0;
  /// Unnormalized (D, E) states for the unmeasured and measured branches.
  CMatrix sigma0;
  CMatrix sigma1;
};

enum class BindingForm {
  kDirect,
  /// Inserts Com^dagger Com and repeats the W projection after the validity check.
  kInflated,
};

/// Exact collapse-binding experiment: Pr[b' = b].
BindingResult binding_experiment(const CommitScheme& scheme, const AdversaryStrategy& adv,
                                 BindingForm form = BindingForm::kDirect);
/// Sampled experiment over `trials` runs; returns the empirical Pr[b' = b].
double binding_experiment(const CommitScheme& scheme, const AdversaryStrategy& adv, Rng& rng, size_t trials);

/// |b>_M |0>_W -> |b>_M sum_x sqrt(p_b(x)) |x>_C |x>_{W'}; C = first a qubits of W,
/// D = (rest of W, M). Labels must share a width a <= 6.
CommitScheme purification_commit(const Pmf& p0, const Pmf& p1);

CommitScheme basis_commit();
CommitScheme swap_commit();
/// TD(rho_C^0, rho_C^1) = tau.
CommitScheme leaky_commit(double tau);
std::vector<CommitScheme> toy_schemes();

using FlavorSwap = std::function<CommitScheme(const CommitScheme&)>;
/// Placeholder flavor swap: returns its argument with the flavor tags exchanged.
CommitScheme identity_flavor_swap(const CommitScheme& scheme);

/// M~ = qubit 0, then W_1, M_2, W_2. CNOT(M~, M_2), Com_1 on (M~, W_1), Com_2 on (M_2, W_2).
CommitScheme dual_commit(const CommitScheme& com1, const CommitScheme& com2);

/// t >= 2. New M on qubit 0 (part of D), then (M_i, W_i) blocks. H on M_1..M_{t-1}, parity
/// of M and M_1..M_{t-1} into M_t, then each Com_i.
CommitScheme xor_combine(const std::vector<CommitScheme>& parts);

/// Max entrywise difference between the global states after CNOT(M~, M_2) followed
/// by measuring M~ versus measuring M_2, for input (alpha|0> + beta|1>)_{M~} |0>_W.
double cnot_copy_asymmetry(const CommitScheme& dual, Complex alpha, Complex beta);

}  // namespace peglab

#endif  // PEGLAB_COMMIT_H_
