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

#ifndef PEGLAB_OWSG_H_
#define PEGLAB_OWSG_H_

#include <functional>
#include <string>
#include <vector>

#include "peglab/bitvec.h"
#include "peglab/qsim.h"
#include "peglab/rng.h"

namespace peglab {

/// Keyed generator of pure states with a verification procedure.
///
/// Keys are uniform over {0,1}^key_len. Verification is expressed through its exact
/// acceptance probability; `verify` flips a coin with that bias.
class OwsgScheme {
 public:
  using StateGen = std::function<PureState(const BitVec&)>;
  using AcceptProbability = std::function<double(const BitVec&, const PureState&)>;

  OwsgScheme(std::string name, size_t key_len, size_t state_qubits, StateGen state_gen,
             AcceptProbability accept);

  const std::string& name() const { return name_; }
  size_t key_len() const { return key_len_; }
  size_t state_qubits() const { return state_qubits_; }

  BitVec key_gen(Rng& rng) const;
  PureState state_gen(const BitVec& key) const;
  double accept_probability(const BitVec& key, const PureState& state) const;
  bool verify(const BitVec& key, const PureState& state, Rng& rng) const;

 private:
  std::string name_;
  size_t key_len_;
  size_t state_qubits_;
  StateGen state_gen_;
  AcceptProbability accept_;
};

/// Key (theta, x) of n/2 bits each; state |x>_theta; verify accepts with probability
/// |<psi_k|state>|^2.
OwsgScheme wiesner_owsg(size_t n);

/// n qubits, `depth` brick layers drawn from the versioned gate menu (see
/// gate_menu_json). Layer d applies H to every qubit, T to qubit j when key bit
/// (d*n + j) mod n is set, then CNOTs on (2i, 2i+1) for even d or (2i+1, 2i+2) for odd d.
OwsgScheme random_circuit_owsg(size_t n, size_t depth);

/// The published gate menu document, byte-identical to data/gate_menu_v1.json.
const std::string& gate_menu_json();

/// Same states, but verification is a simulated swap test against a fresh copy of
/// psi_k (acceptance (1 + overlap) / 2). Demonstration only; needs 2m+1 <= 14 qubits.
OwsgScheme with_swap_test(const OwsgScheme& base);

/// State generation perturbed by key-dependent noise: the output is
/// sqrt(1-w_k) psi_k + sqrt(w_k) psi_k^perp with w_k in [0, noise]; verify accepts
/// deterministically iff the overlap with psi_k is at least `threshold`.
OwsgScheme perturbed_owsg(const OwsgScheme& base, double noise, double threshold);

struct CorrectnessProfile {
  /// Indexed by key.to_uint().
  std::vector<double> accept;
  std::vector<BitVec> set_c;
  double threshold = 0.99;

  bool in_set_c(const BitVec& key) const;
};

/// Exact acceptance probability of Ver(k, StateGen(k)) for every key; key_len in [1, 16].
CorrectnessProfile correctness_profile(const OwsgScheme& scheme, double threshold = 0.99);

}  // namespace peglab

#endif  // PEGLAB_OWSG_H_
