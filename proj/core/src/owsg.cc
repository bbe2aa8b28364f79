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

#include "peglab/owsg.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "peglab/errors.h"

namespace peglab {

namespace {

constexpr size_t kMaxCircuitQubits = 12;
constexpr size_t kMaxProfileKeyBits = 16;

const char kGateMenuV1[] = R"({
  "version": 1,
  "name": "brick-h-t-cnot",
  "initial_state": "all zeros",
  "qubit_order": "qubit 0 is the most significant bit of the amplitude index",
  "gates": {
    "H": [[0.7071067811865476, 0], [0.7071067811865476, 0], [0.7071067811865476, 0], [-0.7071067811865476, 0]],
    "T": [[1, 0], [0, 0], [0, 0], [0.7071067811865476, 0.7071067811865476]],
    "CNOT": "control first, target second"
  },
  "layer": [
    "apply H to every qubit j",
    "apply T to qubit j when key bit (layer * n + j) mod n is 1",
    "even layer: CNOT(2i, 2i+1) for every i with 2i+1 < n",
    "odd layer: CNOT(2i+1, 2i+2) for every i with 2i+2 < n"
  ]
}
)";

PureState perpendicular(const PureState& psi) {
  const CVector& a = psi.amplitudes();
  Eigen::Index pick = 0;
  a.cwiseAbs().minCoeff(&pick);
  CVector v = CVector::Zero(a.size());
  v(pick) = 1;
  v -= a.dot(v) * a;
  v /= v.norm();
  return PureState(psi.layout(), std::move(v));
}

}  // namespace

OwsgScheme::OwsgScheme(std::string name, size_t key_len, size_t state_qubits, StateGen state_gen,
                       AcceptProbability accept)
    : name_(std::move(name)),
      key_len_(key_len),
      state_qubits_(state_qubits),
      state_gen_(std::move(state_gen)),
      accept_(std::move(accept)) {
  if (!state_gen_ || !accept_) throw std::invalid_argument("OwsgScheme needs state_gen and verify");
}

BitVec OwsgScheme::key_gen(Rng& rng) const { return rng.bits(key_len_); }

PureState OwsgScheme::state_gen(const BitVec& key) const {
  if (key.size() != key_len_) throw std::invalid_argument("key length mismatch");
  return state_gen_(key);
}

double OwsgScheme::accept_probability(const BitVec& key, const PureState& state) const {
  if (key.size() != key_len_) throw std::invalid_argument("key length mismatch");
  return std::clamp(accept_(key, state), 0.0, 1.0);
}

bool OwsgScheme::verify(const BitVec& key, const PureState& state, Rng& rng) const {
  return rng.bernoulli(accept_probability(key, state));
}

OwsgScheme wiesner_owsg(size_t n) {
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("wiesner_owsg needs a positive even key length");
  if (n / 2 > kMaxQubits) throw ParameterRejected("wiesner_owsg state exceeds the qubit budget");
  auto gen = [n](const BitVec& k) { return wiesner_encode(k.prefix(n / 2), k.slice(n / 2, n / 2)); };
  auto accept = [gen](const BitVec& k, const PureState& state) { return overlap(gen(k), state); };
  return OwsgScheme("wiesner", n, n / 2, gen, accept);
}

OwsgScheme random_circuit_owsg(size_t n, size_t depth) {
  if (n == 0) throw std::invalid_argument("random_circuit_owsg needs n >= 1");
  if (n > kMaxCircuitQubits) throw ParameterRejected("random_circuit_owsg supports n <= 12");
  auto gen = [n, depth](const BitVec& k) {
    const CMatrix h = gates::h();
    const CMatrix t = gates::t();
    const CMatrix cx = gates::cnot();
    CVector psi = PureState::zero(RegisterLayout::single("q", n)).amplitudes();
    for (size_t d = 0; d < depth; d++) {
      for (size_t j = 0; j < n; j++) {
        kernels::apply(psi, n, h, {j});
        if (k.get((d * n + j) % n)) kernels::apply(psi, n, t, {j});
      }
      for (size_t a = d % 2; a + 1 < n; a += 2) kernels::apply(psi, n, cx, {a, a + 1});
    }
    psi /= psi.norm();
    return PureState(RegisterLayout::single("q", n), std::move(psi));
  };
  auto accept = [gen](const BitVec& k, const PureState& state) { return overlap(gen(k), state); };
  return OwsgScheme("random_circuit", n, n, gen, accept);
}

const std::string& gate_menu_json() {
  static const std::string doc(kGateMenuV1);
  return doc;
}

OwsgScheme with_swap_test(const OwsgScheme& base) {
  const size_t m = base.state_qubits();
  if (2 * m + 1 > kMaxQubits) throw ParameterRejected("swap test needs 2m+1 <= 14 qubits");
  auto accept = [base, m](const BitVec& k, const PureState& state) {
    const CVector ref = base.state_gen(k).amplitudes();
    const CVector& phi = state.amplitudes();
    const size_t total = 2 * m + 1;
    const size_t dim = size_t{1} << m;
    CVector psi = CVector::Zero(static_cast<Eigen::Index>(size_t{1} << total));
    for (size_t a = 0; a < dim; a++) {
      for (size_t b = 0; b < dim; b++) {
        psi(static_cast<Eigen::Index>(a * dim + b)) =
            ref(static_cast<Eigen::Index>(a)) * phi(static_cast<Eigen::Index>(b));
      }
    }
    kernels::apply(psi, total, gates::h(), {0});
    for (size_t j = 0; j < m; j++) kernels::apply(psi, total, gates::cswap(), {0, 1 + j, 1 + m + j});
    kernels::apply(psi, total, gates::h(), {0});
    return kernels::marginal(psi, total, {0})[0];
  };
  return OwsgScheme(base.name() + "+swap_test", base.key_len(), m,
                    [base](const BitVec& k) { return base.state_gen(k); }, accept);
}

OwsgScheme perturbed_owsg(const OwsgScheme& base, double noise, double threshold) {
  if (!(noise >= 0 && noise <= 1)) throw std::invalid_argument("noise must lie in [0,1]");
  if (!(threshold >= 0 && threshold <= 1)) throw std::invalid_argument("threshold must lie in [0,1]");
  auto weight = [noise](const BitVec& k) {
    const uint64_t u = mix64(fnv1a64(k.to_hex()) ^ 0x6e6f697365ULL);
    return noise * static_cast<double>(u >> 11) * 0x1.0p-53;
  };
  auto gen = [base, weight](const BitVec& k) {
    const PureState psi = base.state_gen(k);
    const double w = weight(k);
    CVector amps = std::sqrt(1 - w) * psi.amplitudes() + std::sqrt(w) * perpendicular(psi).amplitudes();
    amps /= amps.norm();
    return PureState(psi.layout(), std::move(amps));
  };
  auto accept = [base, threshold](const BitVec& k, const PureState& state) {
    return overlap(base.state_gen(k), state) >= threshold ? 1.0 : 0.0;
  };
  return OwsgScheme(base.name() + "+perturbed", base.key_len(), base.state_qubits(), gen, accept);
}

bool CorrectnessProfile::in_set_c(const BitVec& key) const {
  if (key.empty() || key.size() > kMaxProfileKeyBits) return false;
  const uint64_t idx = key.to_uint();
  return idx < accept.size() && accept[idx] >= threshold;
}

CorrectnessProfile correctness_profile(const OwsgScheme& scheme, double threshold) {
  const size_t n = scheme.key_len();
  if (n == 0) throw std::invalid_argument("correctness_profile: empty key space");
  if (n > kMaxProfileKeyBits) throw ParameterRejected("correctness_profile enumerates at most 2^16 keys");
  CorrectnessProfile out;
  out.threshold = threshold;
  out.accept.resize(size_t{1} << n);
  for (uint64_t v = 0; v < out.accept.size(); v++) {
    const BitVec k = BitVec::from_uint(v, n);
    out.accept[v] = scheme.accept_probability(k, scheme.state_gen(k));
    if (out.accept[v] >= threshold) out.set_c.push_back(k);
  }
  return out;
}

}  // namespace peglab
