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

#include "peglab/puzzles.h"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "peglab/errors.h"

namespace peglab {

namespace {

constexpr size_t kMaxEnumeratedKeyBits = 16;

// 3|s><s| - I for the eigenvector of `basis` selected by `outcome`.
CMatrix snapshot_factor(Pauli basis, bool outcome) {
  const double r = 1 / std::sqrt(2.0);
  CVector s(2);
  switch (basis) {
    case Pauli::kZ:
      s << (outcome ? 0.0 : 1.0), (outcome ? 1.0 : 0.0);
      break;
    case Pauli::kX:
      s << r, (outcome ? -r : r);
      break;
    case Pauli::kY:
      s << r, (outcome ? Complex(0, -r) : Complex(0, r));
      break;
  }
  return 3.0 * s * s.adjoint() - CMatrix::Identity(2, 2);
}

// Rotation taking the basis' eigenvectors to |0>, |1>.
CMatrix basis_rotation(Pauli basis) {
  switch (basis) {
    case Pauli::kX:
      return gates::h();
    case Pauli::kY:
      return gates::h() * gates::sdg();
    case Pauli::kZ:
      break;
  }
  return gates::identity(1);
}

}  // namespace

Shadow::Shadow(size_t num_qubits, std::vector<Snapshot> snapshots)
    : num_qubits_(num_qubits), snapshots_(std::move(snapshots)) {
  for (const auto& s : snapshots_) {
    if (s.basis.size() != num_qubits_ || s.outcome.size() != num_qubits_) {
      throw std::invalid_argument("snapshot length does not match the shadow width");
    }
  }
}

BitVec Shadow::encode() const {
  BitVec body(snapshots_.size() * 3 * num_qubits_);
  size_t pos = 0;
  for (const auto& s : snapshots_) {
    for (Pauli b : s.basis) {
      const auto v = static_cast<uint8_t>(b);
      body.set(pos++, (v >> 1) & 1);
      body.set(pos++, v & 1);
    }
    for (size_t j = 0; j < num_qubits_; j++) body.set(pos++, s.outcome.get(j));
  }
  return BitVec::tuple({BitVec::from_uint(num_qubits_, 16), BitVec::from_uint(snapshots_.size(), 32), body});
}

Shadow Shadow::decode(const BitVec& bits) {
  const std::vector<BitVec> fields = BitVec::untuple(bits);
  if (fields.size() != 3 || fields[0].size() != 16 || fields[1].size() != 32) {
    throw std::invalid_argument("malformed shadow encoding");
  }
  const size_t m = fields[0].to_uint();
  const size_t t = fields[1].to_uint();
  const BitVec& body = fields[2];
  if (body.size() != t * 3 * m) throw std::invalid_argument("shadow body length mismatch");
  std::vector<Snapshot> snaps(t);
  size_t pos = 0;
  for (auto& s : snaps) {
    s.basis.resize(m);
    for (size_t j = 0; j < m; j++) {
      const unsigned v = (body.get(pos) << 1) | body.get(pos + 1);
      pos += 2;
      if (v > 2) throw std::invalid_argument("invalid Pauli code in shadow");
      s.basis[j] = static_cast<Pauli>(v);
    }
    s.outcome = body.slice(pos, m);
    pos += m;
  }
  return Shadow(m, std::move(snaps));
}

Shadow shadow_gen(const PureState& state, size_t snapshots, Rng& rng) {
  const size_t m = state.num_qubits();
  std::vector<Snapshot> out;
  out.reserve(snapshots);
  for (size_t t = 0; t < snapshots; t++) {
    Snapshot snap;
    snap.basis.resize(m);
    CVector psi = state.amplitudes();
    for (size_t j = 0; j < m; j++) {
      snap.basis[j] = static_cast<Pauli>(rng.below(3));
      if (snap.basis[j] != Pauli::kZ) kernels::apply(psi, m, basis_rotation(snap.basis[j]), {j});
    }
    const double u = rng.uniform();
    double acc = 0;
    size_t idx = static_cast<size_t>(psi.size()) - 1;
    for (Eigen::Index i = 0; i < psi.size(); i++) {
      acc += std::norm(psi(i));
      if (u < acc) {
        idx = static_cast<size_t>(i);
        break;
      }
    }
    snap.outcome = BitVec::from_uint(idx, m);
    out.push_back(std::move(snap));
  }
  return Shadow(m, std::move(out));
}

double snapshot_value(const Snapshot& snap, const PureState& target) {
  const size_t m = target.num_qubits();
  if (snap.basis.size() != m) throw std::invalid_argument("snapshot width does not match target");
  CVector v = target.amplitudes();
  for (size_t j = 0; j < m; j++) kernels::apply(v, m, snapshot_factor(snap.basis[j], snap.outcome.get(j)), {j});
  return target.amplitudes().dot(v).real();
}

double estimate_overlap(const Shadow& shadow, const PureState& target, size_t groups) {
  if (shadow.size() == 0) throw std::invalid_argument("estimate_overlap: empty shadow");
  if (groups == 0 || shadow.size() < groups) {
    throw std::invalid_argument("estimate_overlap needs at least one snapshot per group");
  }
  const size_t per = shadow.size() / groups;
  std::vector<double> means(groups, 0.0);
  for (size_t g = 0; g < groups; g++) {
    for (size_t t = g * per; t < (g + 1) * per; t++) means[g] += snapshot_value(shadow.snapshots()[t], target);
    means[g] /= static_cast<double>(per);
  }
  std::sort(means.begin(), means.end());
  if (groups % 2 == 1) return means[groups / 2];
  return (means[groups / 2 - 1] + means[groups / 2]) / 2;
}

std::vector<BitVec> preimage_list(const Shadow& shadow, const OwsgScheme& scheme, const ShadowParams& params) {
  const size_t n = scheme.key_len();
  if (n > kMaxEnumeratedKeyBits) throw ParameterRejected("preimage_list enumerates at most 2^16 keys");
  std::vector<BitVec> out;
  for (uint64_t v = 0; v < (uint64_t{1} << n); v++) {
    const BitVec k = BitVec::from_uint(v, n);
    if (estimate_overlap(shadow, scheme.state_gen(k), params.groups) >= 1 - params.epsilon) out.push_back(k);
  }
  return out;
}

PuzzleInstance puzzle_from_owsg(const OwsgScheme& scheme, const ShadowParams& params) {
  auto profile = std::make_shared<const CorrectnessProfile>(correctness_profile(scheme));
  const size_t t = params.snapshots_for(scheme.key_len());
  PuzzleInstance p;
  p.name = scheme.name() + "-shadow-puzzle";
  p.key_len = scheme.key_len();
  p.samp = [scheme, t](Rng& rng) {
    BitVec k = scheme.key_gen(rng);
    Rng shadow_rng = rng.fork();
    BitVec s = shadow_gen(scheme.state_gen(k), t, shadow_rng).encode();
    return std::make_pair(std::move(k), std::move(s));
  };
  p.ver = [scheme, params, profile](const BitVec& k, const BitVec& s) {
    if (k.size() != scheme.key_len() || !profile->in_set_c(k)) return false;
    const Shadow shadow = Shadow::decode(s);
    return estimate_overlap(shadow, scheme.state_gen(k), params.groups) >= 1 - params.epsilon;
  };
  return p;
}

PuzzleInstance tabulated_puzzle(std::string name, JointPmf joint) {
  if (joint.atoms().empty()) throw std::invalid_argument("tabulated puzzle needs atoms");
  PuzzleInstance p;
  p.name = std::move(name);
  p.key_len = joint.atoms().front().key.size();
  auto table = std::make_shared<const JointPmf>(joint);
  p.samp = [table](Rng& rng) { return table->sample(rng); };
  p.ver = [table](const BitVec& k, const BitVec& s) { return table->prob(k, s) > 0; };
  p.exact_joint = std::move(joint);
  return p;
}

std::optional<BitVec> brute_force_invert(const PuzzleInstance& puzzle, const BitVec& s) {
  const size_t n = puzzle.key_len;
  if (n > kMaxEnumeratedKeyBits) throw ParameterRejected("brute_force_invert enumerates at most 2^16 keys");
  for (uint64_t v = 0; v < (uint64_t{1} << n); v++) {
    BitVec k = BitVec::from_uint(v, n);
    if (puzzle.ver(k, s)) return k;
  }
  return std::nullopt;
}

std::vector<PuzzleInstance> tabulated_puzzles() {
  std::vector<PuzzleInstance> out;

  {
    std::vector<JointPmf::Atom> atoms;
    for (uint64_t v = 0; v < 16; v++) {
      const BitVec k = BitVec::from_uint(v, 4);
      atoms.push_back({k, k.prefix(2), 1.0 / 16});
    }
    out.push_back(tabulated_puzzle("flat", JointPmf::from_atoms(std::move(atoms))));
  }

  {
    // Key j (0-based) has weight 2^-(j+1), relabelled by xor with s * 111.
    const double norm = 1 - std::ldexp(1.0, -8);
    std::vector<JointPmf::Atom> atoms;
    for (uint64_t s = 0; s < 2; s++) {
      for (uint64_t j = 0; j < 8; j++) {
        const BitVec k = BitVec::from_uint(j ^ (s ? 7 : 0), 3);
        atoms.push_back({k, BitVec::from_uint(s, 1), 0.5 * std::ldexp(1.0, -static_cast<int>(j + 1)) / norm});
      }
    }
    out.push_back(tabulated_puzzle("geometric", JointPmf::from_atoms(std::move(atoms))));
  }

  {
    std::vector<JointPmf::Atom> atoms;
    for (uint64_t s = 0; s < 2; s++) {
      for (uint64_t j = 0; j < 16; j++) {
        const BitVec k = BitVec::from_uint(j ^ (s ? 15 : 0), 4);
        atoms.push_back({k, BitVec::from_uint(s, 1), 0.5 * (j == 0 ? 0.5 : 1.0 / 30)});
      }
    }
    out.push_back(tabulated_puzzle("two_level", JointPmf::from_atoms(std::move(atoms))));
  }

  {
    const uint64_t keys[4] = {0x3a5c, 0xc1e7, 0x5f02, 0x96bd};
    std::vector<JointPmf::Atom> atoms;
    for (uint64_t s = 0; s < 4; s++) atoms.push_back({BitVec::from_uint(keys[s], 16), BitVec::from_uint(s, 2), 0.25});
    out.push_back(tabulated_puzzle("demo", JointPmf::from_atoms(std::move(atoms))));
  }

  return out;
}

PuzzleInstance tabulated_puzzle_by_name(const std::string& name) {
  for (auto& p : tabulated_puzzles()) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown tabulated puzzle: " + name);
}

}  // namespace peglab
