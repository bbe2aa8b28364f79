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

#ifndef PEGLAB_PUZZLES_H_
#define PEGLAB_PUZZLES_H_

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "peglab/bitvec.h"
#include "peglab/dist.h"
#include "peglab/owsg.h"
#include "peglab/qsim.h"
#include "peglab/rng.h"

namespace peglab {

enum class Pauli : uint8_t { kX = 0, kY = 1, kZ = 2 };

struct Snapshot {
  std::vector<Pauli> basis;
  /// outcome[j] = 0 selects the +1 eigenvector of basis[j].
  BitVec outcome;

  bool operator==(const Snapshot& other) const = default;
};

/// Random-Pauli classical shadow of an m-qubit state.
class Shadow {
 public:
  Shadow(size_t num_qubits, std::vector<Snapshot> snapshots);

  size_t num_qubits() const { return num_qubits_; }
  size_t size() const { return snapshots_.size(); }
  const std::vector<Snapshot>& snapshots() const { return snapshots_; }

  /// tuple(m as 16 bits, T as 32 bits, body) where the body holds, per snapshot,
  /// 2 bits per qubit of basis followed by m outcome bits.
  BitVec encode() const;
  static Shadow decode(const BitVec& bits);

  bool operator==(const Shadow& other) const = default;

 private:
  size_t num_qubits_;
  std::vector<Snapshot> snapshots_;
};

struct ShadowParams {
  double epsilon = 0.1;
  /// Snapshot count; 0 selects 16 n.
  size_t snapshots = 0;
  /// Median-of-means groups.
  size_t groups = 8;

  size_t snapshots_for(size_t n) const { return snapshots == 0 ? 16 * n : snapshots; }
  /// Failure probability the asymptotic analysis targets: 2^{-2n}.
  static double delta(size_t n) { return std::ldexp(1.0, -2 * static_cast<int>(n)); }
};

Shadow shadow_gen(const PureState& state, size_t snapshots, Rng& rng);

/// Exact <t| (x)_j (3|s_j><s_j| - I) |t> for one snapshot.
double snapshot_value(const Snapshot& snap, const PureState& target);

/// Median of `groups` means over the first groups * floor(T / groups) snapshots. An
/// even group count takes the mean of the two middle values.
double estimate_overlap(const Shadow& shadow, const PureState& target, size_t groups);

/// Every key whose state has estimated overlap at least 1 - epsilon.
std::vector<BitVec> preimage_list(const Shadow& shadow, const OwsgScheme& scheme,
                                  const ShadowParams& params);

/// Sampler and (possibly brute-force) verifier over classical strings.
struct PuzzleInstance {
  std::string name;
  size_t key_len = 0;
  std::function<std::pair<BitVec, BitVec>(Rng&)> samp;
  std::function<bool(const BitVec&, const BitVec&)> ver;
  std::optional<JointPmf> exact_joint;
};

/// samp: k <- KeyGen, s = encode(ShadowGen(psi_k, T)). ver(k, s): k in set C and the
/// shadow's estimated overlap with psi_k is at least 1 - epsilon (membership in L(s)).
PuzzleInstance puzzle_from_owsg(const OwsgScheme& scheme, const ShadowParams& params);

/// Puzzle that samples from and verifies against an exact joint table.
PuzzleInstance tabulated_puzzle(std::string name, JointPmf joint);

/// Lexicographically first key accepted by ver, or nullopt.
std::optional<BitVec> brute_force_invert(const PuzzleInstance& puzzle, const BitVec& s);

/// flat (4-bit keys, puzzle = first 2 bits), geometric (8 keys, p proportional to
/// 2^-j), two_level (one key at 1/2, fifteen at 1/30), and demo (four 16-bit keys,
/// one per puzzle).
std::vector<PuzzleInstance> tabulated_puzzles();
PuzzleInstance tabulated_puzzle_by_name(const std::string& name);

}  // namespace peglab

#endif  // PEGLAB_PUZZLES_H_
