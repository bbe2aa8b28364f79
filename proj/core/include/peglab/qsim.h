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

#ifndef PEGLAB_QSIM_H_
#define PEGLAB_QSIM_H_

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "peglab/bitvec.h"
#include "peglab/rng.h"

namespace peglab {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr size_t kMaxQubits = 14;
inline constexpr size_t kMaxDensityQubits = 12;

/// Ordered named registers. Qubit 0 is the most significant bit of a basis index, so
/// |b_0 b_1 ... b_{m-1}> has index sum_q b_q 2^{m-1-q}.
class RegisterLayout {
 public:
  RegisterLayout() = default;
  explicit RegisterLayout(std::vector<std::pair<std::string, size_t>> registers);
  static RegisterLayout single(const std::string& name, size_t qubits);

  size_t num_qubits() const { return num_qubits_; }
  size_t dimension() const { return size_t{1} << num_qubits_; }
  const std::vector<std::pair<std::string, size_t>>& registers() const { return registers_; }
  bool has(const std::string& name) const;
  std::vector<size_t> qubits(const std::string& name) const;
  std::vector<size_t> qubits(const std::vector<std::string>& names) const;
  RegisterLayout subset(const std::vector<std::string>& names) const;

  bool operator==(const RegisterLayout& other) const = default;

 private:
  std::vector<std::pair<std::string, size_t>> registers_;
  std::vector<size_t> offsets_;
  size_t num_qubits_ = 0;
};

class PureState {
 public:
  PureState(RegisterLayout layout, CVector amplitudes);
  static PureState basis(RegisterLayout layout, const BitVec& bits);
  static PureState zero(RegisterLayout layout);

  const RegisterLayout& layout() const { return layout_; }
  const CVector& amplitudes() const { return amplitudes_; }
  size_t num_qubits() const { return layout_.num_qubits(); }

 private:
  RegisterLayout layout_;
  CVector amplitudes_;
};

class DensityMatrix {
 public:
  /// Checks dimension, Hermiticity (1e-10) and unit trace (1e-10).
  DensityMatrix(RegisterLayout layout, CMatrix entries);
  static DensityMatrix from_pure(const PureState& psi);

  const RegisterLayout& layout() const { return layout_; }
  const CMatrix& entries() const { return entries_; }
  size_t num_qubits() const { return layout_.num_qubits(); }
  double purity() const;
  double min_eigenvalue() const;
  /// Full invariant check including positive semidefiniteness (min eigenvalue >= -1e-8).
  void validate() const;

 private:
  RegisterLayout layout_;
  CMatrix entries_;
};

namespace gates {
CMatrix identity(size_t qubits);
CMatrix x();
CMatrix z();
CMatrix h();
CMatrix s();
CMatrix sdg();
CMatrix t();
CMatrix cnot();
CMatrix swap();
CMatrix cswap();
}  // namespace gates

bool is_unitary(const CMatrix& u, double tol = 1e-10);

/// Low-level kernels on raw (possibly unnormalized) amplitude vectors.
namespace kernels {
void apply(CVector& psi, size_t num_qubits, const CMatrix& u, const std::vector<size_t>& qubits);
/// Zeroes every amplitude whose `qubits` disagree with `bits`.
void project(CVector& psi, size_t num_qubits, const std::vector<size_t>& qubits, const BitVec& bits);
/// Outcome probabilities over the 2^|qubits| values of `qubits`.
std::vector<double> marginal(const CVector& psi, size_t num_qubits, const std::vector<size_t>& qubits);
/// Tr_{rest} |psi><psi| with rows ordered by `keep`; not renormalized.
CMatrix reduce(const CVector& psi, size_t num_qubits, const std::vector<size_t>& keep);
CMatrix reduce(const CMatrix& rho, size_t num_qubits, const std::vector<size_t>& keep);
}  // namespace kernels

PureState apply_unitary(const PureState& state, const CMatrix& u, const std::vector<std::string>& registers);
PureState apply_unitary_qubits(const PureState& state, const CMatrix& u, const std::vector<size_t>& qubits);
DensityMatrix apply_unitary(const DensityMatrix& rho, const CMatrix& u, const std::vector<std::string>& registers);

struct Measurement {
  BitVec outcome;
  PureState post;
};
Measurement measure_computational(const PureState& state, const std::string& reg, Rng& rng);

struct Projection {
  double probability = 0;
  /// Absent when the probability is below 1e-12.
  std::optional<PureState> post;
};
Projection project(const PureState& state, const std::string& reg, const BitVec& bits);

DensityMatrix partial_trace(const PureState& state, const std::vector<std::string>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep);

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
/// (1/2) sum |eig(a - b)| for arbitrary Hermitian (possibly subnormalized) operators.
double trace_norm_distance(const CMatrix& a, const CMatrix& b);
double overlap(const PureState& psi, const PureState& phi);

PureState wiesner_encode(const BitVec& theta, const BitVec& x);

}  // namespace peglab

#endif  // PEGLAB_QSIM_H_
