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

#include "peglab/qsim.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "peglab/errors.h"

namespace peglab {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kProjectFloor = 1e-12;

size_t bit_position(size_t num_qubits, size_t q) { return num_qubits - 1 - q; }

void check_qubits(size_t num_qubits, const std::vector<size_t>& qubits) {
  std::set<size_t> seen;
  for (size_t q : qubits) {
    if (q >= num_qubits) throw std::out_of_range("qubit index out of range");
    if (!seen.insert(q).second) throw std::invalid_argument("duplicate qubit in target list");
  }
}

// Offsets of the 2^k local basis states of `qubits` (qubits[0] most significant).
std::vector<size_t> local_offsets(size_t num_qubits, const std::vector<size_t>& qubits) {
  const size_t k = qubits.size();
  std::vector<size_t> off(size_t{1} << k, 0);
  for (size_t l = 0; l < off.size(); l++) {
    for (size_t t = 0; t < k; t++) {
      if ((l >> (k - 1 - t)) & 1) off[l] |= size_t{1} << bit_position(num_qubits, qubits[t]);
    }
  }
  return off;
}

size_t gather(size_t index, size_t num_qubits, const std::vector<size_t>& qubits) {
  size_t v = 0;
  for (size_t q : qubits) v = (v << 1) | ((index >> bit_position(num_qubits, q)) & 1);
  return v;
}

std::vector<size_t> complement(size_t num_qubits, const std::vector<size_t>& keep) {
  std::vector<size_t> rest;
  for (size_t q = 0; q < num_qubits; q++) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) rest.push_back(q);
  }
  return rest;
}

CMatrix hermitian_part(const CMatrix& a) { return (a + a.adjoint()) / 2.0; }

}  // namespace

RegisterLayout::RegisterLayout(std::vector<std::pair<std::string, size_t>> registers)
    : registers_(std::move(registers)) {
  std::set<std::string> names;
  for (const auto& [name, count] : registers_) {
    if (!names.insert(name).second) throw std::invalid_argument("duplicate register name: " + name);
    offsets_.push_back(num_qubits_);
    num_qubits_ += count;
  }
  if (num_qubits_ > kMaxQubits) throw ParameterRejected("register layout exceeds 14 qubits");
}

RegisterLayout RegisterLayout::single(const std::string& name, size_t qubits) {
  return RegisterLayout({{name, qubits}});
}

bool RegisterLayout::has(const std::string& name) const {
  return std::any_of(registers_.begin(), registers_.end(), [&](const auto& r) { return r.first == name; });
}

std::vector<size_t> RegisterLayout::qubits(const std::string& name) const {
  for (size_t r = 0; r < registers_.size(); r++) {
    if (registers_[r].first == name) {
      std::vector<size_t> out;
      for (size_t j = 0; j < registers_[r].second; j++) out.push_back(offsets_[r] + j);
      return out;
    }
  }
  throw std::invalid_argument("unknown register: " + name);
}

std::vector<size_t> RegisterLayout::qubits(const std::vector<std::string>& names) const {
  std::vector<size_t> out;
  for (const auto& name : names) {
    auto q = qubits(name);
    out.insert(out.end(), q.begin(), q.end());
  }
  return out;
}

RegisterLayout RegisterLayout::subset(const std::vector<std::string>& names) const {
  std::vector<std::pair<std::string, size_t>> regs;
  for (const auto& name : names) regs.emplace_back(name, qubits(name).size());
  return RegisterLayout(std::move(regs));
}

PureState::PureState(RegisterLayout layout, CVector amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<size_t>(amplitudes_.size()) != layout_.dimension()) {
    throw std::invalid_argument("amplitude vector does not match layout dimension");
  }
  if (std::abs(amplitudes_.squaredNorm() - 1) > kNormTol) {
    throw std::invalid_argument("pure state must have unit norm");
  }
}

PureState PureState::basis(RegisterLayout layout, const BitVec& bits) {
  if (bits.size() != layout.num_qubits()) throw std::invalid_argument("basis label length mismatch");
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(layout.dimension()));
  amps(static_cast<Eigen::Index>(bits.to_uint())) = 1;
  return PureState(std::move(layout), std::move(amps));
}

PureState PureState::zero(RegisterLayout layout) {
  size_t m = layout.num_qubits();
  return basis(std::move(layout), BitVec(m));
}

DensityMatrix::DensityMatrix(RegisterLayout layout, CMatrix entries)
    : layout_(std::move(layout)), entries_(std::move(entries)) {
  if (layout_.num_qubits() > kMaxDensityQubits) {
    throw ParameterRejected("density matrices limited to 12 qubits");
  }
  const auto dim = static_cast<Eigen::Index>(layout_.dimension());
  if (entries_.rows() != dim || entries_.cols() != dim) {
    throw std::invalid_argument("density matrix does not match layout dimension");
  }
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kNormTol) {
    throw std::invalid_argument("density matrix must be Hermitian");
  }
  if (std::abs(entries_.trace().real() - 1) > kNormTol) {
    throw std::invalid_argument("density matrix must have unit trace");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  const CVector& a = psi.amplitudes();
  return DensityMatrix(psi.layout(), a * a.adjoint());
}

double DensityMatrix::purity() const { return (entries_ * entries_).trace().real(); }

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(entries_), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

void DensityMatrix::validate() const {
  if (min_eigenvalue() < -1e-8) throw std::invalid_argument("density matrix is not PSD");
}

namespace gates {

CMatrix identity(size_t qubits) {
  auto d = static_cast<Eigen::Index>(size_t{1} << qubits);
  return CMatrix::Identity(d, d);
}

CMatrix x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMatrix z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

CMatrix h() {
  const double r = 1 / std::sqrt(2.0);
  CMatrix m(2, 2);
  m << r, r, r, -r;
  return m;
}

CMatrix s() {
  CMatrix m(2, 2);
  m << 1, 0, 0, Complex(0, 1);
  return m;
}

CMatrix sdg() { return s().adjoint(); }

CMatrix t() {
  CMatrix m(2, 2);
  m << 1, 0, 0, std::polar(1.0, M_PI / 4);
  return m;
}

CMatrix cnot() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

CMatrix swap() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(3, 3) = 1;
  return m;
}

CMatrix cswap() {
  CMatrix m = CMatrix::Identity(8, 8);
  m(5, 5) = 0;
  m(6, 6) = 0;
  m(5, 6) = 1;
  m(6, 5) = 1;
  return m;
}

}  // namespace gates

bool is_unitary(const CMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  CMatrix prod = u.adjoint() * u;
  return (prod - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

namespace kernels {

void apply(CVector& psi, size_t num_qubits, const CMatrix& u, const std::vector<size_t>& qubits) {
  check_qubits(num_qubits, qubits);
  const size_t k = qubits.size();
  const auto local = static_cast<Eigen::Index>(size_t{1} << k);
  if (u.rows() != local || u.cols() != local) throw std::invalid_argument("unitary dimension mismatch");
  if (static_cast<size_t>(psi.size()) != (size_t{1} << num_qubits)) {
    throw std::invalid_argument("state dimension mismatch");
  }
  const std::vector<size_t> off = local_offsets(num_qubits, qubits);
  size_t mask = 0;
  for (size_t o : off) mask |= o;
  CVector buf(local);
  CVector res(local);
  for (size_t base = 0; base < static_cast<size_t>(psi.size()); base++) {
    if (base & mask) continue;
    for (Eigen::Index l = 0; l < local; l++) buf(l) = psi(static_cast<Eigen::Index>(base | off[l]));
    res.noalias() = u * buf;
    for (Eigen::Index l = 0; l < local; l++) psi(static_cast<Eigen::Index>(base | off[l])) = res(l);
  }
}

void project(CVector& psi, size_t num_qubits, const std::vector<size_t>& qubits, const BitVec& bits) {
  check_qubits(num_qubits, qubits);
  if (bits.size() != qubits.size()) throw std::invalid_argument("projection label length mismatch");
  const size_t want = qubits.empty() ? 0 : bits.to_uint();
  for (size_t idx = 0; idx < static_cast<size_t>(psi.size()); idx++) {
    if (gather(idx, num_qubits, qubits) != want) psi(static_cast<Eigen::Index>(idx)) = 0;
  }
}

std::vector<double> marginal(const CVector& psi, size_t num_qubits, const std::vector<size_t>& qubits) {
  check_qubits(num_qubits, qubits);
  std::vector<double> probs(size_t{1} << qubits.size(), 0.0);
  for (size_t idx = 0; idx < static_cast<size_t>(psi.size()); idx++) {
    probs[gather(idx, num_qubits, qubits)] += std::norm(psi(static_cast<Eigen::Index>(idx)));
  }
  return probs;
}

CMatrix reduce(const CVector& psi, size_t num_qubits, const std::vector<size_t>& keep) {
  check_qubits(num_qubits, keep);
  const std::vector<size_t> rest = complement(num_qubits, keep);
  const auto rows = static_cast<Eigen::Index>(size_t{1} << keep.size());
  const auto cols = static_cast<Eigen::Index>(size_t{1} << rest.size());
  CMatrix m = CMatrix::Zero(rows, cols);
  for (size_t idx = 0; idx < static_cast<size_t>(psi.size()); idx++) {
    m(static_cast<Eigen::Index>(gather(idx, num_qubits, keep)),
      static_cast<Eigen::Index>(gather(idx, num_qubits, rest))) = psi(static_cast<Eigen::Index>(idx));
  }
  return m * m.adjoint();
}

CMatrix reduce(const CMatrix& rho, size_t num_qubits, const std::vector<size_t>& keep) {
  check_qubits(num_qubits, keep);
  const std::vector<size_t> rest = complement(num_qubits, keep);
  const auto dim = static_cast<Eigen::Index>(size_t{1} << keep.size());
  CMatrix out = CMatrix::Zero(dim, dim);
  const size_t full = size_t{1} << num_qubits;
  for (size_t i = 0; i < full; i++) {
    const size_t ei = gather(i, num_qubits, rest);
    const size_t ki = gather(i, num_qubits, keep);
    for (size_t j = 0; j < full; j++) {
      if (gather(j, num_qubits, rest) != ei) continue;
      out(static_cast<Eigen::Index>(ki), static_cast<Eigen::Index>(gather(j, num_qubits, keep))) +=
          rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

}  // namespace kernels

PureState apply_unitary_qubits(const PureState& state, const CMatrix& u, const std::vector<size_t>& qubits) {
  if (!is_unitary(u)) throw std::invalid_argument("apply_unitary: matrix is not unitary");
  CVector psi = state.amplitudes();
  kernels::apply(psi, state.num_qubits(), u, qubits);
  return PureState(state.layout(), std::move(psi));
}

PureState apply_unitary(const PureState& state, const CMatrix& u, const std::vector<std::string>& registers) {
  return apply_unitary_qubits(state, u, state.layout().qubits(registers));
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const CMatrix& u, const std::vector<std::string>& registers) {
  if (!is_unitary(u)) throw std::invalid_argument("apply_unitary: matrix is not unitary");
  const size_t m = rho.num_qubits();
  const auto qubits = rho.layout().qubits(registers);
  CMatrix full = rho.entries();
  // U rho U^dagger: apply U to every column, then to every column of the adjoint.
  for (Eigen::Index c = 0; c < full.cols(); c++) {
    CVector col = full.col(c);
    kernels::apply(col, m, u, qubits);
    full.col(c) = col;
  }
  CMatrix adj = full.adjoint();
  for (Eigen::Index c = 0; c < adj.cols(); c++) {
    CVector col = adj.col(c);
    kernels::apply(col, m, u, qubits);
    adj.col(c) = col;
  }
  return DensityMatrix(rho.layout(), hermitian_part(adj.adjoint()));
}

Measurement measure_computational(const PureState& state, const std::string& reg, Rng& rng) {
  const auto qubits = state.layout().qubits(reg);
  std::vector<double> probs = kernels::marginal(state.amplitudes(), state.num_qubits(), qubits);
  double u = rng.uniform();
  size_t outcome = probs.size() - 1;
  double acc = 0;
  for (size_t v = 0; v < probs.size(); v++) {
    acc += probs[v];
    if (u < acc && probs[v] > 0) {
      outcome = v;
      break;
    }
  }
  while (probs[outcome] <= 0 && outcome > 0) outcome--;
  BitVec bits = BitVec::from_uint(outcome, qubits.size());
  Projection p = project(state, reg, bits);
  if (!p.post) throw std::logic_error("sampled a zero-probability outcome");
  return {bits, *p.post};
}

Projection project(const PureState& state, const std::string& reg, const BitVec& bits) {
  const auto qubits = state.layout().qubits(reg);
  CVector psi = state.amplitudes();
  kernels::project(psi, state.num_qubits(), qubits, bits);
  Projection out;
  out.probability = psi.squaredNorm();
  if (out.probability >= kProjectFloor) {
    psi /= std::sqrt(out.probability);
    out.post = PureState(state.layout(), std::move(psi));
  }
  return out;
}

DensityMatrix partial_trace(const PureState& state, const std::vector<std::string>& keep) {
  const auto qubits = state.layout().qubits(keep);
  CMatrix rho = kernels::reduce(state.amplitudes(), state.num_qubits(), qubits);
  return DensityMatrix(state.layout().subset(keep), hermitian_part(rho));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep) {
  const auto qubits = rho.layout().qubits(keep);
  CMatrix out = kernels::reduce(rho.entries(), rho.num_qubits(), qubits);
  return DensityMatrix(rho.layout().subset(keep), hermitian_part(out));
}

double trace_norm_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("trace distance dimension mismatch");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(a - b), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum() / 2;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.layout().dimension() != b.layout().dimension()) {
    throw std::invalid_argument("trace distance dimension mismatch");
  }
  return std::clamp(trace_norm_distance(a.entries(), b.entries()), 0.0, 1.0);
}

double overlap(const PureState& psi, const PureState& phi) {
  if (psi.amplitudes().size() != phi.amplitudes().size()) throw std::invalid_argument("overlap dimension mismatch");
  return std::clamp(std::norm(psi.amplitudes().dot(phi.amplitudes())), 0.0, 1.0);
}

PureState wiesner_encode(const BitVec& theta, const BitVec& x) {
  if (theta.size() != x.size()) throw std::invalid_argument("wiesner_encode length mismatch");
  const size_t m = x.size();
  RegisterLayout layout = RegisterLayout::single("q", m);
  CVector amps = CVector::Ones(static_cast<Eigen::Index>(layout.dimension()));
  const double r = 1 / std::sqrt(2.0);
  for (size_t idx = 0; idx < layout.dimension(); idx++) {
    Complex a = 1;
    for (size_t q = 0; q < m; q++) {
      const bool b = (idx >> bit_position(m, q)) & 1;
      if (!theta.get(q)) {
        if (b != x.get(q)) a = 0;
      } else {
        a *= (b && x.get(q)) ? -r : r;
      }
    }
    amps(static_cast<Eigen::Index>(idx)) = a;
  }
  return PureState(std::move(layout), std::move(amps));
}

}  // namespace peglab
