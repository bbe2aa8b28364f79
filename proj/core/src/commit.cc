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

#include "peglab/commit.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "json.hpp"
#include "peglab/errors.h"

namespace peglab {

namespace {

using Index = Eigen::Index;

BitVec zeros(size_t n) { return BitVec::from_uint(0, n); }

CVector basis_vector(size_t num_qubits, size_t idx) {
  CVector v = CVector::Zero(static_cast<Index>(size_t{1} << num_qubits));
  v(static_cast<Index>(idx)) = 1;
  return v;
}

std::vector<size_t> iota(size_t begin, size_t end) {
  std::vector<size_t> out;
  for (size_t q = begin; q < end; q++) out.push_back(q);
  return out;
}

std::vector<size_t> shifted(const std::vector<size_t>& qs, size_t offset) {
  std::vector<size_t> out;
  for (size_t q : qs) out.push_back(q + offset);
  return out;
}

void append_gates(std::vector<Gate>& out, const CommitScheme& scheme, size_t offset) {
  for (const Gate& g : scheme.gates()) out.push_back({g.u, shifted(g.qubits, offset)});
}

Gate single(const CMatrix& u, size_t q) { return {u, {q}}; }
Gate pair(const CMatrix& u, size_t a, size_t b) { return {u, {a, b}}; }

// Reflection sending |0> to psi; psi must be real and normalized.
CMatrix householder(const CVector& psi) {
  const Index d = psi.size();
  CMatrix out = CMatrix::Identity(d, d);
  CVector v = -psi;
  v(0) += 1;
  const double nv = v.squaredNorm();
  if (nv < 1e-24) return out;
  out -= 2.0 * v * v.adjoint() / nv;
  return out;
}

void check_measurement(const CMatrix& pi0, size_t dim) {
  if (static_cast<size_t>(pi0.rows()) != dim || static_cast<size_t>(pi0.cols()) != dim) {
    throw std::invalid_argument("adversary measurement has the wrong dimension for (D, E)");
  }
  if ((pi0 - pi0.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument("adversary measurement is not Hermitian");
  }
  CMatrix h = (pi0 + pi0.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-9 || solver.eigenvalues().maxCoeff() > 1 + 1e-9) {
    throw std::invalid_argument("invalid measurement operators: Pi_0 must satisfy 0 <= Pi_0 <= I");
  }
}

// Projector onto the positive part of a - b.
CMatrix helstrom_projector(const CMatrix& a, const CMatrix& b) {
  CMatrix diff = a - b;
  diff = (diff + diff.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(diff);
  CMatrix out = CMatrix::Zero(diff.rows(), diff.cols());
  for (Index k = 0; k < diff.rows(); k++) {
    if (solver.eigenvalues()(k) > 0) {
      const CVector v = solver.eigenvectors().col(k);
      out += v * v.adjoint();
    }
  }
  return out;
}

struct Branches {
  size_t total = 0;
  std::vector<size_t> keep;
  double p_accept = 0;
  // Unmeasured branch and the two M-measured branches, all after Com.
  CVector phi0;
  CVector phi1[2];
};

Branches run_branches(const CommitScheme& scheme, const AdversaryStrategy& adv, BindingForm form) {
  const size_t m = scheme.num_qubits();
  Branches br;
  br.total = m + adv.e_qubits;
  if (br.total > kMaxQubits) throw ParameterRejected("binding experiment exceeds the qubit budget");
  if (static_cast<size_t>(adv.state.size()) != (size_t{1} << br.total)) {
    throw std::invalid_argument("adversary state has the wrong dimension");
  }
  if (std::abs(adv.state.norm() - 1) > 1e-9) throw std::invalid_argument("adversary state is not normalized");
  br.keep = scheme.d_qubits();
  for (size_t q = m; q < br.total; q++) br.keep.push_back(q);
  if (br.keep.size() > kMaxDensityQubits) throw ParameterRejected("(D, E) exceeds the density-matrix budget");

  const std::vector<size_t> map = iota(0, m);
  const std::vector<size_t> w = scheme.w_qubits();
  CVector phi = adv.state;
  scheme.apply(phi, br.total, map, true);
  kernels::project(phi, br.total, w, zeros(w.size()));
  if (form == BindingForm::kInflated) {
    scheme.apply(phi, br.total, map, false);
    scheme.apply(phi, br.total, map, true);
    kernels::project(phi, br.total, w, zeros(w.size()));
  }
  br.p_accept = phi.squaredNorm();
  br.phi0 = phi;
  scheme.apply(br.phi0, br.total, map, false);
  for (int v = 0; v < 2; v++) {
    CVector x = phi;
    kernels::project(x, br.total, {0}, BitVec::from_uint(static_cast<uint64_t>(v), 1));
    if (form == BindingForm::kInflated) kernels::project(x, br.total, {0}, BitVec::from_uint(static_cast<uint64_t>(v), 1));
    scheme.apply(x, br.total, map, false);
    br.phi1[v] = std::move(x);
  }
  return br;
}

}  // namespace

CommitScheme::CommitScheme(std::string name, size_t w_qubits, std::vector<size_t> c_qubits,
                           std::vector<size_t> d_qubits, std::vector<Gate> gates)
    : name_(std::move(name)),
      w_qubits_(w_qubits),
      c_qubits_(std::move(c_qubits)),
      d_qubits_(std::move(d_qubits)),
      gates_(std::move(gates)) {
  const size_t m = num_qubits();
  if (m > kMaxQubits) throw ParameterRejected("commitment '" + name_ + "' exceeds the qubit budget");
  std::set<size_t> seen;
  for (size_t q : c_qubits_) seen.insert(q);
  for (size_t q : d_qubits_) seen.insert(q);
  if (seen.size() != m || c_qubits_.size() + d_qubits_.size() != m || *seen.rbegin() >= m) {
    throw std::invalid_argument("C and D must partition the commitment qubits");
  }
  for (const Gate& g : gates_) {
    std::set<size_t> qs(g.qubits.begin(), g.qubits.end());
    if (qs.size() != g.qubits.size() || (!qs.empty() && *qs.rbegin() >= m)) {
      throw std::invalid_argument("gate qubits out of range or repeated");
    }
    const auto dim = static_cast<Index>(size_t{1} << g.qubits.size());
    if (g.u.rows() != dim || g.u.cols() != dim) throw std::invalid_argument("gate matrix dimension mismatch");
    if (!is_unitary(g.u, 1e-9)) throw std::invalid_argument("gate is not unitary");
  }
}

std::vector<size_t> CommitScheme::w_qubits() const { return iota(1, num_qubits()); }

void CommitScheme::apply(CVector& psi, size_t total_qubits, const std::vector<size_t>& map, bool inverse) const {
  if (map.size() != num_qubits()) throw std::invalid_argument("qubit map size mismatch");
  auto run = [&](const Gate& g, bool adjoint) {
    std::vector<size_t> qs;
    for (size_t q : g.qubits) qs.push_back(map[q]);
    if (adjoint) {
      kernels::apply(psi, total_qubits, g.u.adjoint(), qs);
    } else {
      kernels::apply(psi, total_qubits, g.u, qs);
    }
  };
  if (inverse) {
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) run(*it, true);
  } else {
    for (const Gate& g : gates_) run(g, false);
  }
}

void CommitScheme::apply(CVector& psi, bool inverse) const { apply(psi, num_qubits(), iota(0, num_qubits()), inverse); }

CVector CommitScheme::commit_state(int b) const {
  if (b != 0 && b != 1) throw std::invalid_argument("commit bit must be 0 or 1");
  CVector psi = basis_vector(num_qubits(), b ? size_t{1} << w_qubits_ : 0);
  apply(psi);
  return psi;
}

std::string CommitScheme::descriptor_json() const {
  nlohmann::ordered_json j;
  j["name"] = name_;
  j["num_qubits"] = num_qubits();
  j["m"] = 0;
  j["w"] = w_qubits();
  j["c"] = c_qubits_;
  j["d"] = d_qubits_;
  j["hiding_flavor"] = hiding_flavor;
  j["binding_flavor"] = binding_flavor;
  nlohmann::ordered_json gates = nlohmann::ordered_json::array();
  for (const Gate& g : gates_) {
    std::vector<double> flat;
    for (Index r = 0; r < g.u.rows(); r++) {
      for (Index c = 0; c < g.u.cols(); c++) {
        flat.push_back(g.u(r, c).real());
        flat.push_back(g.u(r, c).imag());
      }
    }
    gates.push_back({{"qubits", g.qubits}, {"matrix", flat}});
  }
  j["gates"] = gates;
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(j.dump())));
  j["checksum"] = buf;
  return j.dump();
}

double completeness(const CommitScheme& scheme, int b) {
  CVector psi = scheme.commit_state(b);
  scheme.apply(psi, true);
  const std::vector<size_t> w = scheme.w_qubits();
  kernels::project(psi, scheme.num_qubits(), w, zeros(w.size()));
  kernels::project(psi, scheme.num_qubits(), {0}, BitVec::from_uint(static_cast<uint64_t>(b), 1));
  return std::clamp(psi.squaredNorm(), 0.0, 1.0);
}

CMatrix reduced_commit_state(const CommitScheme& scheme, int b) {
  if (scheme.c_qubits().size() > kMaxDensityQubits) throw ParameterRejected("C exceeds the density-matrix budget");
  return kernels::reduce(scheme.commit_state(b), scheme.num_qubits(), scheme.c_qubits());
}

double hiding_advantage(const CommitScheme& scheme) {
  const double td = trace_norm_distance(reduced_commit_state(scheme, 0), reduced_commit_state(scheme, 1));
  return 0.5 + std::clamp(td, 0.0, 1.0) / 2;
}

AdversaryStrategy superposition_attacker(const CommitScheme& scheme) {
  const size_t m = scheme.num_qubits();
  CVector psi = CVector::Zero(static_cast<Index>(size_t{1} << m));
  psi(0) = 1 / std::sqrt(2.0);
  psi(static_cast<Index>(size_t{1} << (m - 1))) = 1 / std::sqrt(2.0);
  scheme.apply(psi);
  return {std::move(psi), 0, std::nullopt};
}

BindingResult binding_experiment(const CommitScheme& scheme, const AdversaryStrategy& adv, BindingForm form) {
  const Branches br = run_branches(scheme, adv, form);
  BindingResult out;
  out.p_accept = std::clamp(br.p_accept, 0.0, 1.0);
  out.sigma0 = kernels::reduce(br.phi0, br.total, br.keep);
  out.sigma1 = kernels::reduce(br.phi1[0], br.total, br.keep) + kernels::reduce(br.phi1[1], br.total, br.keep);
  if (adv.pi0) {
    check_measurement(*adv.pi0, static_cast<size_t>(out.sigma0.rows()));
    const CMatrix& pi = *adv.pi0;
    const double t0 = (pi * out.sigma0).trace().real();
    const double t1 = out.sigma1.trace().real() - (pi * out.sigma1).trace().real();
    out.advantage = (1 - out.p_accept) / 2 + (t0 + t1) / 2;
  } else {
    out.advantage = 0.5 + trace_norm_distance(out.sigma0, out.sigma1) / 2;
  }
  out.advantage = std::clamp(out.advantage, 0.0, 1.0);
  return out;
}

double binding_experiment(const CommitScheme& scheme, const AdversaryStrategy& adv, Rng& rng, size_t trials) {
  if (trials == 0) throw std::invalid_argument("binding experiment needs at least one trial");
  const Branches br = run_branches(scheme, adv, BindingForm::kDirect);
  const CMatrix s0 = kernels::reduce(br.phi0, br.total, br.keep);
  const CMatrix s1[2] = {kernels::reduce(br.phi1[0], br.total, br.keep),
                         kernels::reduce(br.phi1[1], br.total, br.keep)};
  CMatrix pi;
  if (adv.pi0) {
    check_measurement(*adv.pi0, static_cast<size_t>(s0.rows()));
    pi = *adv.pi0;
  } else {
    pi = helstrom_projector(s0, s1[0] + s1[1]);
  }
  // Pr[b' = 0] for each normalized post-experiment state.
  auto guess0 = [&pi](const CMatrix& sigma) {
    const double tr = sigma.trace().real();
    return tr > 0 ? std::clamp((pi * sigma).trace().real() / tr, 0.0, 1.0) : 0.5;
  };
  const double g0 = guess0(s0);
  const double g1[2] = {guess0(s1[0]), guess0(s1[1])};
  const double q1 = br.p_accept > 0 ? s1[1].trace().real() / br.p_accept : 0;

  size_t wins = 0;
  for (size_t t = 0; t < trials; t++) {
    if (!rng.bernoulli(std::clamp(br.p_accept, 0.0, 1.0))) {
      const bool b = rng.bernoulli(0.5);
      if (rng.bernoulli(0.5) == b) wins++;
      continue;
    }
    const bool b = rng.bernoulli(0.5);
    double p0 = g0;
    if (b) p0 = g1[rng.bernoulli(std::clamp(q1, 0.0, 1.0)) ? 1 : 0];
    const bool guess = !rng.bernoulli(p0);
    if (guess == b) wins++;
  }
  return static_cast<double>(wins) / static_cast<double>(trials);
}

CommitScheme purification_commit(const Pmf& p0, const Pmf& p1) {
  const auto w0 = p0.label_width();
  const auto w1 = p1.label_width();
  if (!w0 || !w1 || *w0 != *w1 || *w0 == 0) {
    throw std::invalid_argument("purification_commit: both Pmfs need labels of one common nonzero width");
  }
  const size_t a = *w0;
  if (a > 6) throw ParameterRejected("purification_commit: alphabet exceeds 2^6");
  const Index d = static_cast<Index>(size_t{1} << a);
  auto amplitudes = [d](const Pmf& p) {
    CVector v = CVector::Zero(d);
    for (const auto& [x, px] : p.atoms()) v(static_cast<Index>(x.to_uint())) = std::sqrt(px);
    return CVector(v / v.norm());
  };
  CMatrix controlled = CMatrix::Zero(2 * d, 2 * d);
  controlled.topLeftCorner(d, d) = householder(amplitudes(p0));
  controlled.bottomRightCorner(d, d) = householder(amplitudes(p1));

  std::vector<Gate> gates;
  std::vector<size_t> qs = {0};
  for (size_t j = 0; j < a; j++) qs.push_back(1 + j);
  gates.push_back({controlled, qs});
  for (size_t j = 0; j < a; j++) gates.push_back(pair(gates::cnot(), 1 + j, 1 + a + j));
  std::vector<size_t> d_qubits = iota(1 + a, 1 + 2 * a);
  d_qubits.push_back(0);
  CommitScheme out("purification", 2 * a, iota(1, 1 + a), std::move(d_qubits), std::move(gates));
  out.hiding_flavor = "statistical";
  out.binding_flavor = "computational";
  return out;
}

CommitScheme basis_commit() {
  CommitScheme out("basis", 1, {0}, {1}, {});
  out.hiding_flavor = "none";
  out.binding_flavor = "perfect";
  return out;
}

CommitScheme swap_commit() {
  CommitScheme out("swap", 1, {0}, {1}, {pair(gates::swap(), 0, 1)});
  out.hiding_flavor = "perfect";
  out.binding_flavor = "none";
  return out;
}

CommitScheme leaky_commit(double tau) {
  if (!(tau >= 0 && tau <= 1)) throw std::invalid_argument("leaky_commit: tau must lie in [0, 1]");
  const double c = std::sqrt(1 - tau * tau);
  // Columns indexed by 2m + w, rows by 2c + d.
  CMatrix u = CMatrix::Zero(4, 4);
  u(0, 0) = 1;
  u(2, 1) = 1;
  u(1, 2) = c;
  u(3, 2) = tau;
  u(1, 3) = -tau;
  u(3, 3) = c;
  char name[32];
  std::snprintf(name, sizeof(name), "leaky_%.3g", tau);
  CommitScheme out(name, 1, {0}, {1}, {pair(u, 0, 1)});
  out.hiding_flavor = "leaky";
  out.binding_flavor = "partial";
  return out;
}

std::vector<CommitScheme> toy_schemes() {
  return {basis_commit(), swap_commit(), leaky_commit(0.5),
          purification_commit(Pmf::bernoulli(0.5), Pmf::bernoulli(0.75))};
}

CommitScheme identity_flavor_swap(const CommitScheme& scheme) {
  CommitScheme out = scheme;
  std::swap(out.hiding_flavor, out.binding_flavor);
  return out;
}

CommitScheme dual_commit(const CommitScheme& com1, const CommitScheme& com2) {
  const size_t m1 = com1.num_qubits();
  const size_t m2 = com2.num_qubits();
  if (m1 + m2 > kMaxQubits) throw ParameterRejected("dual_commit exceeds the qubit budget");
  std::vector<Gate> gates = {pair(gates::cnot(), 0, m1)};
  append_gates(gates, com1, 0);
  append_gates(gates, com2, m1);
  std::vector<size_t> c = com1.c_qubits();
  std::vector<size_t> d = com1.d_qubits();
  for (size_t q : shifted(com2.c_qubits(), m1)) c.push_back(q);
  for (size_t q : shifted(com2.d_qubits(), m1)) d.push_back(q);
  CommitScheme out("dual(" + com1.name() + "," + com2.name() + ")", m1 + m2 - 1, std::move(c), std::move(d),
                   std::move(gates));
  out.copy_pair = std::make_pair(size_t{0}, m1);
  return out;
}

CommitScheme xor_combine(const std::vector<CommitScheme>& parts) {
  if (parts.size() < 2) throw std::invalid_argument("xor_combine needs at least two schemes");
  std::vector<size_t> offsets;
  size_t total = 1;
  for (const CommitScheme& p : parts) {
    offsets.push_back(total);
    total += p.num_qubits();
  }
  if (total > kMaxQubits) throw ParameterRejected("xor_combine exceeds the qubit budget");
  const size_t t = parts.size();
  const size_t last = offsets[t - 1];
  std::vector<Gate> gates;
  for (size_t i = 0; i + 1 < t; i++) gates.push_back(single(gates::h(), offsets[i]));
  gates.push_back(pair(gates::cnot(), 0, last));
  for (size_t i = 0; i + 1 < t; i++) gates.push_back(pair(gates::cnot(), offsets[i], last));
  std::vector<size_t> c;
  std::vector<size_t> d = {0};
  std::string name = "xor(";
  for (size_t i = 0; i < t; i++) {
    append_gates(gates, parts[i], offsets[i]);
    for (size_t q : shifted(parts[i].c_qubits(), offsets[i])) c.push_back(q);
    for (size_t q : shifted(parts[i].d_qubits(), offsets[i])) d.push_back(q);
    name += (i ? "," : "") + parts[i].name();
  }
  return CommitScheme(name + ")", total - 1, std::move(c), std::move(d), std::move(gates));
}

double cnot_copy_asymmetry(const CommitScheme& dual, Complex alpha, Complex beta) {
  if (!dual.copy_pair) throw std::invalid_argument("cnot_copy_asymmetry needs a dual_commit scheme");
  const size_t n = dual.num_qubits();
  if (n > 10) throw ParameterRejected("cnot_copy_asymmetry: global state too large");
  const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
  if (norm == 0) throw std::invalid_argument("cnot_copy_asymmetry: zero input");
  CVector psi = CVector::Zero(static_cast<Index>(size_t{1} << n));
  psi(0) = alpha / norm;
  psi(static_cast<Index>(size_t{1} << (n - 1))) = beta / norm;
  const auto [ctl, tgt] = *dual.copy_pair;
  kernels::apply(psi, n, gates::cnot(), {ctl, tgt});
  auto measured = [&](size_t q) {
    CMatrix rho = CMatrix::Zero(psi.size(), psi.size());
    for (uint64_t v = 0; v < 2; v++) {
      CVector x = psi;
      kernels::project(x, n, {q}, BitVec::from_uint(v, 1));
      rho += x * x.adjoint();
    }
    return rho;
  };
  return (measured(ctl) - measured(tgt)).cwiseAbs().maxCoeff();
}

}  // namespace peglab
