// Copyright 2026 The bosonq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bosonq/simulator.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "bosonq/errors.hpp"

namespace bosonq {

namespace {

constexpr int kMatrixMaxQubits = 12;

void check_register(int n, int cap) {
  if (n < 0 || n > cap) {
    throw CapExceeded("register of " + std::to_string(n) +
                      " qubits exceeds simulation cap of " + std::to_string(cap));
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_register(n_qubits, kMaxQubits);
  amps_.assign(std::size_t{1} << n_qubits, cplx{});
  amps_[0] = 1.0;
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.amps_.size()) throw InputError("basis index outside register");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amplitudes) {
  const int n = log2_exact(amplitudes.size());
  if (n < 0) throw InputError("amplitude count is not a power of two");
  StateVector s(n);
  double norm2 = 0.0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (norm2 == 0.0) throw InputError("zero state vector");
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amplitudes) a *= inv;
  s.amps_ = std::move(amplitudes);
  return s;
}

double StateVector::norm() const {
  double norm2 = 0.0;
  for (const auto& a : amps_) norm2 += std::norm(a);
  return std::sqrt(norm2);
}

void StateVector::apply(const Gate& gate) {
  const std::size_t dim = amps_.size();
  const int q0 = gate.qubits[0];
  const int q1 = gate.qubits[1];
  for (int i = 0; i < gate.arity(); ++i) {
    if (gate.qubits[i] < 0 || gate.qubits[i] >= n_qubits_) {
      throw InputError("gate qubit outside state register");
    }
  }
  const std::size_t b0 = q0 >= 0 ? std::size_t{1} << q0 : 0;
  const std::size_t b1 = q1 >= 0 ? std::size_t{1} << q1 : 0;

  switch (gate.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & b0) continue;
        const cplx a = amps_[i];
        const cplx b = amps_[i | b0];
        amps_[i] = r * (a + b);
        amps_[i | b0] = r * (a - b);
      }
      break;
    }
    case GateKind::X:
      for (std::size_t i = 0; i < dim; ++i) {
        if (!(i & b0)) std::swap(amps_[i], amps_[i | b0]);
      }
      break;
    case GateKind::RZ: {
      const cplx lo = std::polar(1.0, -gate.angle / 2.0);
      const cplx hi = std::polar(1.0, gate.angle / 2.0);
      for (std::size_t i = 0; i < dim; ++i) amps_[i] *= (i & b0) ? hi : lo;
      break;
    }
    case GateKind::DiagPhase: {
      const cplx hi = std::polar(1.0, gate.angle);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & b0) amps_[i] *= hi;
      }
      break;
    }
    case GateKind::Phase: {
      const cplx f = std::polar(1.0, gate.angle);
      for (auto& a : amps_) a *= f;
      break;
    }
    case GateKind::CNOT:
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & b0) && !(i & b1)) std::swap(amps_[i], amps_[i | b1]);
      }
      break;
    case GateKind::CPhase: {
      const cplx f = std::polar(1.0, gate.angle);
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & b0) && (i & b1)) amps_[i] *= f;
      }
      break;
    }
    case GateKind::Swap:
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & b0) && !(i & b1)) std::swap(amps_[i], amps_[(i ^ b0) | b1]);
      }
      break;
  }
}

StateVector apply_circuit(const Circuit& circuit, StateVector state) {
  if (circuit.n_qubits() != state.n_qubits()) {
    throw InputError("circuit has " + std::to_string(circuit.n_qubits()) +
                     " qubits, state has " + std::to_string(state.n_qubits()));
  }
  for (const auto& g : circuit.gates()) state.apply(g);
  return state;
}

DenseMatrix circuit_unitary(const Circuit& circuit) {
  check_register(circuit.n_qubits(), kMatrixMaxQubits);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << circuit.n_qubits());
  DenseMatrix u(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const auto out = apply_circuit(
        circuit, StateVector::basis_state(circuit.n_qubits(),
                                          static_cast<std::uint64_t>(k)));
    for (Eigen::Index r = 0; r < dim; ++r) {
      u(r, k) = out[static_cast<std::uint64_t>(r)];
    }
  }
  return u;
}

SparseOperator circuit_matrix(const Circuit& circuit) {
  return SparseOperator::from_dense(circuit_unitary(circuit));
}

Propagator exact_propagator(const SparseOperator& h, double t) {
  const int n = log2_exact(h.dimension());
  if (n < 0) throw InputError("Hamiltonian dimension is not a power of two");
  check_register(n, kMatrixMaxQubits);
  if (!h.is_hermitian(1e-12)) {
    throw InputError("exact_propagator needs a Hermitian Hamiltonian");
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(h.to_dense());
  if (eig.info() != Eigen::Success) {
    throw VerificationError("eigendecomposition failed");
  }
  const auto& vals = eig.eigenvalues();
  Eigen::VectorXcd phases(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    phases(i) = std::polar(1.0, -vals(i) * t);
  }
  const auto& v = eig.eigenvectors();
  return {h, t, v * phases.asDiagonal() * v.adjoint()};
}

double trotter_error(const HamiltonianSpec& spec, double total_time, int steps) {
  const auto config = spec.config();
  check_register(config.total_qubits(), kMatrixMaxQubits);
  const auto trotter = trotter_evolution(spec, total_time, steps);
  const auto approx = circuit_unitary(trotter.circuit);
  const auto exact = exact_propagator(coordinate_hamiltonian(spec), total_time);
  return max_abs_diff(approx, exact.unitary);
}

}  // namespace bosonq
