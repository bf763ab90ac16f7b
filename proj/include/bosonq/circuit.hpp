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

#pragma once

#include <array>
#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bosonq/hamiltonian.hpp"
#include "bosonq/pauli.hpp"

namespace bosonq {

/// Gate set. Conventions:
///   RZ(phi)         = diag(e^{-i phi/2}, e^{+i phi/2})
///   DIAG_PHASE(phi) = diag(1, e^{i phi})
///   CPHASE(phi)     = diag(1, 1, 1, e^{i phi}) on (control, target)
///   PHASE(phi)      = global factor e^{i phi}, no qubits
enum class GateKind { H, X, RZ, Phase, CNOT, CPhase, Swap, DiagPhase };

std::string_view to_string(GateKind kind);
GateKind parse_gate_kind(std::string_view text);

struct Gate {
  GateKind kind = GateKind::H;
  std::array<int, 2> qubits{-1, -1};
  double angle = 0.0;

  static Gate h(int q) { return {GateKind::H, {q, -1}, 0.0}; }
  static Gate x(int q) { return {GateKind::X, {q, -1}, 0.0}; }
  static Gate rz(int q, double phi) { return {GateKind::RZ, {q, -1}, phi}; }
  static Gate phase(double phi) { return {GateKind::Phase, {-1, -1}, phi}; }
  static Gate cnot(int c, int t) { return {GateKind::CNOT, {c, t}, 0.0}; }
  static Gate cphase(int c, int t, double phi) {
    return {GateKind::CPhase, {c, t}, phi};
  }
  static Gate swap(int a, int b) { return {GateKind::Swap, {a, b}, 0.0}; }
  static Gate diag_phase(int q, double phi) {
    return {GateKind::DiagPhase, {q, -1}, phi};
  }

  int arity() const;
  bool has_angle() const;
  bool is_entangling() const { return arity() == 2; }
  bool is_rotation() const {
    return kind == GateKind::RZ || kind == GateKind::DiagPhase ||
           kind == GateKind::CPhase;
  }
  Gate inverse() const;
};

struct LayerCounts {
  std::size_t rotations = 0;
  std::size_t entangling = 0;
  std::size_t hadamards = 0;
  /// Every gate except the qubit-free global PHASE.
  std::size_t total = 0;

  LayerCounts& operator+=(const LayerCounts& other);
  LayerCounts scaled(std::size_t factor) const;
  friend bool operator==(const LayerCounts&, const LayerCounts&) = default;
};

/// Ordered gate list on a fixed register.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Throws InputError for out-of-range or repeated qubits.
  Circuit& add(const Gate& gate);
  Circuit& append(const Circuit& other);

  Circuit inverse() const;
  std::map<GateKind, std::size_t> kind_counts() const;
  LayerCounts counts() const;

 private:
  int n_qubits_ = 0;
  std::vector<Gate> gates_;
};

/// Line format: "# n_qubits <n>" header, then "<KIND> <qubits...> [angle]".
void write_circuit(std::ostream& os, const Circuit& circuit);
Circuit read_circuit(std::istream& is);

/// Textbook QFT (H + controlled-phase ladder + swaps) on `qubits` qubits
/// starting at `offset` of an `n_qubits` register. With `centered`, extra
/// index-linear phase layers and a global phase make the matrix equal
/// exp(i p_k x_n) / sqrt(2^Q) on the centered grids.
Circuit qft_circuit(int qubits, bool centered, int offset = 0,
                    int n_qubits = -1);

/// exp(-i theta * term) for a Z-only term: CNOT parity ladder, RZ, uncompute.
/// Identity terms become a global PHASE.
Circuit zstring_rotation(const PauliTerm& term, double theta);

/// exp(-i theta * sum) as a product of zstring_rotation circuits.
Circuit zsum_rotations(const PauliSum& sum, double theta);

struct GateCountReport {
  LayerCounts potential;
  LayerCounts qft;
  LayerCounts kinetic;
  LayerCounts inverse_qft;
  LayerCounts totals;
  std::size_t potential_strings_merged = 0;
  std::size_t potential_strings_raw = 0;
  std::size_t kinetic_strings = 0;
  std::size_t steps = 1;

  /// Sums the four layers into `totals`.
  void finalize();
};

struct TrotterCircuit {
  Circuit circuit;
  GateCountReport report;
};

/// One first-order step: potential rotations, QFT on each boson, kinetic
/// rotations, inverse QFT on each boson.
TrotterCircuit trotter_step(const HamiltonianSpec& spec, double dt);

/// `steps` repetitions of trotter_step(spec, total_time / steps).
TrotterCircuit trotter_evolution(const HamiltonianSpec& spec, double total_time,
                                 int steps);

}  // namespace bosonq
