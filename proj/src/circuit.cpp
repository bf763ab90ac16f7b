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

#include "bosonq/circuit.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "bosonq/errors.hpp"

namespace bosonq {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 8> kGateNames{{
    {GateKind::H, "H"},
    {GateKind::X, "X"},
    {GateKind::RZ, "RZ"},
    {GateKind::Phase, "PHASE"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::CPhase, "CPHASE"},
    {GateKind::Swap, "SWAP"},
    {GateKind::DiagPhase, "DIAG-PHASE"},
}};

}  // namespace

std::string_view to_string(GateKind kind) {
  for (const auto& [k, name] : kGateNames) {
    if (k == kind) return name;
  }
  return "?";
}

GateKind parse_gate_kind(std::string_view text) {
  for (const auto& [k, name] : kGateNames) {
    if (name == text) return k;
  }
  throw InputError("unknown gate kind '" + std::string(text) + "'");
}

int Gate::arity() const {
  switch (kind) {
    case GateKind::Phase:
      return 0;
    case GateKind::CNOT:
    case GateKind::CPhase:
    case GateKind::Swap:
      return 2;
    default:
      return 1;
  }
}

bool Gate::has_angle() const {
  return kind == GateKind::RZ || kind == GateKind::Phase ||
         kind == GateKind::CPhase || kind == GateKind::DiagPhase;
}

Gate Gate::inverse() const {
  Gate g = *this;
  if (has_angle()) g.angle = -angle;
  return g;
}

LayerCounts& LayerCounts::operator+=(const LayerCounts& other) {
  rotations += other.rotations;
  entangling += other.entangling;
  hadamards += other.hadamards;
  total += other.total;
  return *this;
}

LayerCounts LayerCounts::scaled(std::size_t factor) const {
  return {rotations * factor, entangling * factor, hadamards * factor,
          total * factor};
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0) throw InputError("negative register size");
}

Circuit& Circuit::add(const Gate& gate) {
  const int k = gate.arity();
  for (int i = 0; i < k; ++i) {
    if (gate.qubits[i] < 0 || gate.qubits[i] >= n_qubits_) {
      throw InputError(std::string(to_string(gate.kind)) + " qubit " +
                       std::to_string(gate.qubits[i]) + " outside register");
    }
  }
  if (k == 2 && gate.qubits[0] == gate.qubits[1]) {
    throw InputError(std::string(to_string(gate.kind)) +
                     " acts twice on the same qubit");
  }
  if (!std::isfinite(gate.angle)) throw InputError("non-finite gate angle");
  gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) throw InputError("register size mismatch");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit out(n_qubits_);
  out.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    out.gates_.push_back(it->inverse());
  }
  return out;
}

std::map<GateKind, std::size_t> Circuit::kind_counts() const {
  std::map<GateKind, std::size_t> counts;
  for (const auto& g : gates_) ++counts[g.kind];
  return counts;
}

LayerCounts Circuit::counts() const {
  LayerCounts c;
  for (const auto& g : gates_) {
    if (g.kind == GateKind::Phase) continue;
    ++c.total;
    if (g.is_rotation()) ++c.rotations;
    if (g.is_entangling()) ++c.entangling;
    if (g.kind == GateKind::H) ++c.hadamards;
  }
  return c;
}

void write_circuit(std::ostream& os, const Circuit& circuit) {
  os << "# n_qubits " << circuit.n_qubits() << '\n';
  char buf[48];
  for (const auto& g : circuit.gates()) {
    os << to_string(g.kind);
    for (int i = 0; i < g.arity(); ++i) os << ' ' << g.qubits[i];
    if (g.has_angle()) {
      std::snprintf(buf, sizeof buf, " %.17g", g.angle);
      os << buf;
    }
    os << '\n';
  }
}

Circuit read_circuit(std::istream& is) {
  std::string line;
  int line_no = 0;
  Circuit circuit;
  bool have_header = false;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    auto fail = [&](const std::string& what) {
      return InputError("line " + std::to_string(line_no) + ": " + what);
    };
    if (line[0] == '#') {
      std::string hash, key;
      int n = -1;
      ls >> hash >> key >> n;
      if (key != "n_qubits" || n < 0) throw fail("malformed circuit header");
      circuit = Circuit(n);
      have_header = true;
      continue;
    }
    if (!have_header) throw fail("gate before header");
    std::string name;
    ls >> name;
    Gate g;
    try {
      g.kind = parse_gate_kind(name);
    } catch (const InputError& e) {
      throw fail(e.what());
    }
    for (int i = 0; i < g.arity(); ++i) ls >> g.qubits[i];
    if (g.has_angle()) ls >> g.angle;
    if (!ls) throw fail("truncated gate line");
    circuit.add(g);
  }
  if (!have_header) throw InputError("missing circuit header");
  return circuit;
}

Circuit qft_circuit(int qubits, bool centered, int offset, int n_qubits) {
  if (qubits < 1) throw InputError("QFT needs at least one qubit");
  if (n_qubits < 0) n_qubits = offset + qubits;
  Circuit c(n_qubits);
  const double cutoff = std::ldexp(1.0, qubits);
  const double center = (cutoff - 1.0) / 2.0;
  const double alpha = 2.0 * std::numbers::pi * center / cutoff;

  // e^{i p_k x_n} = e^{i 2pi c^2/L} e^{-i alpha k} e^{i 2pi k n/L} e^{-i alpha n}
  auto index_phase_layer = [&] {
    for (int j = 0; j < qubits; ++j) {
      c.add(Gate::diag_phase(offset + j, -alpha * std::ldexp(1.0, j)));
    }
  };

  if (centered) index_phase_layer();
  for (int t = qubits - 1; t >= 0; --t) {
    c.add(Gate::h(offset + t));
    for (int s = t - 1; s >= 0; --s) {
      c.add(Gate::cphase(offset + s, offset + t,
                         std::numbers::pi / std::ldexp(1.0, t - s)));
    }
  }
  for (int j = 0; j < qubits / 2; ++j) {
    c.add(Gate::swap(offset + j, offset + qubits - 1 - j));
  }
  if (centered) {
    index_phase_layer();
    c.add(Gate::phase(2.0 * std::numbers::pi * center * center / cutoff));
  }
  return c;
}

Circuit zstring_rotation(const PauliTerm& term, double theta) {
  if (!term.is_z_only()) {
    throw InputError("zstring_rotation needs a term with only I/Z letters, got " +
                     term.msb_string());
  }
  if (!std::isfinite(theta)) throw InputError("non-finite rotation angle");
  if (std::abs(term.coefficient.imag()) > 1e-12) {
    throw InputError("rotation term must have a real coefficient");
  }
  Circuit c(term.n_qubits);
  const double angle = theta * term.coefficient.real();
  if (term.is_identity()) {
    c.add(Gate::phase(-angle));
    return c;
  }
  std::vector<int> support;
  for (int q = 0; q < term.n_qubits; ++q) {
    if ((term.z_mask >> q) & 1U) support.push_back(q);
  }
  const int target = support.back();
  for (std::size_t i = 0; i + 1 < support.size(); ++i) {
    c.add(Gate::cnot(support[i], target));
  }
  c.add(Gate::rz(target, 2.0 * angle));
  for (std::size_t i = support.size() - 1; i-- > 0;) {
    c.add(Gate::cnot(support[i], target));
  }
  return c;
}

Circuit zsum_rotations(const PauliSum& sum, double theta) {
  Circuit c(sum.n_qubits());
  for (const auto& t : sum.terms()) c.append(zstring_rotation(t, theta));
  return c;
}

void GateCountReport::finalize() {
  totals = LayerCounts{};
  totals += potential;
  totals += qft;
  totals += kinetic;
  totals += inverse_qft;
}

TrotterCircuit trotter_step(const HamiltonianSpec& spec, double dt) {
  if (spec.basis != Basis::CoordinateQft ||
      spec.kinetic != KineticScheme::MomentumDiagonal) {
    throw InputError(
        "Trotter circuits need the coordinate+qft basis with the "
        "momentum-basis-diagonal kinetic scheme");
  }
  const auto config = spec.config();
  const int n = config.total_qubits();
  const int q = config.qubits_per_boson();

  const auto potential = expand_potential_zsum(spec);
  const auto kinetic = kinetic_zsum(spec);

  Circuit potential_layer = zsum_rotations(potential.merged, dt);
  Circuit qft_layer(n);
  for (int a = 0; a < config.bosons(); ++a) {
    qft_layer.append(qft_circuit(q, true, config.qubit_offset(a), n));
  }
  Circuit kinetic_layer = zsum_rotations(kinetic, dt);
  Circuit inverse_layer = qft_layer.inverse();

  TrotterCircuit out{Circuit(n), {}};
  out.report.potential = potential_layer.counts();
  out.report.qft = qft_layer.counts();
  out.report.kinetic = kinetic_layer.counts();
  out.report.inverse_qft = inverse_layer.counts();
  out.report.potential_strings_merged = potential.merged.nontrivial_count();
  out.report.potential_strings_raw = potential.raw_count;
  out.report.kinetic_strings = kinetic.nontrivial_count();
  out.report.finalize();

  out.circuit.append(potential_layer)
      .append(qft_layer)
      .append(kinetic_layer)
      .append(inverse_layer);
  return out;
}

TrotterCircuit trotter_evolution(const HamiltonianSpec& spec, double total_time,
                                 int steps) {
  if (steps < 1) throw InputError("Trotter evolution needs at least one step");
  const auto step = trotter_step(spec, total_time / steps);
  TrotterCircuit out{Circuit(step.circuit.n_qubits()), step.report};
  for (int i = 0; i < steps; ++i) out.circuit.append(step.circuit);
  const auto k = static_cast<std::size_t>(steps);
  out.report.potential = step.report.potential.scaled(k);
  out.report.qft = step.report.qft.scaled(k);
  out.report.kinetic = step.report.kinetic.scaled(k);
  out.report.inverse_qft = step.report.inverse_qft.scaled(k);
  out.report.steps = k;
  out.report.finalize();
  return out;
}

}  // namespace bosonq
