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

#include "bosonq/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bosonq/errors.hpp"

namespace bosonq {

int Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

PolynomialPotential::PolynomialPotential(int bosons,
                                         std::vector<Monomial> terms)
    : bosons_(bosons) {
  if (bosons < 1) throw InputError("potential needs at least one boson");
  for (auto& t : terms) add(std::move(t));
}

PolynomialPotential& PolynomialPotential::add(Monomial term) {
  if (static_cast<int>(term.exponents.size()) != bosons_) {
    throw InputError("monomial has " + std::to_string(term.exponents.size()) +
                     " exponents, expected " + std::to_string(bosons_));
  }
  if (std::any_of(term.exponents.begin(), term.exponents.end(),
                  [](int e) { return e < 0; })) {
    throw InputError("monomial exponents must be nonnegative");
  }
  if (!std::isfinite(term.coefficient)) {
    throw InputError("monomial coefficient must be finite");
  }
  terms_.push_back(std::move(term));
  return *this;
}

int PolynomialPotential::max_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.degree());
  return d;
}

double PolynomialPotential::evaluate(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != bosons_) {
    throw InputError("evaluation point has wrong dimension");
  }
  double v = 0.0;
  for (const auto& t : terms_) {
    double p = t.coefficient;
    for (int a = 0; a < bosons_; ++a) p *= std::pow(x[a], t.exponents[a]);
    v += p;
  }
  return v;
}

std::string_view to_string(KineticScheme scheme) {
  switch (scheme) {
    case KineticScheme::MomentumDiagonal:
      return "momentum-basis-diagonal";
    case KineticScheme::FiniteDifferenceOpen:
      return "finite-difference-open";
    case KineticScheme::FiniteDifferencePeriodic:
      return "finite-difference-periodic";
  }
  return "?";
}

std::string_view to_string(Basis basis) {
  return basis == Basis::CoordinateQft ? "coordinate+qft" : "fock";
}

KineticScheme parse_kinetic_scheme(std::string_view text) {
  for (auto s : {KineticScheme::MomentumDiagonal,
                 KineticScheme::FiniteDifferenceOpen,
                 KineticScheme::FiniteDifferencePeriodic}) {
    if (to_string(s) == text) return s;
  }
  throw InputError("unknown kinetic_scheme '" + std::string(text) + "'");
}

Basis parse_basis(std::string_view text) {
  if (text == "coordinate+qft") return Basis::CoordinateQft;
  if (text == "fock") return Basis::Fock;
  throw InputError("unknown basis '" + std::string(text) + "'");
}

void HamiltonianSpec::validate() const {
  if (potential.bosons() != bosons) {
    throw InputError("potential boson count does not match spec");
  }
  if (basis == Basis::CoordinateQft) {
    config();
  } else {
    if (!fock) throw InputError("fock basis requires fock parameters (m, omega)");
    fock->validate();
    if (bosons < 1 || qubits_per_boson < 1) {
      throw InputError("bosons and qubits_per_boson must be >= 1");
    }
  }
}

TruncationConfig HamiltonianSpec::config() const {
  if (!radius) throw InputError("coordinate+qft basis requires a radius");
  return TruncationConfig(bosons, qubits_per_boson, *radius);
}

HamiltonianSpec HamiltonianSpec::with_qubits(int q) const {
  HamiltonianSpec copy = *this;
  copy.qubits_per_boson = q;
  return copy;
}

PotentialExpansion expand_potential_zsum(const HamiltonianSpec& spec) {
  if (spec.basis != Basis::CoordinateQft) {
    throw InputError("Z-string expansion needs the coordinate+qft basis");
  }
  const auto config = spec.config();
  const int n = config.total_qubits();
  std::vector<PauliSum> positions;
  for (int a = 0; a < config.bosons(); ++a) {
    positions.push_back(position_zsum(config, a));
  }

  PotentialExpansion out;
  out.merged = PauliSum(n);
  out.constant_only = true;
  for (const auto& mono : spec.potential.terms()) {
    PauliSum product = PauliSum::from_terms(
        n, {PauliTerm::identity(n, mono.coefficient)});
    std::size_t raw = 1;
    for (int a = 0; a < config.bosons(); ++a) {
      // x^k expands as k independent factor choices.
      for (int k = 0; k < mono.exponents[a]; ++k) {
        product = product * positions[a];
        raw *= positions[a].size();
      }
    }
    if (!mono.is_constant()) out.constant_only = false;
    out.raw_count += raw;
    out.merged = out.merged + product;
  }
  return out;
}

PauliSum kinetic_zsum(const HamiltonianSpec& spec) {
  if (spec.basis != Basis::CoordinateQft ||
      spec.kinetic != KineticScheme::MomentumDiagonal) {
    throw InputError("kinetic Z-strings need the momentum-basis-diagonal scheme");
  }
  const auto config = spec.config();
  PauliSum total(config.total_qubits());
  for (int a = 0; a < config.bosons(); ++a) {
    const auto p = momentum_zsum(config, a);
    total = total + (p * p).scaled(0.5);
  }
  return total;
}

SparseOperator kinetic_finite_difference(const HamiltonianSpec& spec) {
  if (spec.kinetic == KineticScheme::MomentumDiagonal) {
    throw InputError("finite-difference kinetic term needs a finite-difference scheme");
  }
  const auto config = spec.config();
  const bool periodic = spec.kinetic == KineticScheme::FiniteDifferencePeriodic;
  const int q = config.qubits_per_boson();
  const auto single = finite_difference_p2(q, config.dx(), periodic);
  SparseOperator total(std::uint64_t{1} << config.total_qubits());
  for (int a = 0; a < config.bosons(); ++a) {
    total = total + embed(single, config.qubit_offset(a), config.total_qubits());
  }
  return total;
}

SparseOperator fock_hamiltonian(const HamiltonianSpec& spec) {
  if (spec.basis != Basis::Fock || !spec.fock) {
    throw InputError("fock_hamiltonian needs the fock basis and parameters");
  }
  spec.validate();
  const int q = spec.qubits_per_boson;
  const int total_qubits = spec.bosons * q;
  if (total_qubits > 14) {
    throw CapExceeded("Fock-basis Hamiltonian limited to 14 register qubits");
  }
  const std::uint64_t cutoff = std::uint64_t{1} << q;
  const std::uint64_t dim = std::uint64_t{1} << total_qubits;
  const auto x = fock_x(cutoff, *spec.fock);

  std::vector<SparseOperator> xs;
  for (int a = 0; a < spec.bosons; ++a) xs.push_back(embed(x, a * q, total_qubits));

  SparseOperator h(dim);
  for (const auto& mono : spec.potential.terms()) {
    SparseOperator product = SparseOperator::identity(dim).scaled(mono.coefficient);
    for (int a = 0; a < spec.bosons; ++a) {
      for (int k = 0; k < mono.exponents[a]; ++k) product = product * xs[a];
    }
    h = h + product;
  }
  if (spec.fock_kinetic) {
    const auto p = fock_p(cutoff, *spec.fock);
    const auto p2 = (p * p).scaled(0.5);
    for (int a = 0; a < spec.bosons; ++a) h = h + embed(p2, a * q, total_qubits);
  }
  return h;
}

SparseOperator coordinate_hamiltonian(const HamiltonianSpec& spec) {
  const auto potential = reconstruct(expand_potential_zsum(spec).merged);
  const auto kinetic = reconstruct(kinetic_zsum(spec));
  const auto f = momentum_transform(spec.config());
  return potential + f.adjoint() * kinetic * f;
}

}  // namespace bosonq
