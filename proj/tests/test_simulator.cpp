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

#include <gtest/gtest.h>

#include <random>

#include "bosonq/circuit.hpp"
#include "bosonq/errors.hpp"
#include "bosonq/simulator.hpp"
#include "oracles.hpp"

using namespace bosonq;

namespace {

HamiltonianSpec spec_with(int bosons, int q, double radius, std::vector<Monomial> terms) {
  HamiltonianSpec spec;
  spec.bosons = bosons;
  spec.qubits_per_boson = q;
  spec.radius = radius;
  spec.potential = PolynomialPotential(bosons, std::move(terms));
  return spec;
}

}  // namespace

TEST(StateVector, HadamardOnZero) {
  auto psi = StateVector::basis_state(1, 0);
  psi.apply(Gate::h(0));
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(psi[0] - s), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(psi[1] - s), 0.0, 1e-15);
}

TEST(StateVector, EmptyCircuitIsIdentity) {
  const auto psi = StateVector::from_amplitudes({0.6, cplx(0, 0.8), 0.0, 0.0});
  const auto out = apply_circuit(Circuit(2), psi);
  EXPECT_EQ(out.amplitudes(), psi.amplitudes());
  const auto u = circuit_unitary(Circuit(2));
  EXPECT_EQ(oracle::max_abs(u - oracle::Mat::Identity(4, 4)), 0.0);
}

TEST(StateVector, QftOfZeroIsUniform) {
  const auto out = apply_circuit(qft_circuit(2, false), StateVector::basis_state(2, 0));
  for (std::uint64_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(out[i] - 0.5), 0.0, 1e-15);
}

TEST(StateVector, RejectsBadInput) {
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), InputError);
  EXPECT_THROW(StateVector(21), CapExceeded);
  EXPECT_THROW(StateVector::basis_state(2, 4), InputError);
  StateVector psi(2);
  EXPECT_THROW(apply_circuit(Circuit(3), psi), InputError);
}

TEST(StateVector, NormIsPreserved) {
  const auto spec = spec_with(2, 3, 2.0, {{1.0, {2, 2}}, {0.3, {1, 0}}});
  const auto c = trotter_evolution(spec, 0.7, 3).circuit;
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  std::vector<cplx> amps(64);
  for (auto& a : amps) a = {g(rng), g(rng)};
  double n2 = 0.0;
  for (const auto& a : amps) n2 += std::norm(a);
  for (auto& a : amps) a /= std::sqrt(n2);
  const auto out = apply_circuit(c, StateVector::from_amplitudes(amps));
  EXPECT_NEAR(out.norm(), 1.0, 1e-12);
}

TEST(StateVector, MatchesDenseUnitaryColumns) {
  const auto c = trotter_step(spec_with(1, 3, 2.0, {{1.0, {4}}}), 0.2).circuit;
  const auto u = circuit_unitary(c);
  const auto sparse_u = circuit_matrix(c);
  EXPECT_LT(max_abs_diff(sparse_u.to_dense(), u), 1e-14);
  for (std::uint64_t col = 0; col < 8; ++col) {
    const auto out = apply_circuit(c, StateVector::basis_state(3, col));
    for (std::uint64_t row = 0; row < 8; ++row) {
      EXPECT_NEAR(std::abs(out[row] - u(row, col)), 0.0, 1e-14);
    }
  }
}

TEST(ExactPropagator, PauliExamples) {
  const double t = 0.8;
  const auto z = exact_propagator(PauliTerm::from_msb_string("Z").to_sparse(), t).unitary;
  EXPECT_NEAR(std::abs(z(0, 0) - std::exp(cplx(0, -t))), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(z(1, 1) - std::exp(cplx(0, t))), 0.0, 1e-14);
  const auto x = exact_propagator(PauliTerm::from_msb_string("X").to_sparse(), t).unitary;
  EXPECT_NEAR(std::abs(x(0, 0) - std::cos(t)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(x(1, 0) - cplx(0, -std::sin(t))), 0.0, 1e-14);
  EXPECT_THROW(exact_propagator(shift_matrix(2).scaled(cplx(0, 1)), t), InputError);
}

TEST(ExactPropagator, MatchesSeriesOracle) {
  std::mt19937_64 rng(17);
  const auto h = oracle::random_hermitian(3, rng);
  const double t = 0.05;
  // exp(-iHt) by a truncated Taylor series, accurate for small |Ht|.
  oracle::Mat term = oracle::Mat::Identity(8, 8);
  oracle::Mat sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * h * cplx(0, -t) / static_cast<double>(k);
    sum += term;
  }
  const auto u = exact_propagator(SparseOperator::from_dense(h), t).unitary;
  EXPECT_LT(oracle::max_abs(u - sum), 1e-13);
}

TEST(TrotterError, ExactWhenPotentialVanishes) {
  const auto spec = spec_with(1, 3, 2.0, {});
  EXPECT_LT(trotter_error(spec, 1.0, 1), 1e-10);
  EXPECT_LT(trotter_error(spec_with(2, 2, 2.0, {}), 1.3, 2), 1e-10);
}

TEST(TrotterError, ExactWhenPotentialIsConstant) {
  EXPECT_LT(trotter_error(spec_with(1, 3, 2.0, {{2.5, {0}}}), 1.0, 1), 1e-10);
}

TEST(TrotterError, PotentialOnlyEvolutionIsExact) {
  // With the kinetic layer removed each step is a product of commuting
  // diagonal rotations, so the composed circuit equals exp(-iVT).
  const auto spec = spec_with(1, 4, 2.0, {{1.0, {2}}, {0.5, {4}}, {-1.0, {3}}});
  const auto v = expand_potential_zsum(spec).merged;
  Circuit c(4);
  for (int i = 0; i < 7; ++i) c.append(zsum_rotations(v, 1.0 / 7));
  const auto exact = oracle::expm_hermitian(oracle::potential_on_grid(spec), 1.0);
  EXPECT_LT(oracle::max_abs(circuit_unitary(c) - exact), 1e-10);
}

TEST(TrotterError, DecreasesWithSteps) {
  const auto spec = spec_with(1, 3, 2.0, {{1.0, {2}}, {1.0, {4}}});
  double previous = std::numeric_limits<double>::infinity();
  for (int n : {4, 8, 16, 32, 64}) {
    const double e = trotter_error(spec, 1.0, n);
    EXPECT_LT(e, previous) << n;
    previous = e;
  }
}

TEST(Consistency, CircuitGeneratorMatchesHamiltonian) {
  // i log of a small-step Trotter unitary approaches H; compare first order.
  const auto spec = spec_with(2, 2, 1.5, {{1.0, {2, 0}}, {0.5, {1, 1}}, {0.2, {0, 3}}});
  const double dt = 1e-5;
  const auto u = circuit_unitary(trotter_step(spec, dt).circuit);
  const oracle::Mat generator = (oracle::Mat::Identity(16, 16) - u) * cplx(0, -1.0 / dt);
  const auto h = coordinate_hamiltonian(spec).to_dense();
  const double scale = oracle::max_abs(h);
  EXPECT_LT(oracle::max_abs(generator - h) / scale, 1e-3);
  EXPECT_LT(oracle::max_abs(oracle::expm_hermitian(h, dt) - u), 1e-8);
}
