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

#include "bosonq/operators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bosonq/errors.hpp"

namespace bosonq {

TruncationConfig::TruncationConfig(int bosons, int qubits_per_boson,
                                   double radius)
    : bosons_(bosons), qubits_(qubits_per_boson), radius_(radius) {
  if (bosons < 1) throw InputError("bosons must be >= 1");
  if (qubits_per_boson < 1 || qubits_per_boson > kMaxQubitsPerBoson) {
    throw InputError("qubits_per_boson must be in [1, 30]");
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InputError("radius must be positive and finite");
  }
  if (bosons * qubits_per_boson > PauliTerm::kMaxQubits) {
    throw CapExceeded("register of " +
                      std::to_string(bosons * qubits_per_boson) +
                      " qubits exceeds the Pauli mask width");
  }
}

double TruncationConfig::dp() const { return std::numbers::pi / radius_; }

int TruncationConfig::qubit_offset(int a) const {
  if (a < 0 || a >= bosons_) {
    throw InputError("boson index " + std::to_string(a) + " outside [0, " +
                     std::to_string(bosons_) + ")");
  }
  return a * qubits_;
}

void FockParams::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass) || !(omega > 0.0) ||
      !std::isfinite(omega)) {
    throw InputError("Fock parameters m and omega must be positive");
  }
}

namespace {

std::vector<GridPoint> centered_grid(std::uint64_t cutoff, double spacing) {
  std::vector<GridPoint> points;
  points.reserve(cutoff);
  const double center = (static_cast<double>(cutoff) - 1.0) / 2.0;
  for (std::uint64_t n = 0; n < cutoff; ++n) {
    points.push_back({n, (static_cast<double>(n) - center) * spacing});
  }
  return points;
}

PauliSum binary_zsum(const TruncationConfig& config, int boson,
                     double spacing) {
  const int offset = config.qubit_offset(boson);
  const int n = config.total_qubits();
  std::vector<PauliTerm> terms;
  double weight = -spacing / 2.0;
  for (int j = 0; j < config.qubits_per_boson(); ++j, weight *= 2.0) {
    terms.push_back(PauliTerm::single(n, offset + j, PauliLetter::Z, weight));
  }
  return PauliSum::from_terms(n, std::move(terms));
}

void check_cutoff(std::uint64_t cutoff) {
  if (cutoff < 2) throw InputError("Fock cutoff must be >= 2");
}

}  // namespace

std::vector<GridPoint> coordinate_grid(const TruncationConfig& config) {
  return centered_grid(config.cutoff(), config.dx());
}

std::vector<GridPoint> momentum_grid(const TruncationConfig& config) {
  return centered_grid(config.cutoff(), config.dp());
}

PauliSum position_zsum(const TruncationConfig& config, int boson) {
  return binary_zsum(config, boson, config.dx());
}

PauliSum momentum_zsum(const TruncationConfig& config, int boson) {
  return binary_zsum(config, boson, config.dp());
}

SparseOperator shift_matrix(int qubits, bool periodic) {
  if (qubits < 1 || qubits > 30) throw InputError("shift_matrix needs Q >= 1");
  const std::uint64_t dim = std::uint64_t{1} << qubits;
  std::vector<Entry> entries;
  for (std::uint64_t i = 0; i + 1 < dim; ++i) {
    entries.push_back({i, i + 1, 1.0});
    entries.push_back({i + 1, i, 1.0});
  }
  // For Q = 1 the wraparound coincides with the existing (0,1) pair.
  if (periodic && dim > 2) {
    entries.push_back({dim - 1, 0, 1.0});
    entries.push_back({0, dim - 1, 1.0});
  }
  return SparseOperator::from_entries(dim, std::move(entries));
}

SparseOperator finite_difference_p2(int qubits, double dx, bool periodic) {
  if (!(dx > 0.0)) throw InputError("grid spacing must be positive");
  const auto s = shift_matrix(qubits, periodic);
  const auto two = SparseOperator::identity(s.dimension()).scaled(2.0);
  return (two - s).scaled(1.0 / (dx * dx));
}

SparseOperator fock_ladder(std::uint64_t cutoff) {
  check_cutoff(cutoff);
  std::vector<Entry> entries;
  entries.reserve(cutoff - 1);
  for (std::uint64_t j = 0; j + 1 < cutoff; ++j) {
    entries.push_back({j + 1, j, std::sqrt(static_cast<double>(j + 1))});
  }
  return SparseOperator::from_entries(cutoff, std::move(entries));
}

SparseOperator fock_x(std::uint64_t cutoff, const FockParams& params) {
  params.validate();
  const auto up = fock_ladder(cutoff);
  return (up + up.adjoint()).scaled(1.0 / std::sqrt(2.0 * params.mass * params.omega));
}

SparseOperator fock_p(std::uint64_t cutoff, const FockParams& params) {
  params.validate();
  const auto up = fock_ladder(cutoff);
  return (up - up.adjoint())
      .scaled(cplx{0.0, std::sqrt(params.mass * params.omega / 2.0)});
}

DenseMatrix momentum_kernel(const TruncationConfig& config) {
  if (config.qubits_per_boson() > 12) {
    throw CapExceeded("dense momentum kernel limited to 12 qubits per boson");
  }
  const auto xs = coordinate_grid(config);
  const auto ps = momentum_grid(config);
  const auto n = static_cast<Eigen::Index>(config.cutoff());
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  DenseMatrix f(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index m = 0; m < n; ++m) {
      f(k, m) = std::polar(norm, ps[static_cast<std::size_t>(k)].value *
                                     xs[static_cast<std::size_t>(m)].value);
    }
  }
  return f;
}

SparseOperator momentum_transform(const TruncationConfig& config) {
  const auto single = SparseOperator::from_dense(momentum_kernel(config));
  SparseOperator total = single;
  for (int a = 1; a < config.bosons(); ++a) total = kron(single, total);
  return total;
}

}  // namespace bosonq
