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

#include <cstdint>
#include <vector>

#include "bosonq/pauli.hpp"
#include "bosonq/sparse_operator.hpp"

namespace bosonq {

/// Qubit encoding of B bosons, Q qubits each, on a circle of circumference
/// 2R discretized into cutoff = 2^Q points.
///
/// Boson a (0-based) occupies register qubits [a*Q, (a+1)*Q); within a boson,
/// qubit 0 is the least-significant bit of the grid index n.
class TruncationConfig {
 public:
  static constexpr int kMaxQubitsPerBoson = 30;

  /// Throws InputError unless bosons >= 1, 1 <= qubits <= 30 and radius > 0.
  TruncationConfig(int bosons, int qubits_per_boson, double radius);

  int bosons() const { return bosons_; }
  int qubits_per_boson() const { return qubits_; }
  int total_qubits() const { return bosons_ * qubits_; }
  std::uint64_t cutoff() const { return std::uint64_t{1} << qubits_; }
  double radius() const { return radius_; }
  /// 2R / cutoff.
  double dx() const { return 2.0 * radius_ / static_cast<double>(cutoff()); }
  /// pi / R.
  double dp() const;

  /// First register qubit of boson `a` (0-based). Throws when out of range.
  int qubit_offset(int a) const;

 private:
  int bosons_;
  int qubits_;
  double radius_;
};

struct GridPoint {
  std::uint64_t index = 0;
  double value = 0.0;
};

struct FockParams {
  double mass = 1.0;
  double omega = 1.0;

  /// Throws InputError unless both are positive and finite.
  void validate() const;
};

/// x_n = (n - (cutoff-1)/2) dx for n = 0..cutoff-1.
std::vector<GridPoint> coordinate_grid(const TruncationConfig& config);
/// p_n = (n - (cutoff-1)/2) dp.
std::vector<GridPoint> momentum_grid(const TruncationConfig& config);

/// -spacing * sum_j 2^j Z_j / 2 over boson a's qubits, on the full register.
PauliSum position_zsum(const TruncationConfig& config, int boson);
PauliSum momentum_zsum(const TruncationConfig& config, int boson);

/// Nearest-neighbour shift S_Q with S_ij = delta_{i,j+1} + delta_{i,j-1};
/// `periodic` adds the wraparound |cutoff-1><0| + h.c.
SparseOperator shift_matrix(int qubits, bool periodic = false);
/// (2 I - S_Q) / dx^2 for a single boson.
SparseOperator finite_difference_p2(int qubits, double dx,
                                    bool periodic = false);

/// Truncated creation operator sum_j sqrt(j+1) |j+1><j|, j < cutoff.
SparseOperator fock_ladder(std::uint64_t cutoff);
/// (A^dag + A) / sqrt(2 m w).
SparseOperator fock_x(std::uint64_t cutoff, const FockParams& params = {});
/// i sqrt(m w / 2) (A^dag - A).
SparseOperator fock_p(std::uint64_t cutoff, const FockParams& params = {});

/// Centered Fourier kernel F[k, n] = exp(i p_k x_n) / sqrt(cutoff) for one
/// boson (dense, cutoff <= 2^12).
DenseMatrix momentum_kernel(const TruncationConfig& config);
/// Kernel applied to every boson of the register.
SparseOperator momentum_transform(const TruncationConfig& config);

}  // namespace bosonq
