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
#include <optional>
#include <string>
#include <vector>

#include "bosonq/block_encoding.hpp"
#include "bosonq/circuit.hpp"
#include "bosonq/hamiltonian.hpp"
#include "bosonq/scaling.hpp"
#include "bosonq/spec_file.hpp"

namespace bosonq {

enum class OutputFormat { Csv, Json };
OutputFormat parse_format(std::string_view text);

/// Decimal with 12 significant digits, as used in every CSV column.
std::string format_real(double value);

// table1 ---------------------------------------------------------------------

struct Table1Row {
  int qubits = 0;
  std::uint64_t cutoff = 0;
  std::size_t x_strings = 0;
  std::size_t p_strings = 0;
  std::uint64_t formula = 0;  // Q * 2^(Q-1)
  bool match = false;
  double seconds = 0.0;
};

/// Fock-basis x and p Pauli-string counts for Q = 1..max_qubits.
std::vector<Table1Row> run_table1(int max_qubits = 14,
                                  double rel_tol = PauliSum::kDefaultRelativeTolerance);
std::string render_table1(const std::vector<Table1Row>& rows, OutputFormat format);

// count ----------------------------------------------------------------------

struct CountRow {
  int qubits = 0;
  std::string basis;
  /// Pre-merge string count (Q^d per monomial) for coordinate-basis
  /// potentials; equal to n_pauli otherwise.
  std::size_t raw = 0;
  /// Strings after merging / decomposition, identity included.
  std::size_t n_pauli = 0;
  std::size_t nontrivial = 0;
  std::size_t kinetic_strings = 0;
  std::string census;
};

/// Sweeps Q over [q_min, q_max]:
///  - coordinate+qft / momentum-diagonal: Z-string expansion of V and p^2/2
///  - coordinate+qft / finite-difference: decomposition of the finite-
///    difference kinetic matrix (no potential)
///  - fock: decomposition of fock_hamiltonian
std::vector<CountRow> run_count(const HamiltonianSpec& spec, int q_min, int q_max,
                                double rel_tol = PauliSum::kDefaultRelativeTolerance);
std::string render_count(const std::vector<CountRow>& rows, OutputFormat format);

// fit ------------------------------------------------------------------------

std::string render_fit(const FitResult& fit, OutputFormat format);

// trotter --------------------------------------------------------------------

struct TrotterRun {
  TrotterCircuit evolution;
  double total_time = 0.0;
  int steps = 0;
  /// Filled in verify mode: errors at n, 2n, 4n and the successive ratios.
  std::vector<int> verify_steps;
  std::vector<double> verify_errors;
  std::vector<double> verify_ratios;
  bool verified_ok = true;
};

/// Ratio window for first-order halving; errors at or below
/// kTrotterExactTolerance count as exact splitting.
inline constexpr double kTrotterRatioLow = 0.4;
inline constexpr double kTrotterRatioHigh = 0.6;
inline constexpr double kTrotterExactTolerance = 1e-10;

TrotterRun run_trotter(const HamiltonianSpec& spec, double total_time, int steps,
                       bool verify);
std::string render_trotter(const TrotterRun& run, OutputFormat format);

// blockenc -------------------------------------------------------------------

inline constexpr double kBlockEncodingTolerance = 1e-10;

struct BlockEncodingRun {
  double lambda = 0.0;
  std::size_t terms = 0;
  std::size_t potential_terms = 0;
  std::size_t kinetic_terms = 0;
  int ancilla_qubits = 0;
  int system_qubits = 0;
  std::optional<double> error;
  std::optional<double> unitarity;
  bool verified_ok = true;
};

BlockEncodingRun run_blockenc(const ProblemFile& problem, bool verify,
                              double tol = kBlockEncodingTolerance);
std::string render_blockenc(const BlockEncodingRun& run, OutputFormat format);

}  // namespace bosonq
