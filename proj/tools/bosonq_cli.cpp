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

// Command-line front end: table1, count, fit, trotter, blockenc.
//
// Exit codes: 0 success, 2 input error, 3 cap exceeded, 4 verification
// failure beyond tolerance.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bosonq/commands.hpp"
#include "bosonq/errors.hpp"
#include "bosonq/spec_file.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitVerify = 4;

struct CommonOptions {
  std::string out;
  std::string format = "csv";
  double tol = -1.0;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--out", opts.out, "Write the report to this path instead of stdout");
  cmd->add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--tol", opts.tol, "Tolerance (see README for per-command meaning)")
      ->check(CLI::NonNegativeNumber);
}

void emit(const CommonOptions& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out, std::ios::binary);
  if (!out) throw bosonq::InputError("cannot write '" + opts.out + "'");
  out << text;
}

double or_default(double value, double fallback) { return value < 0.0 ? fallback : value; }

bosonq::HamiltonianSpec require_hamiltonian(const std::string& path) {
  auto problem = bosonq::load_problem(path);
  if (!problem.hamiltonian) {
    throw bosonq::InputError(path + ": command needs a bosonic Hamiltonian spec");
  }
  return *problem.hamiltonian;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated bosonic Hamiltonians: Pauli counts, circuits, block encodings"};
  app.require_subcommand(1);

  CommonOptions table1_opts;
  int table1_max_q = 14;
  auto* table1 = app.add_subcommand("table1", "Fock-basis x/p Pauli-string counts");
  add_common(table1, table1_opts);
  table1->add_option("--max-q", table1_max_q, "Largest Q")->check(CLI::Range(1, 20));

  CommonOptions count_opts;
  std::string count_spec;
  int q_min = -1, q_max = -1;
  auto* count = app.add_subcommand("count", "Pauli-string counts over a Q range");
  add_common(count, count_opts);
  count->add_option("spec", count_spec, "Hamiltonian spec file")->required();
  count->add_option("--q-min", q_min, "First Q (default: spec value)");
  count->add_option("--q-max", q_max, "Last Q (default: q-min)");

  CommonOptions fit_opts;
  std::string fit_series;
  auto* fit = app.add_subcommand("fit", "Fit (1/Q) ln N = a + (b + c ln Q)/Q");
  add_common(fit, fit_opts);
  fit->add_option("series", fit_series, "CSV with Q and n_pauli columns")->required();

  CommonOptions trotter_opts;
  std::string trotter_spec, circuit_out;
  double total_time = 1.0;
  int steps = 1;
  bool trotter_verify = false;
  auto* trotter = app.add_subcommand("trotter", "First-order Trotter circuit and gate counts");
  add_common(trotter, trotter_opts);
  trotter->add_option("spec", trotter_spec, "Hamiltonian spec file")->required();
  trotter->add_option("--time", total_time, "Total evolution time")->required();
  trotter->add_option("--steps", steps, "Trotter steps")->required()->check(CLI::PositiveNumber);
  trotter->add_option("--circuit-out", circuit_out, "Write the gate list here");
  trotter->add_flag("--verify", trotter_verify, "Compare against the exact propagator");

  CommonOptions be_opts;
  std::string be_spec;
  bool be_verify = false;
  auto* blockenc = app.add_subcommand("blockenc", "LCU block encoding");
  add_common(blockenc, be_opts);
  blockenc->add_option("spec", be_spec, "Hamiltonian or Pauli-term spec file")->required();
  blockenc->add_flag("--verify", be_verify, "Check <G|U|G> = H/lambda");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    using namespace bosonq;
    if (*table1) {
      const auto rows = run_table1(table1_max_q, or_default(table1_opts.tol, PauliSum::kDefaultRelativeTolerance));
      emit(table1_opts, render_table1(rows, parse_format(table1_opts.format)));
      for (const auto& r : rows) {
        if (!r.match) return kExitVerify;
      }
    } else if (*count) {
      const auto spec = require_hamiltonian(count_spec);
      const int lo = q_min > 0 ? q_min : spec.qubits_per_boson;
      const int hi = q_max > 0 ? q_max : lo;
      const auto rows = run_count(spec, lo, hi, or_default(count_opts.tol, PauliSum::kDefaultRelativeTolerance));
      emit(count_opts, render_count(rows, parse_format(count_opts.format)));
    } else if (*fit) {
      std::ifstream in(fit_series);
      if (!in) throw InputError("cannot open '" + fit_series + "'");
      emit(fit_opts, render_fit(fit_scaling(read_series_csv(in)), parse_format(fit_opts.format)));
    } else if (*trotter) {
      const auto spec = require_hamiltonian(trotter_spec);
      const auto run = run_trotter(spec, total_time, steps, trotter_verify);
      if (!circuit_out.empty()) {
        std::ofstream out(circuit_out, std::ios::binary);
        if (!out) throw InputError("cannot write '" + circuit_out + "'");
        write_circuit(out, run.evolution.circuit);
      }
      emit(trotter_opts, render_trotter(run, parse_format(trotter_opts.format)));
      if (!run.verified_ok) return kExitVerify;
    } else if (*blockenc) {
      const auto problem = load_problem(be_spec);
      const auto run = run_blockenc(problem, be_verify, or_default(be_opts.tol, kBlockEncodingTolerance));
      emit(be_opts, render_blockenc(run, parse_format(be_opts.format)));
      if (!run.verified_ok) return kExitVerify;
    }
  } catch (const bosonq::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const bosonq::VerificationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerify;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
