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

#include "bosonq/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "bosonq/decompose.hpp"
#include "bosonq/errors.hpp"
#include "bosonq/operators.hpp"
#include "bosonq/simulator.hpp"

namespace bosonq {

using nlohmann::ordered_json;

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw InputError("unknown format '" + std::string(text) + "'");
}

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json counts_json(const LayerCounts& c) {
  return {{"rotations", c.rotations},
          {"entangling", c.entangling},
          {"hadamards", c.hadamards},
          {"total", c.total}};
}

DecomposeOptions options_with(double rel_tol) {
  DecomposeOptions opts;
  opts.rel_tol = rel_tol;
  return opts;
}

}  // namespace

std::vector<Table1Row> run_table1(int max_qubits, double rel_tol) {
  if (max_qubits < 1 || max_qubits > 20) throw InputError("max Q must be in [1, 20]");
  std::vector<Table1Row> rows;
  const auto opts = options_with(rel_tol);
  for (int q = 1; q <= max_qubits; ++q) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t cutoff = std::uint64_t{1} << q;
    Table1Row row;
    row.qubits = q;
    row.cutoff = cutoff;
    row.x_strings = decompose_tensorized(fock_x(cutoff), opts).size();
    row.p_strings = decompose_tensorized(fock_p(cutoff), opts).size();
    row.formula = static_cast<std::uint64_t>(q) << (q - 1);
    row.match = row.x_strings == row.formula && row.p_strings == row.formula;
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(row);
  }
  return rows;
}

// Timing is left out of the rendered table so output stays byte-identical
// across runs.
std::string render_table1(const std::vector<Table1Row>& rows, OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
      j.push_back({{"Q", r.qubits},
                   {"cutoff", r.cutoff},
                   {"x_strings", r.x_strings},
                   {"p_strings", r.p_strings},
                   {"formula", r.formula},
                   {"match", r.match}});
    }
    return dump(j);
  }
  std::ostringstream os;
  os << "Q,cutoff,x_strings,p_strings,formula,match\n";
  for (const auto& r : rows) {
    os << r.qubits << ',' << r.cutoff << ',' << r.x_strings << ',' << r.p_strings
       << ',' << r.formula << ',' << (r.match ? "true" : "false") << '\n';
  }
  return os.str();
}

std::vector<CountRow> run_count(const HamiltonianSpec& spec, int q_min, int q_max,
                                double rel_tol) {
  if (q_min < 1 || q_max < q_min) throw InputError("invalid Q range");
  std::vector<CountRow> rows;
  const auto opts = options_with(rel_tol);
  for (int q = q_min; q <= q_max; ++q) {
    const auto s = spec.with_qubits(q);
    s.validate();
    CountRow row;
    row.qubits = q;
    row.basis = std::string(to_string(s.basis));
    if (s.basis == Basis::Fock) {
      const auto sum = decompose_tensorized(fock_hamiltonian(s), opts);
      row.n_pauli = row.raw = sum.size();
      row.nontrivial = sum.nontrivial_count();
      row.census = census_summary(string_census(sum));
    } else if (s.kinetic == KineticScheme::MomentumDiagonal) {
      const auto pot = expand_potential_zsum(s);
      const auto kin = kinetic_zsum(s);
      row.raw = pot.raw_count;
      row.n_pauli = pot.merged.size();
      row.nontrivial = pot.merged.nontrivial_count();
      row.kinetic_strings = kin.nontrivial_count();
      row.census = census_summary(string_census(pot.merged));
    } else {
      const auto sum = decompose_tensorized(kinetic_finite_difference(s), opts);
      row.n_pauli = row.raw = sum.size();
      row.nontrivial = sum.nontrivial_count();
      row.kinetic_strings = row.nontrivial;
      row.census = census_summary(string_census(sum));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_count(const std::vector<CountRow>& rows, OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
      j.push_back({{"Q", r.qubits},
                   {"basis", r.basis},
                   {"raw", r.raw},
                   {"n_pauli", r.n_pauli},
                   {"nontrivial", r.nontrivial},
                   {"kinetic_strings", r.kinetic_strings},
                   {"y", format_real(std::log(static_cast<double>(std::max<std::size_t>(r.n_pauli, 1))) / r.qubits)},
                   {"census", r.census}});
    }
    return dump(j);
  }
  std::ostringstream os;
  os << "Q,basis,raw,n_pauli,nontrivial,kinetic_strings,y,census\n";
  for (const auto& r : rows) {
    const double y = std::log(static_cast<double>(std::max<std::size_t>(r.n_pauli, 1))) / r.qubits;
    os << r.qubits << ',' << r.basis << ',' << r.raw << ',' << r.n_pauli << ','
       << r.nontrivial << ',' << r.kinetic_strings << ',' << format_real(y) << ','
       << r.census << '\n';
  }
  return os.str();
}

std::string render_fit(const FitResult& fit, OutputFormat format) {
  if (format == OutputFormat::Json) {
    return dump({{"a", fit.a},
                 {"b", fit.b},
                 {"c", fit.c},
                 {"residual_rms", fit.residual_rms},
                 {"std_error_a", fit.std_errors[0]},
                 {"std_error_b", fit.std_errors[1]},
                 {"std_error_c", fit.std_errors[2]},
                 {"normal_condition", fit.normal_condition},
                 {"rows", fit.rows}});
  }
  std::ostringstream os;
  os << "a,b,c,residual_rms,std_error_a,std_error_b,std_error_c,normal_condition,rows\n"
     << format_real(fit.a) << ',' << format_real(fit.b) << ',' << format_real(fit.c)
     << ',' << format_real(fit.residual_rms) << ',' << format_real(fit.std_errors[0])
     << ',' << format_real(fit.std_errors[1]) << ',' << format_real(fit.std_errors[2])
     << ',' << format_real(fit.normal_condition) << ',' << fit.rows << '\n';
  return os.str();
}

TrotterRun run_trotter(const HamiltonianSpec& spec, double total_time, int steps,
                       bool verify) {
  if (!std::isfinite(total_time)) throw InputError("total time must be finite");
  TrotterRun run;
  run.evolution = trotter_evolution(spec, total_time, steps);
  run.total_time = total_time;
  run.steps = steps;
  if (!verify) return run;
  if (spec.config().total_qubits() > 12) {
    throw CapExceeded("Trotter verification limited to B*Q <= 12");
  }
  for (int k : {steps, 2 * steps, 4 * steps}) {
    run.verify_steps.push_back(k);
    run.verify_errors.push_back(trotter_error(spec, total_time, k));
  }
  for (std::size_t i = 1; i < run.verify_errors.size(); ++i) {
    const double prev = run.verify_errors[i - 1];
    const double cur = run.verify_errors[i];
    if (!std::isfinite(cur)) run.verified_ok = false;
    if (prev > kTrotterExactTolerance) {
      const double ratio = cur / prev;
      run.verify_ratios.push_back(ratio);
      if (ratio < kTrotterRatioLow || ratio > kTrotterRatioHigh) run.verified_ok = false;
    } else {
      run.verify_ratios.push_back(0.0);
      if (cur > kTrotterExactTolerance) run.verified_ok = false;
    }
  }
  return run;
}

std::string render_trotter(const TrotterRun& run, OutputFormat format) {
  const auto& r = run.evolution.report;
  const std::pair<const char*, const LayerCounts*> layers[] = {
      {"potential", &r.potential},
      {"qft", &r.qft},
      {"kinetic", &r.kinetic},
      {"inverse_qft", &r.inverse_qft},
      {"total", &r.totals}};
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["steps"] = run.steps;
    j["total_time"] = run.total_time;
    j["n_qubits"] = run.evolution.circuit.n_qubits();
    j["potential_strings_merged"] = r.potential_strings_merged;
    j["potential_strings_raw"] = r.potential_strings_raw;
    j["kinetic_strings"] = r.kinetic_strings;
    for (const auto& [name, counts] : layers) j["layers"][name] = counts_json(*counts);
    if (!run.verify_errors.empty()) {
      ordered_json v = ordered_json::array();
      for (std::size_t i = 0; i < run.verify_errors.size(); ++i) {
        ordered_json row{{"steps", run.verify_steps[i]}, {"error", run.verify_errors[i]}};
        if (i > 0) row["ratio"] = run.verify_ratios[i - 1];
        v.push_back(row);
      }
      j["verification"] = v;
      j["verified"] = run.verified_ok;
    }
    return dump(j);
  }
  std::ostringstream os;
  os << "layer,rotations,entangling,hadamards,total\n";
  for (const auto& [name, c] : layers) {
    os << name << ',' << c->rotations << ',' << c->entangling << ',' << c->hadamards
       << ',' << c->total << '\n';
  }
  if (!run.verify_errors.empty()) {
    os << "\nsteps,error,ratio\n";
    for (std::size_t i = 0; i < run.verify_errors.size(); ++i) {
      os << run.verify_steps[i] << ',' << format_real(run.verify_errors[i]) << ','
         << (i > 0 ? format_real(run.verify_ratios[i - 1]) : std::string()) << '\n';
    }
  }
  return os.str();
}

BlockEncodingRun run_blockenc(const ProblemFile& problem, bool verify, double tol) {
  std::optional<BlockEncoding> be;
  std::optional<SparseOperator> h;
  if (problem.pauli) {
    const PauliSum none(problem.pauli->n_qubits());
    be = build_block_encoding(*problem.pauli, none, std::nullopt);
    if (verify) h = reconstruct(*problem.pauli);
  } else if (problem.hamiltonian) {
    const auto& spec = *problem.hamiltonian;
    const auto config = spec.config();
    be = build_block_encoding(config, expand_potential_zsum(spec).merged,
                              kinetic_zsum(spec));
    if (verify) h = coordinate_hamiltonian(spec);
  } else {
    throw InputError("empty problem");
  }

  BlockEncodingRun run;
  run.lambda = be->plan.lambda;
  run.terms = be->plan.terms.size();
  run.potential_terms = be->plan.count(TermTag::Potential);
  run.kinetic_terms = be->plan.count(TermTag::Kinetic);
  run.ancilla_qubits = be->plan.ancilla_qubits;
  run.system_qubits = be->plan.system_qubits;
  if (verify) {
    run.error = verify_block_encoding(*be, *h);
    run.unitarity = unitarity_error(be->select);
    run.verified_ok = *run.error <= tol && *run.unitarity <= 1e-9;
  }
  return run;
}

std::string render_blockenc(const BlockEncodingRun& run, OutputFormat format) {
  const char* dominant = run.potential_terms >= run.kinetic_terms ? "potential" : "kinetic";
  if (format == OutputFormat::Json) {
    ordered_json j{{"lambda", run.lambda},
                   {"terms", run.terms},
                   {"potential_terms", run.potential_terms},
                   {"kinetic_terms", run.kinetic_terms},
                   {"ancilla_qubits", run.ancilla_qubits},
                   {"system_qubits", run.system_qubits},
                   {"dominant_select_cost", dominant}};
    if (run.error) {
      j["error"] = *run.error;
      j["unitarity_error"] = *run.unitarity;
      j["verified"] = run.verified_ok;
    }
    return dump(j);
  }
  std::ostringstream os;
  os << "lambda,terms,potential_terms,kinetic_terms,ancilla_qubits,system_qubits,"
        "dominant_select_cost,error,unitarity_error\n"
     << format_real(run.lambda) << ',' << run.terms << ',' << run.potential_terms << ','
     << run.kinetic_terms << ',' << run.ancilla_qubits << ',' << run.system_qubits << ','
     << dominant << ',' << (run.error ? format_real(*run.error) : std::string()) << ','
     << (run.unitarity ? format_real(*run.unitarity) : std::string()) << '\n';
  return os.str();
}

}  // namespace bosonq
