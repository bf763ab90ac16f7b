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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bosonq/block_encoding.hpp"
#include "bosonq/circuit.hpp"
#include "bosonq/commands.hpp"
#include "bosonq/decompose.hpp"
#include "bosonq/errors.hpp"
#include "bosonq/scaling.hpp"
#include "bosonq/simulator.hpp"
#include "bosonq/spec_file.hpp"

namespace py = pybind11;
using namespace bosonq;

namespace {

// Pauli sums cross the boundary as {msb-first letters: coefficient}.
py::dict to_dict(const PauliSum& sum) {
  py::dict out;
  for (const auto& t : sum.terms()) out[py::str(t.msb_string())] = t.coefficient;
  return out;
}

HamiltonianSpec spec_from_json(const std::string& text) {
  auto problem = parse_problem(text);
  if (!problem.hamiltonian) throw InputError("expected a bosonic Hamiltonian spec");
  return *problem.hamiltonian;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Truncated bosonic Hamiltonians on qubit registers.";

  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_OverflowError);
  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def("decompose",
        [](const DenseMatrix& mat, double rel_tol) {
          DecomposeOptions opts;
          opts.rel_tol = rel_tol;
          return to_dict(decompose_tensorized(SparseOperator::from_dense(mat), opts));
        },
        py::arg("matrix"), py::arg("rel_tol") = PauliSum::kDefaultRelativeTolerance,
        "Pauli coefficients of a 2^n x 2^n matrix, keyed by MSB-first strings.");
  m.def("decompose_trace",
        [](const DenseMatrix& mat) {
          return to_dict(decompose_trace(SparseOperator::from_dense(mat)));
        },
        py::arg("matrix"));
  m.def("reconstruct",
        [](const std::map<std::string, cplx>& terms) {
          if (terms.empty()) throw InputError("empty Pauli sum");
          std::vector<PauliTerm> list;
          for (const auto& [s, c] : terms) list.push_back(PauliTerm::from_msb_string(s, c));
          const int n = list.front().n_qubits;
          return reconstruct(PauliSum::from_terms(n, list)).to_dense();
        },
        py::arg("terms"));

  m.def("fock_x", [](int q) { return fock_x(std::uint64_t{1} << q).to_dense(); }, py::arg("q"));
  m.def("fock_p", [](int q) { return fock_p(std::uint64_t{1} << q).to_dense(); }, py::arg("q"));
  m.def("shift_matrix", [](int q, bool periodic) { return shift_matrix(q, periodic).to_dense(); },
        py::arg("q"), py::arg("periodic") = false);
  m.def("qft_unitary", [](int q, bool centered) { return circuit_unitary(qft_circuit(q, centered)); },
        py::arg("q"), py::arg("centered") = true);

  m.def("table1",
        [](int max_q) {
          py::list rows;
          for (const auto& r : run_table1(max_q)) {
            rows.append(py::dict(py::arg("Q") = r.qubits, py::arg("x_strings") = r.x_strings,
                                 py::arg("p_strings") = r.p_strings,
                                 py::arg("formula") = r.formula, py::arg("match") = r.match));
          }
          return rows;
        },
        py::arg("max_q") = 14);

  m.def("count",
        [](const std::string& spec_json, int q_min, int q_max) {
          py::list rows;
          for (const auto& r : run_count(spec_from_json(spec_json), q_min, q_max)) {
            rows.append(py::dict(py::arg("Q") = r.qubits, py::arg("basis") = r.basis,
                                 py::arg("raw") = r.raw, py::arg("n_pauli") = r.n_pauli,
                                 py::arg("nontrivial") = r.nontrivial,
                                 py::arg("kinetic_strings") = r.kinetic_strings,
                                 py::arg("census") = r.census));
          }
          return rows;
        },
        py::arg("spec_json"), py::arg("q_min"), py::arg("q_max"));

  m.def("potential_zsum",
        [](const std::string& spec_json) {
          return to_dict(expand_potential_zsum(spec_from_json(spec_json)).merged);
        },
        py::arg("spec_json"));
  m.def("hamiltonian",
        [](const std::string& spec_json) {
          const auto spec = spec_from_json(spec_json);
          return (spec.basis == Basis::Fock ? fock_hamiltonian(spec) : coordinate_hamiltonian(spec))
              .to_dense();
        },
        py::arg("spec_json"));

  m.def("fit",
        [](const std::vector<int>& qs, const std::vector<std::uint64_t>& counts) {
          if (qs.size() != counts.size()) throw InputError("Q and count lengths differ");
          ScalingSeries series;
          for (std::size_t i = 0; i < qs.size(); ++i) series.add(qs[i], counts[i]);
          const auto f = fit_scaling(series);
          return py::dict(py::arg("a") = f.a, py::arg("b") = f.b, py::arg("c") = f.c,
                          py::arg("residual_rms") = f.residual_rms);
        },
        py::arg("qubits"), py::arg("n_pauli"));

  m.def("trotter_counts",
        [](const std::string& spec_json, double dt) {
          const auto r = trotter_step(spec_from_json(spec_json), dt).report;
          auto layer = [](const LayerCounts& c) {
            return py::dict(py::arg("rotations") = c.rotations,
                            py::arg("entangling") = c.entangling,
                            py::arg("hadamards") = c.hadamards, py::arg("total") = c.total);
          };
          return py::dict(py::arg("potential") = layer(r.potential), py::arg("qft") = layer(r.qft),
                          py::arg("kinetic") = layer(r.kinetic),
                          py::arg("inverse_qft") = layer(r.inverse_qft),
                          py::arg("total") = layer(r.totals));
        },
        py::arg("spec_json"), py::arg("dt"));
  m.def("trotter_error",
        [](const std::string& spec_json, double t, int steps) {
          return trotter_error(spec_from_json(spec_json), t, steps);
        },
        py::arg("spec_json"), py::arg("time"), py::arg("steps"));

  m.def("block_encoding",
        [](const std::string& spec_json, bool verify) {
          const auto run = run_blockenc(parse_problem(spec_json), verify);
          py::dict out(py::arg("lambda") = run.lambda, py::arg("terms") = run.terms,
                       py::arg("potential_terms") = run.potential_terms,
                       py::arg("kinetic_terms") = run.kinetic_terms,
                       py::arg("ancilla_qubits") = run.ancilla_qubits);
          if (run.error) {
            out["error"] = *run.error;
            out["unitarity_error"] = *run.unitarity;
          }
          return out;
        },
        py::arg("spec_json"), py::arg("verify") = false);
}
