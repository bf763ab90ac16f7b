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

#include <cmath>

#include "bosonq/commands.hpp"
#include "bosonq/errors.hpp"
#include "bosonq/spec_file.hpp"

using namespace bosonq;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_problem(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

const char* kAnharmonic = R"({
  "bosons": 1,
  "qubits_per_boson": 3,
  "radius": 2.0,
  "basis": "coordinate+qft",
  "potential": [
    {"coeff": 1.0, "exponents": [2]},
    {"coeff": 1.0, "exponents": [4]}
  ]
})";

}  // namespace

TEST(SpecFile, ParsesHamiltonian) {
  const auto p = parse_problem(kAnharmonic);
  ASSERT_TRUE(p.hamiltonian);
  EXPECT_FALSE(p.pauli);
  EXPECT_EQ(p.hamiltonian->qubits_per_boson, 3);
  EXPECT_EQ(p.hamiltonian->kinetic, KineticScheme::MomentumDiagonal);
  EXPECT_EQ(p.hamiltonian->potential.term_count(), 2u);
  EXPECT_DOUBLE_EQ(*p.hamiltonian->radius, 2.0);
}

TEST(SpecFile, ParsesPauliTerms) {
  const auto p = parse_problem(R"({"pauli_terms": [{"string": "XI", "coeff": 1.5},
                                                   {"string": "ZZ", "coeff": -1}]})");
  ASSERT_TRUE(p.pauli);
  EXPECT_EQ(p.pauli->coefficient("XI"), cplx(1.5));
  EXPECT_EQ(p.pauli->coefficient("ZZ"), cplx(-1.0));
}

TEST(SpecFile, ErrorsNameTheLine) {
  EXPECT_EQ(error_of("{\n  \"bosons\": 1,\n  \"qubits_per_boson\": \"three\"\n}").rfind("line 3:", 0),
            0u);
  const std::string bad_exponent = R"({
  "bosons": 1,
  "qubits_per_boson": 2,
  "radius": 1.0,
  "basis": "coordinate+qft",
  "potential": [
    {"coeff": 1.0, "exponents": [2]},
    {"coeff": 1.0, "exponents": [2, 1]}
  ]
})";
  EXPECT_EQ(error_of(bad_exponent).rfind("line 8:", 0), 0u) << error_of(bad_exponent);
  const std::string bad_letter = "{\"pauli_terms\": [\n {\"string\": \"X\", \"coeff\": 1},\n"
                                 " {\"string\": \"Q\", \"coeff\": 1}]}";
  EXPECT_EQ(error_of(bad_letter).rfind("line 3:", 0), 0u) << error_of(bad_letter);
  EXPECT_EQ(error_of("{\n \"bosons\": 1,\n \"qubits_per_boson\": 2,\n \"basis\": \"coordinate+qft\"\n}")
                .rfind("line 1:", 0),
            0u);
  EXPECT_NE(error_of("{\n \"bosons\": 1,\n").find("line 3"), std::string::npos);
  EXPECT_NE(error_of("[1, 2]").find("line 1"), std::string::npos);
}

TEST(SpecFile, MissingFileIsInputError) {
  EXPECT_THROW(load_problem("/nonexistent/spec.json"), InputError);
}

TEST(Commands, Table1RowsMatchFormula) {
  const auto rows = run_table1(10);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[4].x_strings, 80u);
  EXPECT_EQ(rows[8].x_strings, 2304u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.match);
    EXPECT_EQ(r.formula, static_cast<std::uint64_t>(r.qubits) << (r.qubits - 1));
    EXPECT_EQ(r.p_strings, r.x_strings);
  }
  const auto csv = render_table1(rows, OutputFormat::Csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "Q,cutoff,x_strings,p_strings,formula,match");
  EXPECT_EQ(csv, render_table1(run_table1(10), OutputFormat::Csv));
}

TEST(Commands, CountQuarticCoordinate) {
  HamiltonianSpec spec;
  spec.qubits_per_boson = 3;
  spec.radius = 2.0;
  spec.potential = PolynomialPotential(1, {{1.0, {4}}});
  const auto rows = run_count(spec, 3, 3);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].raw, 81u);
  EXPECT_EQ(rows[0].kinetic_strings, 3u);
  EXPECT_THROW(run_count(spec, 4, 3), InputError);
}

TEST(Commands, CountFiniteDifferenceShift) {
  HamiltonianSpec spec;
  spec.radius = 2.0;
  spec.kinetic = KineticScheme::FiniteDifferenceOpen;
  spec.potential = PolynomialPotential(1);
  const auto rows = run_count(spec, 1, 6);
  for (const auto& r : rows) {
    // 2I - S: the shift strings plus the identity.
    EXPECT_EQ(r.kinetic_strings, (std::size_t{1} << r.qubits) - 1) << r.qubits;
  }
}

TEST(Commands, CountFockSeriesIncreases) {
  HamiltonianSpec spec;
  spec.basis = Basis::Fock;
  spec.fock = FockParams{};
  spec.potential = PolynomialPotential(1, {{1.0, {4}}, {2.0, {3}}, {3.0, {2}}, {2.0, {1}}, {1.0, {0}}});
  const auto rows = run_count(spec, 2, 7);
  const std::size_t expected[] = {9, 35, 103, 271, 671, 1599};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].n_pauli, expected[i]);
    EXPECT_EQ(rows[i].basis, "fock");
  }
  EXPECT_EQ(render_count(rows, OutputFormat::Csv), render_count(run_count(spec, 2, 7), OutputFormat::Csv));
}

TEST(Commands, TrotterVerifyRatios) {
  const auto spec = *parse_problem(kAnharmonic).hamiltonian;
  const auto run = run_trotter(spec, 1.0, 8, true);
  ASSERT_EQ(run.verify_errors.size(), 3u);
  for (double r : run.verify_ratios) EXPECT_NEAR(r, 0.5, 0.1);
  EXPECT_TRUE(run.verified_ok);
  EXPECT_NE(render_trotter(run, OutputFormat::Csv).find("steps,error,ratio"), std::string::npos);
}

TEST(Commands, TrotterReportStructure) {
  auto spec = *parse_problem(kAnharmonic).hamiltonian;
  spec.qubits_per_boson = 2;
  const auto run = run_trotter(spec, 1.0, 16, false);
  EXPECT_EQ(run.evolution.report.steps, 16u);
  const auto csv = render_trotter(run, OutputFormat::Csv);
  for (const char* layer : {"potential", "qft", "kinetic", "inverse_qft", "total"}) {
    EXPECT_NE(csv.find(std::string("\n") + layer + ","), std::string::npos) << layer;
  }
}

TEST(Commands, BlockEncodingToy) {
  const auto run = run_blockenc(
      parse_problem(R"({"pauli_terms": [{"string": "X", "coeff": 1}, {"string": "Z", "coeff": 1}]})"),
      true);
  EXPECT_DOUBLE_EQ(run.lambda, 2.0);
  EXPECT_EQ(run.terms, 2u);
  EXPECT_EQ(run.ancilla_qubits, 1);
  ASSERT_TRUE(run.error);
  EXPECT_LE(*run.error, 1e-12);
  EXPECT_TRUE(run.verified_ok);
}

TEST(Commands, BlockEncodingAnharmonicReport) {
  const auto run = run_blockenc(parse_problem(kAnharmonic), true);
  EXPECT_LE(*run.error, 1e-10);
  EXPECT_GT(run.potential_terms, 0u);
  EXPECT_EQ(run.kinetic_terms, 4u);
  const auto json = render_blockenc(run, OutputFormat::Json);
  EXPECT_NE(json.find("\"dominant_select_cost\""), std::string::npos);
}

TEST(Commands, FormatHelpers) {
  EXPECT_EQ(parse_format("json"), OutputFormat::Json);
  EXPECT_THROW(parse_format("xml"), InputError);
  EXPECT_EQ(format_real(1.0 / 3.0), "0.333333333333");
}
