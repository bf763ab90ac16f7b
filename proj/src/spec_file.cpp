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

#include "bosonq/spec_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bosonq/errors.hpp"

namespace bosonq {

namespace {

using nlohmann::json;

class Diagnostics {
 public:
  explicit Diagnostics(std::string_view text) : text_(text) {}

  // Line of the nth occurrence of "key" after the first "anchor".
  int line_of(std::string_view key, int nth = 0, std::string_view anchor = {}) const {
    std::size_t pos = 0;
    if (!anchor.empty()) {
      pos = text_.find(quoted(anchor));
      if (pos == std::string_view::npos) pos = 0;
    }
    const std::string k = quoted(key);
    pos = text_.find(k, pos);
    for (int i = 0; i < nth && pos != std::string_view::npos; ++i) {
      pos = text_.find(k, pos + 1);
    }
    if (pos == std::string_view::npos) return 1;
    return 1 + static_cast<int>(std::count(text_.begin(), text_.begin() + pos, '\n'));
  }

  [[noreturn]] void fail(std::string_view key, const std::string& what, int nth = 0,
                         std::string_view anchor = {}) const {
    throw InputError("line " + std::to_string(line_of(key, nth, anchor)) + ": " + what);
  }

 private:
  static std::string quoted(std::string_view key) { return "\"" + std::string(key) + "\""; }

 public:
 private:
  std::string_view text_;
};

// nth/anchor locate the field inside the nth element of an array.
template <typename T>
T field(const json& obj, const char* key, const Diagnostics& diag, int nth = 0,
        std::string_view anchor = {}) {
  if (!obj.is_object()) diag.fail(anchor.empty() ? key : anchor, "expected a JSON object");
  if (!obj.contains(key)) {
    // A missing key has no position of its own; point at the enclosing array.
    diag.fail(anchor.empty() ? key : anchor, std::string("missing field '") + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    diag.fail(key, std::string("field '") + key + "' has the wrong type", nth, anchor);
  }
}

PauliSum parse_pauli_terms(const json& terms, const Diagnostics& diag) {
  if (!terms.is_array() || terms.empty()) {
    diag.fail("pauli_terms", "'pauli_terms' must be a non-empty array");
  }
  std::vector<PauliTerm> out;
  int n = -1;
  int i = 0;
  for (const auto& t : terms) {
    const auto letters = field<std::string>(t, "string", diag, i, "pauli_terms");
    const auto coeff = field<double>(t, "coeff", diag, i, "pauli_terms");
    if (n >= 0 && static_cast<int>(letters.size()) != n) {
      diag.fail("string", "Pauli strings have different lengths", i, "pauli_terms");
    }
    n = static_cast<int>(letters.size());
    try {
      out.push_back(PauliTerm::from_msb_string(letters, coeff));
    } catch (const InputError& e) {
      diag.fail("string", e.what(), i, "pauli_terms");
    }
    ++i;
  }
  return PauliSum::from_terms(n, std::move(out));
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  const Diagnostics diag(text);
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports "... at line L, column C: ..." in what().
    throw InputError(std::string("malformed spec file: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("line 1: spec file must be a JSON object");

  ProblemFile problem;
  if (doc.contains("pauli_terms")) {
    problem.pauli = parse_pauli_terms(doc.at("pauli_terms"), diag);
    return problem;
  }

  HamiltonianSpec spec;
  spec.bosons = field<int>(doc, "bosons", diag);
  spec.qubits_per_boson = field<int>(doc, "qubits_per_boson", diag);
  if (spec.bosons < 1) diag.fail("bosons", "bosons must be >= 1");
  if (spec.qubits_per_boson < 1) {
    diag.fail("qubits_per_boson", "qubits_per_boson must be >= 1");
  }
  if (doc.contains("radius")) spec.radius = field<double>(doc, "radius", diag);
  try {
    spec.kinetic = parse_kinetic_scheme(
        doc.value("kinetic_scheme", std::string("momentum-basis-diagonal")));
  } catch (const InputError& e) {
    diag.fail("kinetic_scheme", e.what());
  }
  try {
    spec.basis = parse_basis(field<std::string>(doc, "basis", diag));
  } catch (const InputError& e) {
    diag.fail("basis", e.what());
  }
  if (doc.contains("fock")) {
    const auto& f = doc.at("fock");
    spec.fock = FockParams{field<double>(f, "m", diag), field<double>(f, "omega", diag)};
  }
  if (doc.contains("fock_kinetic")) {
    spec.fock_kinetic = field<bool>(doc, "fock_kinetic", diag);
  }

  spec.potential = PolynomialPotential(spec.bosons);
  if (doc.contains("potential")) {
    const auto& terms = doc.at("potential");
    if (!terms.is_array()) diag.fail("potential", "'potential' must be an array");
    int i = 0;
    for (const auto& t : terms) {
      Monomial m;
      m.coefficient = field<double>(t, "coeff", diag, i, "potential");
      m.exponents = field<std::vector<int>>(t, "exponents", diag, i, "potential");
      try {
        spec.potential.add(std::move(m));
      } catch (const InputError& e) {
        diag.fail("exponents", e.what(), i, "potential");
      }
      ++i;
    }
  }
  try {
    spec.validate();
  } catch (const InputError& e) {
    const char* key = spec.basis == Basis::Fock ? "fock" : "radius";
    diag.fail(key, e.what());
  }
  problem.hamiltonian = std::move(spec);
  return problem;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

}  // namespace bosonq
