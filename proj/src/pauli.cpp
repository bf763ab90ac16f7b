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

#include "bosonq/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_map>

#include "bosonq/errors.hpp"

namespace bosonq {

namespace {

constexpr cplx kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

cplx i_power(int k) { return kIPowers[((k % 4) + 4) % 4]; }

void check_qubit_count(int n) {
  if (n < 0 || n > PauliTerm::kMaxQubits) {
    throw InputError("qubit count " + std::to_string(n) + " outside [0, " +
                     std::to_string(PauliTerm::kMaxQubits) + "]");
  }
}

std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void set_letter(PauliTerm& t, int qubit, char c) {
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (c) {
    case 'I':
      break;
    case 'X':
      t.x_mask |= bit;
      break;
    case 'Y':
      t.x_mask |= bit;
      t.z_mask |= bit;
      break;
    case 'Z':
      t.z_mask |= bit;
      break;
    default:
      throw InputError(std::string("invalid Pauli letter '") + c + "'");
  }
}

struct MaskHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k)
      const noexcept {
    return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^
                                      k.second);
  }
};

bool key_less(const PauliTerm& a, const PauliTerm& b) {
  return a.x_mask != b.x_mask ? a.x_mask < b.x_mask : a.z_mask < b.z_mask;
}

}  // namespace

PauliTerm PauliTerm::identity(int n_qubits, cplx coefficient) {
  check_qubit_count(n_qubits);
  return {n_qubits, 0, 0, coefficient};
}

PauliTerm PauliTerm::single(int n_qubits, int qubit, PauliLetter letter,
                            cplx coefficient) {
  check_qubit_count(n_qubits);
  if (qubit < 0 || qubit >= n_qubits) {
    throw InputError("qubit " + std::to_string(qubit) + " outside register");
  }
  PauliTerm t{n_qubits, 0, 0, coefficient};
  constexpr char letters[] = {'I', 'X', 'Y', 'Z'};
  set_letter(t, qubit, letters[static_cast<int>(letter)]);
  return t;
}

PauliTerm PauliTerm::from_msb_string(std::string_view letters,
                                     cplx coefficient) {
  const int n = static_cast<int>(letters.size());
  check_qubit_count(n);
  PauliTerm t{n, 0, 0, coefficient};
  for (int k = 0; k < n; ++k) set_letter(t, n - 1 - k, letters[k]);
  return t;
}

PauliTerm PauliTerm::from_lsb_string(std::string_view letters,
                                     cplx coefficient) {
  const int n = static_cast<int>(letters.size());
  check_qubit_count(n);
  PauliTerm t{n, 0, 0, coefficient};
  for (int k = 0; k < n; ++k) set_letter(t, k, letters[k]);
  return t;
}

PauliLetter PauliTerm::letter(int qubit) const {
  const bool x = (x_mask >> qubit) & 1U;
  const bool z = (z_mask >> qubit) & 1U;
  if (x && z) return PauliLetter::Y;
  if (x) return PauliLetter::X;
  if (z) return PauliLetter::Z;
  return PauliLetter::I;
}

int PauliTerm::weight() const { return std::popcount(x_mask | z_mask); }

std::string PauliTerm::msb_string() const {
  std::string s = lsb_string();
  std::reverse(s.begin(), s.end());
  return s;
}

std::string PauliTerm::lsb_string() const {
  constexpr char letters[] = {'I', 'X', 'Y', 'Z'};
  std::string s(static_cast<std::size_t>(n_qubits), 'I');
  for (int q = 0; q < n_qubits; ++q) {
    s[static_cast<std::size_t>(q)] = letters[static_cast<int>(letter(q))];
  }
  return s;
}

cplx PauliTerm::phase_for_column(std::uint64_t col) const {
  const int ys = std::popcount(x_mask & z_mask);
  const int flips = std::popcount(col & z_mask);
  cplx phase = i_power(ys);
  return (flips & 1) ? -phase : phase;
}

SparseOperator PauliTerm::to_sparse() const {
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  std::vector<Entry> entries;
  entries.reserve(dim);
  for (std::uint64_t c = 0; c < dim; ++c) {
    entries.push_back({c ^ x_mask, c, coefficient * phase_for_column(c)});
  }
  return SparseOperator::from_entries(dim, std::move(entries));
}

PauliTerm operator*(const PauliTerm& a, const PauliTerm& b) {
  if (a.n_qubits != b.n_qubits) throw InputError("Pauli register mismatch");
  PauliTerm out{a.n_qubits, a.x_mask ^ b.x_mask, a.z_mask ^ b.z_mask, {}};
  // i^{ya} X^xa Z^za * i^{yb} X^xb Z^zb = i^{ya+yb} (-1)^{|za&xb|} X^x Z^z.
  const int exponent = std::popcount(a.x_mask & a.z_mask) +
                       std::popcount(b.x_mask & b.z_mask) +
                       2 * std::popcount(a.z_mask & b.x_mask) -
                       std::popcount(out.x_mask & out.z_mask);
  out.coefficient = a.coefficient * b.coefficient * i_power(exponent);
  return out;
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
}

PauliSum PauliSum::from_terms(int n_qubits, std::vector<PauliTerm> terms,
                              double rel_tol) {
  PauliSum out(n_qubits);
  const std::uint64_t mask = full_mask(n_qubits);
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::size_t,
                     MaskHash>
      index;
  std::vector<PauliTerm> merged;
  merged.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.n_qubits != n_qubits || (t.x_mask & ~mask) || (t.z_mask & ~mask)) {
      throw InputError("Pauli term does not fit a " +
                       std::to_string(n_qubits) + "-qubit register");
    }
    auto [it, inserted] = index.try_emplace({t.x_mask, t.z_mask}, merged.size());
    if (inserted) {
      merged.push_back(t);
    } else {
      merged[it->second].coefficient += t.coefficient;
    }
  }
  double largest = 0.0;
  for (const auto& t : merged) largest = std::max(largest, std::abs(t.coefficient));
  const double cutoff = rel_tol * largest;
  for (auto& t : merged) {
    const double mag = std::abs(t.coefficient);
    if (mag != 0.0 && mag > cutoff) {
      // Adding +0.0 turns a signed zero part into a plain zero.
      t.coefficient = {t.coefficient.real() + 0.0, t.coefficient.imag() + 0.0};
      out.terms_.push_back(t);
    }
  }
  std::sort(out.terms_.begin(), out.terms_.end(), key_less);
  return out;
}

cplx PauliSum::coefficient(std::uint64_t x_mask, std::uint64_t z_mask) const {
  const PauliTerm key{n_qubits_, x_mask, z_mask, {}};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, key_less);
  if (it != terms_.end() && it->x_mask == x_mask && it->z_mask == z_mask) {
    return it->coefficient;
  }
  return {};
}

cplx PauliSum::coefficient(std::string_view msb_letters) const {
  if (static_cast<int>(msb_letters.size()) != n_qubits_) {
    throw InputError("string length does not match register");
  }
  const auto t = PauliTerm::from_msb_string(msb_letters);
  return coefficient(t.x_mask, t.z_mask);
}

std::size_t PauliSum::nontrivial_count() const {
  return static_cast<std::size_t>(std::count_if(
      terms_.begin(), terms_.end(),
      [](const PauliTerm& t) { return !t.is_identity(); }));
}

double PauliSum::one_norm() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coefficient);
  return s;
}

double PauliSum::max_imag() const {
  double worst = 0.0;
  for (const auto& t : terms_) worst = std::max(worst, std::abs(t.coefficient.imag()));
  return worst;
}

PauliSum PauliSum::scaled(cplx factor) const {
  std::vector<PauliTerm> terms = terms_;
  for (auto& t : terms) t.coefficient *= factor;
  return from_terms(n_qubits_, std::move(terms));
}

PauliSum operator+(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits_ != b.n_qubits_) throw InputError("Pauli register mismatch");
  std::vector<PauliTerm> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return PauliSum::from_terms(a.n_qubits_, std::move(terms));
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits_ != b.n_qubits_) throw InputError("Pauli register mismatch");
  std::vector<PauliTerm> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) terms.push_back(ta * tb);
  }
  return PauliSum::from_terms(a.n_qubits_, std::move(terms));
}

SparseOperator reconstruct(const PauliSum& sum) {
  const std::uint64_t dim = std::uint64_t{1} << sum.n_qubits();
  std::vector<Entry> entries;
  entries.reserve(sum.size() * dim);
  for (const auto& t : sum.terms()) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      entries.push_back({c ^ t.x_mask, c, t.coefficient * t.phase_for_column(c)});
    }
  }
  return SparseOperator::from_entries(dim, std::move(entries));
}

std::size_t count_strings(const PauliSum& sum, double tol) {
  if (tol < 0.0) throw InputError("tolerance must be nonnegative");
  return static_cast<std::size_t>(
      std::count_if(sum.terms().begin(), sum.terms().end(),
                    [tol](const PauliTerm& t) { return std::abs(t.coefficient) > tol; }));
}

StringCensus string_census(const PauliSum& sum) {
  StringCensus census;
  for (const auto& t : sum.terms()) {
    auto& stats = census[t.weight()];
    ++stats.strings;
    const int ys = std::popcount(t.x_mask & t.z_mask);
    const int xs = std::popcount(t.x_mask & ~t.z_mask);
    const int zs = std::popcount(t.z_mask & ~t.x_mask);
    stats.x_letters += static_cast<std::size_t>(xs);
    stats.y_letters += static_cast<std::size_t>(ys);
    stats.z_letters += static_cast<std::size_t>(zs);
    if (ys % 2 == 0) ++stats.even_y_strings;
    if (zs == 0) ++stats.xy_only_strings;
  }
  return census;
}

std::string census_summary(const StringCensus& census) {
  std::string out;
  for (const auto& [length, stats] : census) {
    if (!out.empty()) out += ';';
    out += std::to_string(length) + ':' + std::to_string(stats.strings);
  }
  return out;
}

void write_pauli_sum(std::ostream& os, const PauliSum& sum) {
  os << "# n_qubits " << sum.n_qubits() << " ordering msb-left\n";
  char buf[96];
  for (const auto& t : sum.terms()) {
    std::snprintf(buf, sizeof buf, " %.17g %.17g\n", t.coefficient.real(),
                  t.coefficient.imag());
    os << t.msb_string() << buf;
  }
}

PauliSum read_pauli_sum(std::istream& is) {
  std::string line;
  int n_qubits = -1;
  std::vector<PauliTerm> terms;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == '#') {
      std::string tag, key, ordering_key, ordering;
      ls >> tag >> key >> n_qubits >> ordering_key >> ordering;
      if (key != "n_qubits" || !ls || ordering != "msb-left") {
        throw InputError("line " + std::to_string(line_no) +
                         ": malformed Pauli sum header");
      }
      continue;
    }
    std::string letters;
    double re = 0.0, im = 0.0;
    if (!(ls >> letters >> re >> im) || n_qubits < 0 ||
        static_cast<int>(letters.size()) != n_qubits) {
      throw InputError("line " + std::to_string(line_no) +
                       ": malformed Pauli term");
    }
    terms.push_back(PauliTerm::from_msb_string(letters, {re, im}));
  }
  if (n_qubits < 0) throw InputError("missing Pauli sum header");
  return PauliSum::from_terms(n_qubits, std::move(terms), 0.0);
}

}  // namespace bosonq
