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

#include "bosonq/decompose.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "bosonq/errors.hpp"

namespace bosonq {

namespace {

int checked_qubits(const SparseOperator& m, int cap) {
  const int n = log2_exact(m.dimension());
  if (n < 0) {
    throw InputError("dimension " + std::to_string(m.dimension()) +
                     " is not a power of two");
  }
  if (n > cap) {
    throw CapExceeded("decomposition of " + std::to_string(n) +
                      " qubits exceeds cap of " + std::to_string(cap));
  }
  return n;
}

struct LocalEntry {
  std::uint64_t row;
  std::uint64_t col;
  cplx value;
};

bool local_less(const LocalEntry& a, const LocalEntry& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

// Sums duplicates in place; exact zeros are dropped so that structurally
// cancelling branches terminate early.
void merge_sorted(std::vector<LocalEntry>& v) {
  std::sort(v.begin(), v.end(), local_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    LocalEntry acc = v[i];
    std::size_t j = i + 1;
    for (; j < v.size() && v[j].row == acc.row && v[j].col == acc.col; ++j) {
      acc.value += v[j].value;
    }
    if (acc.value != cplx{}) v[out++] = acc;
    i = j;
  }
  v.resize(out);
}

class QuadrantRecursion {
 public:
  explicit QuadrantRecursion(int n_qubits) : n_(n_qubits) {}

  void run(std::vector<LocalEntry> block, int level, std::uint64_t x_mask,
           std::uint64_t z_mask) {
    if (block.empty()) return;
    if (level == 0) {
      terms_.push_back({n_, x_mask, z_mask, block.front().value});
      return;
    }
    const int qubit = level - 1;
    const std::uint64_t half = std::uint64_t{1} << qubit;
    const std::uint64_t bit = half;
    std::vector<LocalEntry> id, xs, ys, zs;
    for (const auto& e : block) {
      const bool top = e.row < half;
      const bool left = e.col < half;
      const LocalEntry local{e.row & (half - 1), e.col & (half - 1), e.value * 0.5};
      if (top == left) {
        // A (top-left) or D (bottom-right).
        id.push_back(local);
        zs.push_back(top ? local : LocalEntry{local.row, local.col, -local.value});
      } else {
        // B (top-right) or C (bottom-left).
        xs.push_back(local);
        const cplx iv = cplx{0.0, 1.0} * local.value;
        ys.push_back({local.row, local.col, top ? iv : -iv});
      }
    }
    block.clear();
    block.shrink_to_fit();
    merge_sorted(id);
    merge_sorted(xs);
    merge_sorted(ys);
    merge_sorted(zs);
    run(std::move(id), level - 1, x_mask, z_mask);
    run(std::move(xs), level - 1, x_mask | bit, z_mask);
    run(std::move(ys), level - 1, x_mask | bit, z_mask | bit);
    run(std::move(zs), level - 1, x_mask, z_mask | bit);
  }

  std::vector<PauliTerm> take() { return std::move(terms_); }

 private:
  int n_;
  std::vector<PauliTerm> terms_;
};

}  // namespace

PauliSum decompose_trace(const SparseOperator& m,
                         const DecomposeOptions& options) {
  const int n = checked_qubits(m, options.trace_max_qubits);
  const std::uint64_t dim = m.dimension();
  const std::uint64_t strings = dim * dim;
  // coefficients indexed by x_mask * dim + z_mask
  std::vector<cplx> coeffs(strings);
  const double norm = 1.0 / static_cast<double>(dim);
  for (const auto& e : m.entries()) {
    const std::uint64_t x = e.row ^ e.col;
    for (std::uint64_t z = 0; z < dim; ++z) {
      PauliTerm p{n, x, z, 1.0};
      // conj(P[r, c]) * M[r, c]
      coeffs[x * dim + z] += std::conj(p.phase_for_column(e.col)) * e.value;
    }
  }
  std::vector<PauliTerm> terms;
  for (std::uint64_t k = 0; k < strings; ++k) {
    if (coeffs[k] != cplx{}) {
      terms.push_back({n, k / dim, k % dim, coeffs[k] * norm});
    }
  }
  return PauliSum::from_terms(n, std::move(terms), options.rel_tol);
}

PauliSum decompose_tensorized(const SparseOperator& m,
                              const DecomposeOptions& options) {
  const int n = checked_qubits(m, options.tensorized_max_qubits);
  std::vector<LocalEntry> block;
  block.reserve(m.nonzeros());
  for (const auto& e : m.entries()) block.push_back({e.row, e.col, e.value});
  QuadrantRecursion recursion(n);
  recursion.run(std::move(block), n, 0, 0);
  return PauliSum::from_terms(n, recursion.take(), options.rel_tol);
}

}  // namespace bosonq
