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

#include "bosonq/sparse_operator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "bosonq/errors.hpp"

namespace bosonq {

namespace {

bool row_major_less(const Entry& a, const Entry& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

void check_same_dimension(const SparseOperator& a, const SparseOperator& b) {
  if (a.dimension() != b.dimension()) {
    throw InputError("operator dimension mismatch: " +
                     std::to_string(a.dimension()) + " vs " +
                     std::to_string(b.dimension()));
  }
}

}  // namespace

SparseOperator SparseOperator::from_entries(std::uint64_t dimension,
                                            std::vector<Entry> entries) {
  for (const auto& e : entries) {
    if (e.row >= dimension || e.col >= dimension) {
      throw InputError("entry (" + std::to_string(e.row) + ", " +
                       std::to_string(e.col) + ") outside dimension " +
                       std::to_string(dimension));
    }
  }
  std::stable_sort(entries.begin(), entries.end(), row_major_less);
  SparseOperator out(dimension);
  out.entries_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size();) {
    Entry merged = entries[i];
    std::size_t j = i + 1;
    for (; j < entries.size() && entries[j].row == merged.row &&
           entries[j].col == merged.col;
         ++j) {
      merged.value += entries[j].value;
    }
    if (std::abs(merged.value) > kPruneTolerance) out.entries_.push_back(merged);
    i = j;
  }
  return out;
}

SparseOperator SparseOperator::identity(std::uint64_t dimension) {
  SparseOperator out(dimension);
  out.entries_.reserve(dimension);
  for (std::uint64_t i = 0; i < dimension; ++i) {
    out.entries_.push_back({i, i, cplx{1.0, 0.0}});
  }
  return out;
}

SparseOperator SparseOperator::from_dense(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("matrix is not square");
  std::vector<Entry> entries;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (std::abs(m(r, c)) > kPruneTolerance) {
        entries.push_back({static_cast<std::uint64_t>(r),
                           static_cast<std::uint64_t>(c), m(r, c)});
      }
    }
  }
  SparseOperator out(static_cast<std::uint64_t>(m.rows()));
  out.entries_ = std::move(entries);
  return out;
}

SparseOperator SparseOperator::diagonal(std::span<const cplx> values) {
  std::vector<Entry> entries;
  entries.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    entries.push_back({i, i, values[i]});
  }
  return from_entries(values.size(), std::move(entries));
}

cplx SparseOperator::at(std::uint64_t row, std::uint64_t col) const {
  const Entry key{row, col, {}};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             row_major_less);
  if (it != entries_.end() && it->row == row && it->col == col) {
    return it->value;
  }
  return {};
}

DenseMatrix SparseOperator::to_dense() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  DenseMatrix m = DenseMatrix::Zero(n, n);
  for (const auto& e : entries_) {
    m(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) =
        e.value;
  }
  return m;
}

SparseOperator SparseOperator::adjoint() const {
  std::vector<Entry> entries;
  entries.reserve(entries_.size());
  for (const auto& e : entries_) {
    entries.push_back({e.col, e.row, std::conj(e.value)});
  }
  std::sort(entries.begin(), entries.end(), row_major_less);
  SparseOperator out(dim_);
  out.entries_ = std::move(entries);
  out.hermitian_flag_ = hermitian_flag_;
  return out;
}

SparseOperator SparseOperator::scaled(cplx factor) const {
  std::vector<Entry> entries = entries_;
  for (auto& e : entries) e.value *= factor;
  return from_entries(dim_, std::move(entries));
}

double SparseOperator::hermiticity_error() const {
  double worst = 0.0;
  for (const auto& e : entries_) {
    worst = std::max(worst, std::abs(e.value - std::conj(at(e.col, e.row))));
  }
  return worst;
}

bool SparseOperator::is_diagonal() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.row == e.col; });
}

SparseOperator& SparseOperator::certify_hermitian() {
  const double err = hermiticity_error();
  if (err > 1e-12) {
    throw VerificationError("operator is not Hermitian: max|M - M^dag| = " +
                            std::to_string(err));
  }
  hermitian_flag_ = true;
  return *this;
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
  check_same_dimension(a, b);
  std::vector<Entry> entries = a.entries_;
  entries.insert(entries.end(), b.entries_.begin(), b.entries_.end());
  return SparseOperator::from_entries(a.dim_, std::move(entries));
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
  return a + b.scaled(-1.0);
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  check_same_dimension(a, b);
  const std::uint64_t n = a.dim_;
  // Row offsets of b (entries are row-major sorted).
  std::vector<std::size_t> offsets(n + 1, 0);
  for (const auto& e : b.entries_) ++offsets[e.row + 1];
  for (std::uint64_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];

  // Sparse accumulator over one output row at a time.
  std::vector<cplx> acc(n);
  std::vector<char> used(n, 0);
  std::vector<std::uint64_t> touched;
  std::vector<Entry> out;
  for (std::size_t i = 0; i < a.entries_.size();) {
    const std::uint64_t row = a.entries_[i].row;
    for (; i < a.entries_.size() && a.entries_[i].row == row; ++i) {
      const Entry& ea = a.entries_[i];
      for (std::size_t k = offsets[ea.col]; k < offsets[ea.col + 1]; ++k) {
        const Entry& eb = b.entries_[k];
        if (!used[eb.col]) {
          used[eb.col] = 1;
          touched.push_back(eb.col);
        }
        acc[eb.col] += ea.value * eb.value;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (auto col : touched) {
      out.push_back({row, col, acc[col]});
      acc[col] = {};
      used[col] = 0;
    }
    touched.clear();
  }
  return SparseOperator::from_entries(n, std::move(out));
}

SparseOperator kron(const SparseOperator& high, const SparseOperator& low) {
  const std::uint64_t dl = low.dimension();
  std::vector<Entry> entries;
  entries.reserve(high.nonzeros() * low.nonzeros());
  for (const auto& h : high.entries()) {
    for (const auto& l : low.entries()) {
      entries.push_back({h.row * dl + l.row, h.col * dl + l.col,
                         h.value * l.value});
    }
  }
  return SparseOperator::from_entries(high.dimension() * dl,
                                      std::move(entries));
}

SparseOperator embed(const SparseOperator& op, int offset_bits,
                     int total_bits) {
  const int width = log2_exact(op.dimension());
  if (width < 0 || offset_bits < 0 || offset_bits + width > total_bits) {
    throw InputError("cannot embed operator into register of " +
                     std::to_string(total_bits) + " qubits");
  }
  const auto below = SparseOperator::identity(std::uint64_t{1} << offset_bits);
  const auto above = SparseOperator::identity(
      std::uint64_t{1} << (total_bits - offset_bits - width));
  return kron(above, kron(op, below));
}

double max_abs_diff(const SparseOperator& a, const SparseOperator& b) {
  const auto diff = a - b;
  double worst = 0.0;
  for (const auto& e : diff.entries()) worst = std::max(worst, std::abs(e.value));
  return worst;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("matrix shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

int log2_exact(std::uint64_t dimension) {
  if (dimension == 0 || !std::has_single_bit(dimension)) return -1;
  return std::countr_zero(dimension);
}

}  // namespace bosonq
