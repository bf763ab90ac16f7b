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

#include "bosonq/scaling.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "bosonq/errors.hpp"

namespace bosonq {

ScalingSeries& ScalingSeries::add(int qubits, std::uint64_t n_pauli) {
  if (qubits < 1) throw InputError("Q must be positive");
  if (n_pauli < 1) throw InputError("N_Pauli must be >= 1");
  if (!rows_.empty() && qubits <= rows_.back().qubits) {
    throw InputError("Q must be strictly increasing");
  }
  rows_.push_back({qubits, n_pauli,
                   std::log(static_cast<double>(n_pauli)) / qubits});
  return *this;
}

ScalingSeries& ScalingSeries::add_y(int qubits, double y) {
  if (qubits < 1) throw InputError("Q must be positive");
  if (!std::isfinite(y) || y < 0.0) throw InputError("y must be finite and >= 0");
  if (!rows_.empty() && qubits <= rows_.back().qubits) {
    throw InputError("Q must be strictly increasing");
  }
  const double n = std::exp(y * qubits);
  const auto rounded = n < 1.8e19 ? static_cast<std::uint64_t>(std::llround(n)) : 0;
  rows_.push_back({qubits, std::max<std::uint64_t>(rounded, 1), y});
  return *this;
}

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

double det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Inverse via the adjugate.
Mat3 inverse3(const Mat3& m, double det) {
  Mat3 inv{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
    }
  }
  return inv;
}

}  // namespace

FitResult fit_scaling(const ScalingSeries& series) {
  const auto& rows = series.rows();
  if (rows.size() < 4) throw InputError("fit needs at least 4 rows");
  std::set<int> distinct;
  for (const auto& r : rows) distinct.insert(r.qubits);
  if (distinct.size() < 3) {
    throw InputError("rank-deficient design: fewer than 3 distinct Q");
  }

  Mat3 xtx{};
  std::array<double, 3> xty{};
  std::vector<std::array<double, 3>> design;
  for (const auto& r : rows) {
    const double q = r.qubits;
    const std::array<double, 3> x{1.0, 1.0 / q, std::log(q) / q};
    design.push_back(x);
    for (int i = 0; i < 3; ++i) {
      xty[i] += x[i] * r.y;
      for (int j = 0; j < 3; ++j) xtx[i][j] += x[i] * x[j];
    }
  }
  const double det = det3(xtx);
  if (det == 0.0 || !std::isfinite(det)) {
    throw InputError("rank-deficient design matrix");
  }
  const Mat3 inv = inverse3(xtx, det);
  std::array<double, 3> beta{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) beta[i] += inv[i][j] * xty[j];
  }

  FitResult fit;
  fit.a = beta[0];
  fit.b = beta[1];
  fit.c = beta[2];
  fit.rows = rows.size();
  double ss = 0.0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& x = design[k];
    const double pred = beta[0] * x[0] + beta[1] * x[1] + beta[2] * x[2];
    ss += (rows[k].y - pred) * (rows[k].y - pred);
  }
  fit.residual_rms = std::sqrt(ss / static_cast<double>(rows.size()));
  const double dof = static_cast<double>(rows.size()) - 3.0;
  const double sigma2 = ss / dof;
  for (int i = 0; i < 3; ++i) fit.std_errors[i] = std::sqrt(sigma2 * inv[i][i]);

  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = xtx[i][j];
  }
  const Eigen::Vector3d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(m).eigenvalues();
  fit.normal_condition = ev.maxCoeff() / ev.minCoeff();
  return fit;
}

namespace {

template <typename T>
T parse_cell(const std::string& text) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InputError("cannot parse '" + text + "'");
  }
  return value;
}

}  // namespace

ScalingSeries read_series_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw InputError("empty series CSV");
  std::vector<std::string> header;
  {
    std::istringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) header.push_back(cell);
  }
  auto find = [&](const std::string& name) {
    return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) -
                                    header.begin());
  };
  const std::size_t q_col = find("Q");
  if (q_col == header.size()) throw InputError("line 1: series CSV lacks a 'Q' column");
  // An n_pauli column wins; a bare y column is accepted for synthetic data.
  bool use_y = false;
  std::size_t n_col = find("n_pauli");
  if (n_col == header.size()) {
    n_col = find("y");
    use_y = true;
    if (n_col == header.size()) {
      throw InputError("line 1: series CSV needs an 'n_pauli' or 'y' column");
    }
  }
  ScalingSeries series;
  int line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    try {
      if (cells.size() <= std::max(q_col, n_col)) throw InputError("missing cells");
      if (use_y) {
        series.add_y(parse_cell<int>(cells[q_col]), parse_cell<double>(cells[n_col]));
      } else {
        series.add(parse_cell<int>(cells[q_col]),
                   parse_cell<std::uint64_t>(cells[n_col]));
      }
    } catch (const std::exception& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return series;
}

}  // namespace bosonq
