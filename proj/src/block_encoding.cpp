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

#include "bosonq/block_encoding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "bosonq/errors.hpp"

namespace bosonq {

std::size_t LcuPlan::count(TermTag tag) const {
  return static_cast<std::size_t>(std::count_if(
      terms.begin(), terms.end(), [tag](const LcuTerm& t) { return t.tag == tag; }));
}

LcuPlan build_plan(const PauliSum& potential, const PauliSum& kinetic) {
  if (potential.n_qubits() != kinetic.n_qubits()) {
    throw InputError("potential and kinetic sums act on different registers");
  }
  LcuPlan plan;
  plan.system_qubits = potential.n_qubits();
  auto add_terms = [&plan](const PauliSum& sum, TermTag tag) {
    for (const auto& t : sum.terms()) {
      if (std::abs(t.coefficient.imag()) > 1e-12) {
        throw InputError("LCU terms need real coefficients");
      }
      const double c = t.coefficient.real();
      PauliTerm unit = t;
      unit.coefficient = 1.0;
      plan.terms.push_back({unit, tag, std::abs(c), c < 0 ? -1 : 1});
      plan.lambda += std::abs(c);
    }
  };
  add_terms(potential, TermTag::Potential);
  add_terms(kinetic, TermTag::Kinetic);
  if (plan.terms.empty() || plan.lambda == 0.0) {
    throw InputError("cannot block-encode an empty Hamiltonian");
  }
  const std::size_t n = plan.terms.size();
  plan.ancilla_qubits = n <= 1 ? 0 : std::bit_width(n - 1);
  plan.amplitudes.assign(std::size_t{1} << plan.ancilla_qubits, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    plan.amplitudes[i] = std::sqrt(plan.terms[i].weight / plan.lambda);
  }
  return plan;
}

Eigen::MatrixXd prepare_g(const LcuPlan& plan) {
  const auto dim = static_cast<Eigen::Index>(plan.amplitudes.size());
  Eigen::VectorXd g(dim);
  for (Eigen::Index i = 0; i < dim; ++i) g(i) = plan.amplitudes[i];
  if (std::abs(g.squaredNorm() - 1.0) > 1e-12) {
    throw InputError("LCU amplitudes are not normalized");
  }
  Eigen::VectorXd v = -g;
  v(0) += 1.0;  // e0 - g
  const double vv = v.squaredNorm();
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(dim, dim);
  if (vv > 1e-30) h -= 2.0 * v * v.transpose() / vv;
  return h;
}

SparseOperator build_select(const LcuPlan& plan,
                            const std::optional<SparseOperator>& transform) {
  const std::uint64_t sys_dim = std::uint64_t{1} << plan.system_qubits;
  const std::uint64_t branches = std::uint64_t{1} << plan.ancilla_qubits;
  const std::uint64_t dim = branches * sys_dim;
  if (plan.count(TermTag::Kinetic) > 0 && !transform) {
    throw InputError("kinetic LCU terms need the momentum transform");
  }
  if (transform && transform->dimension() != sys_dim) {
    throw InputError("momentum transform does not match the system register");
  }

  std::vector<Entry> pot, kin;
  auto add_branch = [sys_dim](std::vector<Entry>& out, std::uint64_t branch,
                              const PauliTerm* string, int sign) {
    const std::uint64_t base = branch * sys_dim;
    for (std::uint64_t c = 0; c < sys_dim; ++c) {
      if (string == nullptr) {
        out.push_back({base + c, base + c, 1.0});
      } else {
        out.push_back({base + (c ^ string->x_mask), base + c,
                       static_cast<double>(sign) * string->phase_for_column(c)});
      }
    }
  };
  for (std::uint64_t b = 0; b < branches; ++b) {
    const LcuTerm* term = b < plan.terms.size() ? &plan.terms[b] : nullptr;
    const bool is_pot = term && term->tag == TermTag::Potential;
    const bool is_kin = term && term->tag == TermTag::Kinetic;
    add_branch(pot, b, is_pot ? &term->string : nullptr, is_pot ? term->sign : 1);
    add_branch(kin, b, is_kin ? &term->string : nullptr, is_kin ? term->sign : 1);
  }
  const auto u_pot = SparseOperator::from_entries(dim, std::move(pot));
  const auto u_kin = SparseOperator::from_entries(dim, std::move(kin));
  if (!transform) return u_kin * u_pot;
  const auto lift = kron(SparseOperator::identity(branches), *transform);
  return lift.adjoint() * u_kin * lift * u_pot;
}

BlockEncoding build_block_encoding(const PauliSum& potential,
                                   const PauliSum& kinetic,
                                   const std::optional<SparseOperator>& transform) {
  auto plan = build_plan(potential, kinetic);
  auto prepare = prepare_g(plan);
  auto select = build_select(plan, transform);
  return {std::move(plan), std::move(prepare), std::move(select)};
}

BlockEncoding build_block_encoding(const TruncationConfig& config,
                                   const PauliSum& potential,
                                   const PauliSum& kinetic) {
  return build_block_encoding(potential, kinetic, momentum_transform(config));
}

double verify_block_encoding(const BlockEncoding& be, const SparseOperator& h) {
  const int sys = be.plan.system_qubits;
  const int total = sys + be.plan.ancilla_qubits;
  if (total > 14) {
    throw CapExceeded("block-encoding verification limited to 14 qubits");
  }
  const std::uint64_t sys_dim = std::uint64_t{1} << sys;
  if (h.dimension() != sys_dim || be.select.dimension() != (sys_dim << be.plan.ancilla_qubits)) {
    throw InputError("block encoding and Hamiltonian dimensions differ");
  }
  // |G> = prepare |0>
  const Eigen::VectorXd g = be.prepare.col(0);
  std::vector<Entry> block;
  block.reserve(be.select.nonzeros());
  for (const auto& e : be.select.entries()) {
    const auto ar = static_cast<Eigen::Index>(e.row / sys_dim);
    const auto ac = static_cast<Eigen::Index>(e.col / sys_dim);
    const double w = g(ar) * g(ac);
    if (w != 0.0) block.push_back({e.row % sys_dim, e.col % sys_dim, w * e.value});
  }
  const auto projected = SparseOperator::from_entries(sys_dim, std::move(block));
  return max_abs_diff(projected, h.scaled(1.0 / be.plan.lambda));
}

double unitarity_error(const SparseOperator& u) {
  return max_abs_diff(u.adjoint() * u, SparseOperator::identity(u.dimension()));
}

}  // namespace bosonq
