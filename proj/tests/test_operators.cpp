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
#include <numbers>

#include "bosonq/errors.hpp"
#include "bosonq/operators.hpp"
#include "oracles.hpp"

using namespace bosonq;

TEST(TruncationConfig, DerivedQuantities) {
  for (int q = 1; q <= 10; ++q) {
    for (double r : {0.3, 1.0, 2.5, 17.0}) {
      const TruncationConfig c(2, q, r);
      EXPECT_EQ(c.cutoff(), std::uint64_t{1} << q);
      EXPECT_NEAR(c.dx() * c.dp() * static_cast<double>(c.cutoff()),
                  2.0 * std::numbers::pi, 1e-12);
    }
  }
}

TEST(TruncationConfig, RejectsInvalidInput) {
  EXPECT_THROW(TruncationConfig(0, 2, 1.0), InputError);
  EXPECT_THROW(TruncationConfig(1, 0, 1.0), InputError);
  EXPECT_THROW(TruncationConfig(1, 2, 0.0), InputError);
  EXPECT_THROW(TruncationConfig(1, 2, -1.0), InputError);
  EXPECT_THROW(TruncationConfig(1, 2, 1.0).qubit_offset(1), InputError);
}

TEST(CoordinateGrid, Examples) {
  auto g1 = coordinate_grid(TruncationConfig(1, 1, 1.0));
  ASSERT_EQ(g1.size(), 2u);
  EXPECT_DOUBLE_EQ(g1[0].value, -0.5);
  EXPECT_DOUBLE_EQ(g1[1].value, 0.5);

  auto g2 = coordinate_grid(TruncationConfig(1, 2, 2.0));
  const double want2[] = {-1.5, -0.5, 0.5, 1.5};
  for (int i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(g2[i].value, want2[i]);

  auto g3 = coordinate_grid(TruncationConfig(1, 3, 4.0));
  const double want3[] = {-3.5, -2.5, -1.5, -0.5, 0.5, 1.5, 2.5, 3.5};
  for (int i = 0; i < 8; ++i) EXPECT_DOUBLE_EQ(g3[i].value, want3[i]);
}

TEST(CoordinateGrid, MirrorSymmetry) {
  for (int q = 1; q <= 8; ++q) {
    const auto g = coordinate_grid(TruncationConfig(1, q, 3.7));
    const auto n = g.size();
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(g[i].value, -g[n - 1 - i].value, 1e-12);
    }
    EXPECT_NEAR(g[n / 2].value, 3.7 * 2 / n / 2, 1e-12);
  }
}

TEST(PositionZsum, SingleQubit) {
  const auto s = position_zsum(TruncationConfig(1, 1, 1.0), 0);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.coefficient("Z"), cplx(-0.5));
  const auto m = reconstruct(s);
  EXPECT_EQ(m.at(0, 0), cplx(-0.5));
  EXPECT_EQ(m.at(1, 1), cplx(0.5));
}

TEST(PositionZsum, TwoQubitsMatchesGrid) {
  // dx = 1 at Q = 2, R = 2; Z eigenvalue 1 - 2b per qubit, n = b1 + 2 b2.
  const auto s = position_zsum(TruncationConfig(1, 2, 2.0), 0);
  EXPECT_EQ(s.coefficient("IZ"), cplx(-0.5));
  EXPECT_EQ(s.coefficient("ZI"), cplx(-1.0));
  const auto m = reconstruct(s);
  const double want[] = {-1.5, -0.5, 0.5, 1.5};
  for (int n = 0; n < 4; ++n) EXPECT_DOUBLE_EQ(m.at(n, n).real(), want[n]);
}

TEST(PositionZsum, ThreeQubitWeights) {
  const auto s = position_zsum(TruncationConfig(1, 3, 4.0), 0);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.coefficient("IIZ"), cplx(-0.5));
  EXPECT_EQ(s.coefficient("IZI"), cplx(-1.0));
  EXPECT_EQ(s.coefficient("ZII"), cplx(-2.0));
}

TEST(PositionZsum, EqualsGridDiagonalUpToSixQubits) {
  for (int q = 1; q <= 6; ++q) {
    const TruncationConfig c(1, q, 1.3);
    const auto m = reconstruct(position_zsum(c, 0));
    const auto grid = coordinate_grid(c);
    ASSERT_TRUE(m.is_diagonal());
    for (const auto& p : grid) EXPECT_NEAR(m.at(p.index, p.index).real(), p.value, 1e-12);
  }
}

TEST(PositionZsum, SecondBosonActsOnItsOwnRegister) {
  const auto s = position_zsum(TruncationConfig(2, 2, 2.0), 1);
  EXPECT_EQ(s.coefficient("IZII"), cplx(-0.5));
  EXPECT_EQ(s.coefficient("ZIII"), cplx(-1.0));
  EXPECT_THROW(position_zsum(TruncationConfig(2, 2, 2.0), 2), InputError);
}

TEST(MomentumZsum, Examples) {
  const auto s = momentum_zsum(TruncationConfig(1, 1, 1.0), 0);
  EXPECT_NEAR(s.coefficient("Z").real(), -std::numbers::pi / 2, 1e-15);

  // dp = 1 at R = pi.
  const auto m = reconstruct(momentum_zsum(TruncationConfig(1, 2, std::numbers::pi), 0));
  const double want[] = {-1.5, -0.5, 0.5, 1.5};
  for (int n = 0; n < 4; ++n) EXPECT_NEAR(m.at(n, n).real(), want[n], 1e-15);
}

TEST(MomentumZsum, SquareHasQChooseTwoZZStrings) {
  for (int q = 2; q <= 8; ++q) {
    const auto p = momentum_zsum(TruncationConfig(1, q, 1.0), 0);
    const auto p2 = p * p;
    const auto census = string_census(p2);
    EXPECT_EQ(census.at(2).strings, static_cast<std::size_t>(q * (q - 1) / 2));
    EXPECT_EQ(census.count(1), 0u);
    EXPECT_EQ(census.at(0).strings, 1u);
  }
}

TEST(ShiftMatrix, Examples) {
  const auto s1 = shift_matrix(1);
  EXPECT_EQ(s1.at(0, 1), cplx(1.0));
  EXPECT_EQ(s1.at(1, 0), cplx(1.0));
  EXPECT_EQ(s1.nonzeros(), 2u);

  const auto s2 = shift_matrix(2);
  EXPECT_EQ(s2.nonzeros(), 6u);
  EXPECT_LT(max_abs_diff(s2.to_dense(), oracle::shift(2)), 1e-15);

  const auto s2p = shift_matrix(2, true);
  EXPECT_EQ(s2p.nonzeros(), 8u);
  EXPECT_EQ(s2p.at(0, 3), cplx(1.0));
  EXPECT_EQ(s2p.at(3, 0), cplx(1.0));
}

TEST(ShiftMatrix, BlockRecursion) {
  // S_{Q+1} = [[S_Q, |L-1><0|], [|0><L-1|, S_Q]] with L = 2^Q.
  for (int q = 1; q <= 6; ++q) {
    const auto big = shift_matrix(q + 1).to_dense();
    const auto small = shift_matrix(q).to_dense();
    const Eigen::Index L = small.rows();
    EXPECT_LT(max_abs_diff(big.topLeftCorner(L, L), small), 1e-15);
    EXPECT_LT(max_abs_diff(big.bottomRightCorner(L, L), small), 1e-15);
    DenseMatrix corner = DenseMatrix::Zero(L, L);
    corner(L - 1, 0) = 1.0;
    EXPECT_LT(max_abs_diff(big.topRightCorner(L, L), corner), 1e-15);
    EXPECT_LT(max_abs_diff(big.bottomLeftCorner(L, L), corner.adjoint()), 1e-15);
  }
}

TEST(FiniteDifference, SingleQubit) {
  const auto p2 = finite_difference_p2(1, 0.5);
  EXPECT_EQ(p2.at(0, 0), cplx(8.0));
  EXPECT_EQ(p2.at(0, 1), cplx(-4.0));
}

TEST(FockLadder, Examples) {
  const auto a2 = fock_ladder(2);
  EXPECT_EQ(a2.nonzeros(), 1u);
  EXPECT_EQ(a2.at(1, 0), cplx(1.0));

  const auto a4 = fock_ladder(4);
  for (int j = 0; j < 3; ++j) {
    EXPECT_DOUBLE_EQ(a4.at(j + 1, j).real(), std::sqrt(j + 1.0));
  }
  EXPECT_THROW(fock_ladder(1), InputError);
}

TEST(FockLadder, NumberOperatorBelowCutoff) {
  const std::uint64_t cutoff = 16;
  const auto up = fock_ladder(cutoff);
  const auto aad = up.adjoint() * up;  // A A^dag
  for (std::uint64_t j = 0; j + 1 < cutoff; ++j) {
    EXPECT_NEAR(aad.at(j, j).real(), static_cast<double>(j + 1), 1e-12);
  }
}

TEST(FockXP, TwoLevelReduction) {
  const double s = 1.0 / std::sqrt(2.0);
  const auto x = fock_x(2).to_dense();
  EXPECT_NEAR(std::abs(x(0, 1) - s), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(x(1, 0) - s), 0.0, 1e-15);
  // p = i sqrt(1/2) (A^dag - A) = sqrt(1/2) sigma_y
  const auto p = fock_p(2).to_dense();
  const auto sy = oracle::pauli2('Y');
  EXPECT_LT(max_abs_diff(p, s * sy), 1e-15);
}

TEST(FockXP, OffDiagonalMagnitudes) {
  const auto x = fock_x(4, {0.5, 1.0});  // 1/sqrt(2 m w) = 1
  for (int j = 0; j < 3; ++j) {
    EXPECT_NEAR(x.at(j, j + 1).real(), std::sqrt(j + 1.0), 1e-15);
    EXPECT_NEAR(x.at(j + 1, j).real(), std::sqrt(j + 1.0), 1e-15);
  }
}

TEST(FockXP, HermitianAndCanonicalBelowCutoff) {
  for (FockParams params : {FockParams{1.0, 1.0}, FockParams{0.7, 2.3}}) {
    const std::uint64_t cutoff = 32;
    const auto x = fock_x(cutoff, params);
    const auto p = fock_p(cutoff, params);
    EXPECT_EQ(x.hermiticity_error(), 0.0);
    EXPECT_EQ(p.hermiticity_error(), 0.0);
    const auto comm = (x * p - p * x).to_dense();
    for (Eigen::Index i = 0; i + 2 < static_cast<Eigen::Index>(cutoff); ++i) {
      for (Eigen::Index j = 0; j + 2 < static_cast<Eigen::Index>(cutoff); ++j) {
        const cplx want = i == j ? cplx(0, 1) : cplx(0);
        EXPECT_NEAR(std::abs(comm(i, j) - want), 0.0, 1e-12);
      }
    }
  }
  EXPECT_THROW(fock_x(4, {0.0, 1.0}), InputError);
}

TEST(MomentumKernel, MatchesGridFormula) {
  for (int q = 1; q <= 5; ++q) {
    const TruncationConfig c(1, q, 1.7);
    EXPECT_LT(max_abs_diff(momentum_kernel(c), oracle::centered_kernel(q, 1.7)), 1e-12);
  }
}
