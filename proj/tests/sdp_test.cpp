// Copyright 2026 The stochan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "stochan/sdp.hpp"

#include <gtest/gtest.h>

#include "stochan/diamond.hpp"
#include "stochan/random.hpp"

using namespace stochan;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

// min <C, X> s.t. tr X = 1: optimum is the smallest eigenvalue of C.
sdp::Problem min_eigenvalue_problem(const MatrixXd& c) {
  const int n = int(c.rows());
  sdp::Problem p;
  p.block_sizes = {n};
  p.c = {c};
  sdp::SparseSymmetric a(1);
  for (int i = 0; i < n; ++i) a.add_symmetric(0, i, i, 1.0);
  p.a = {a};
  p.b = VectorXd::Ones(1);
  return p;
}

}  // namespace

TEST(sdp, smallest_eigenvalue) {
  Rng rng = make_rng(51);
  std::normal_distribution<double> g;
  MatrixXd m(6, 6);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) m(i, j) = g(rng);
  }
  const MatrixXd c = m + m.transpose();
  const sdp::Solution s = sdp::solve(min_eigenvalue_problem(c));
  ASSERT_TRUE(s.converged) << s.status;
  const double expected = Eigen::SelfAdjointEigenSolver<MatrixXd>(c).eigenvalues()(0);
  EXPECT_NEAR(s.primal_objective, expected, 1e-7);
  EXPECT_NEAR(s.dual_objective, expected, 1e-7);
}

TEST(sdp, linear_program_in_diagonal_blocks) {
  // min x1 + 2 x2 s.t. x1 + x2 = 1, x >= 0.
  sdp::Problem p;
  p.block_sizes = {1, 1};
  p.c = {MatrixXd::Constant(1, 1, 1.0), MatrixXd::Constant(1, 1, 2.0)};
  sdp::SparseSymmetric a(2);
  a.add_symmetric(0, 0, 0, 1.0);
  a.add_symmetric(1, 0, 0, 1.0);
  p.a = {a};
  p.b = VectorXd::Ones(1);
  const sdp::Solution s = sdp::solve(p);
  ASSERT_TRUE(s.converged) << s.status;
  EXPECT_NEAR(s.primal_objective, 1.0, 1e-7);
  EXPECT_NEAR(s.x[0](0, 0), 1.0, 1e-6);
  EXPECT_NEAR(s.x[1](0, 0), 0.0, 1e-6);
}

TEST(sdp, unit_diagonal_correlation) {
  // min 2 X_01 s.t. X_00 = X_11 = 1: X_01 = -1.
  sdp::Problem p;
  p.block_sizes = {2};
  MatrixXd c(2, 2);
  c << 0, 1,
       1, 0;
  p.c = {c};
  sdp::SparseSymmetric a0(1);
  a0.add_symmetric(0, 0, 0, 1.0);
  sdp::SparseSymmetric a1(1);
  a1.add_symmetric(0, 1, 1, 1.0);
  p.a = {a0, a1};
  p.b = VectorXd::Ones(2);
  const sdp::Solution s = sdp::solve(p);
  ASSERT_TRUE(s.converged) << s.status;
  EXPECT_NEAR(s.primal_objective, -2.0, 1e-7);
  EXPECT_LE(s.primal_infeasibility, 1e-9);
  EXPECT_LE(s.dual_infeasibility, 1e-9);
}

TEST(sdp, schur_complement_parallel_matches_serial) {
  Rng rng = make_rng(52);
  const sdp::Problem p = build_watrous_sdp(SdpProblem::for_channel(random_channel(3, rng)));
  std::normal_distribution<double> g;
  sdp::BlockMatrix x;
  sdp::BlockMatrix w;
  for (const int n : p.block_sizes) {
    MatrixXd a(n, n);
    MatrixXd b(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        a(i, j) = g(rng);
        b(i, j) = g(rng);
      }
    }
    x.push_back(a * a.transpose());
    w.push_back(b * b.transpose());
  }
  const MatrixXd par = sdp::schur_complement(p, x, w);
  const MatrixXd ser = sdp::schur_complement_serial(p, x, w);
  EXPECT_EQ(par, ser);
  // Spot-check one entry against tr(A_i X A_j W) with dense matrices.
  const auto dense = [&](size_t i) {
    VectorXd e = VectorXd::Zero(long(p.a.size()));
    e(long(i)) = 1.0;
    return sdp::adjoint_map(p, e);
  };
  const sdp::BlockMatrix a3 = dense(3);
  const sdp::BlockMatrix a7 = dense(7);
  double expected = 0.0;
  for (size_t k = 0; k < x.size(); ++k) expected += (a3[k] * x[k] * a7[k] * w[k]).trace();
  EXPECT_NEAR(par(3, 7), expected, 1e-9 * (1.0 + std::abs(expected)));
}

TEST(sdp, validate_rejects_inconsistent_problems) {
  sdp::Problem p = min_eigenvalue_problem(MatrixXd::Identity(2, 2));
  p.b = VectorXd::Ones(2);
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = min_eigenvalue_problem(MatrixXd::Identity(2, 2));
  p.a[0].blocks[0].push_back({5, 0, 1.0});
  EXPECT_THROW(p.validate(), std::invalid_argument);
}
