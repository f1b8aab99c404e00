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

#ifndef STOCHAN_SDP_HPP
#define STOCHAN_SDP_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace stochan::sdp {

// Real block-diagonal semidefinite programs in the standard primal/dual pair
//
//   (P)  minimize   <C, X>        s.t.  <A_i, X> = b_i,  X >= 0
//   (D)  maximize   b^T y         s.t.  sum_i y_i A_i + Z = C,  Z >= 0
//
// solved by an infeasible primal-dual path-following method with the
// HKM search direction. Constraint matrices are sparse and symmetric.

using BlockMatrix = std::vector<Eigen::MatrixXd>;

struct Entry {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

/// One symmetric constraint matrix. Entries are stored in full (both (r, c)
/// and (c, r) for off-diagonal positions); use add_symmetric() to build.
struct SparseSymmetric {
  std::vector<std::vector<Entry>> blocks;  // one entry list per block

  explicit SparseSymmetric(size_t block_count = 0) : blocks(block_count) {}
  /// Adds `value` at (r, c) and, when r != c, at (c, r).
  void add_symmetric(size_t block, int r, int c, double value);
};

struct Problem {
  std::vector<int> block_sizes;
  BlockMatrix c;
  std::vector<SparseSymmetric> a;
  Eigen::VectorXd b;

  /// Throws std::invalid_argument on inconsistent sizes.
  void validate() const;
};

struct Options {
  int max_iterations = 200;
  double centering = 0.1;          // sigma in the target sigma * mu
  double feasibility_tol = 1e-9;   // relative primal and dual residuals
  double gap_tol = 1e-9;           // relative duality gap
  double step_fraction = 0.95;     // fraction of the distance to the boundary
};

struct Solution {
  BlockMatrix x;
  BlockMatrix z;
  Eigen::VectorXd y;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  double relative_gap = 0.0;
  int iterations = 0;
  bool converged = false;
  std::string status;
};

Solution solve(const Problem& problem, const Options& options = {});

/// Schur complement M_ij = tr(A_i X A_j W) with W = Z^{-1}. The parallel
/// kernel fills rows concurrently; the serial version is the reference.
/// Both evaluate every entry with the same arithmetic, so results match
/// bit for bit.
Eigen::MatrixXd schur_complement(const Problem& problem, const BlockMatrix& x,
                                 const BlockMatrix& w);
Eigen::MatrixXd schur_complement_serial(const Problem& problem,
                                        const BlockMatrix& x,
                                        const BlockMatrix& w);

/// <A, X> for a sparse symmetric A.
double inner(const SparseSymmetric& a, const BlockMatrix& x);

/// sum_i y_i A_i as dense blocks.
BlockMatrix adjoint_map(const Problem& problem, const Eigen::VectorXd& y);

}  // namespace stochan::sdp

#endif  // STOCHAN_SDP_HPP
