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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace stochan::sdp {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

double block_inner(const BlockMatrix& a, const BlockMatrix& b) {
  double s = 0.0;
  for (size_t k = 0; k < a.size(); ++k) s += a[k].cwiseProduct(b[k]).sum();
  return s;
}

double block_norm(const BlockMatrix& a) { return std::sqrt(block_inner(a, a)); }

double sparse_norm(const SparseSymmetric& a) {
  double s = 0.0;
  for (const auto& block : a.blocks) {
    for (const auto& e : block) s += e.value * e.value;
  }
  return std::sqrt(s);
}

BlockMatrix scaled_identity(const std::vector<int>& sizes, double scale) {
  BlockMatrix out;
  out.reserve(sizes.size());
  for (const int n : sizes) out.push_back(scale * MatrixXd::Identity(n, n));
  return out;
}

// Largest alpha with M + alpha * dM still PSD (infinity if unbounded).
double max_step(const BlockMatrix& m, const BlockMatrix& dm) {
  double step = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < m.size(); ++k) {
    Eigen::LLT<MatrixXd> llt(m[k]);
    if (llt.info() != Eigen::Success) return 0.0;
    MatrixXd t = llt.matrixL().solve(dm[k]);
    t = llt.matrixL().solve(t.transpose()).eval();
    t = 0.5 * (t + t.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(t, Eigen::EigenvaluesOnly);
    const double lowest = es.eigenvalues()(0);
    if (lowest < 0.0) step = std::min(step, -1.0 / lowest);
  }
  return step;
}

// Row i of M: G_i = X A_i W accumulated as rank-one updates, then
// M_ij = <A_j, G_i> for j >= i.
void schur_row(const Problem& p, const BlockMatrix& x, const BlockMatrix& w,
               size_t i, std::vector<MatrixXd>& scratch, MatrixXd& m) {
  const size_t blocks = p.block_sizes.size();
  for (size_t k = 0; k < blocks; ++k) {
    const auto& entries = p.a[i].blocks[k];
    if (entries.empty()) continue;
    MatrixXd& g = scratch[k];
    g.setZero();
    for (const auto& e : entries) {
      g.noalias() += e.value * x[k].col(e.row) * w[k].row(e.col);
    }
  }
  for (size_t j = i; j < p.a.size(); ++j) {
    double s = 0.0;
    for (size_t k = 0; k < blocks; ++k) {
      if (p.a[i].blocks[k].empty()) continue;
      for (const auto& e : p.a[j].blocks[k]) s += e.value * scratch[k](e.row, e.col);
    }
    m(long(i), long(j)) = s;
  }
}

void mirror_upper(MatrixXd& m) {
  for (long i = 0; i < m.rows(); ++i) {
    for (long j = 0; j < i; ++j) m(i, j) = m(j, i);
  }
}

std::vector<MatrixXd> make_scratch(const Problem& p) {
  std::vector<MatrixXd> scratch;
  for (const int n : p.block_sizes) scratch.emplace_back(n, n);
  return scratch;
}

}  // namespace

void SparseSymmetric::add_symmetric(size_t block, int r, int c, double value) {
  blocks.at(block).push_back({r, c, value});
  if (r != c) blocks.at(block).push_back({c, r, value});
}

void Problem::validate() const {
  const size_t blocks = block_sizes.size();
  if (blocks == 0) throw std::invalid_argument("sdp: no blocks");
  if (c.size() != blocks) throw std::invalid_argument("sdp: C block count");
  if (static_cast<size_t>(b.size()) != a.size()) {
    throw std::invalid_argument("sdp: b and A sizes differ");
  }
  for (size_t k = 0; k < blocks; ++k) {
    if (c[k].rows() != block_sizes[k] || c[k].cols() != block_sizes[k]) {
      throw std::invalid_argument("sdp: C block shape");
    }
  }
  for (const auto& ai : a) {
    if (ai.blocks.size() != blocks) {
      throw std::invalid_argument("sdp: constraint block count");
    }
    for (size_t k = 0; k < blocks; ++k) {
      for (const auto& e : ai.blocks[k]) {
        if (e.row < 0 || e.col < 0 || e.row >= block_sizes[k] ||
            e.col >= block_sizes[k]) {
          throw std::invalid_argument("sdp: constraint entry out of range");
        }
      }
    }
  }
}

double inner(const SparseSymmetric& a, const BlockMatrix& x) {
  double s = 0.0;
  for (size_t k = 0; k < a.blocks.size(); ++k) {
    for (const auto& e : a.blocks[k]) s += e.value * x[k](e.row, e.col);
  }
  return s;
}

BlockMatrix adjoint_map(const Problem& problem, const VectorXd& y) {
  BlockMatrix out = scaled_identity(problem.block_sizes, 0.0);
  for (size_t i = 0; i < problem.a.size(); ++i) {
    const double yi = y(long(i));
    if (yi == 0.0) continue;
    for (size_t k = 0; k < out.size(); ++k) {
      for (const auto& e : problem.a[i].blocks[k]) {
        out[k](e.row, e.col) += yi * e.value;
      }
    }
  }
  return out;
}

MatrixXd schur_complement(const Problem& problem, const BlockMatrix& x,
                          const BlockMatrix& w) {
  const auto m = static_cast<long>(problem.a.size());
  MatrixXd out(m, m);
#pragma omp parallel
  {
    std::vector<MatrixXd> scratch = make_scratch(problem);
#pragma omp for schedule(dynamic, 8)
    for (long i = 0; i < m; ++i) {
      schur_row(problem, x, w, size_t(i), scratch, out);
    }
  }
  mirror_upper(out);
  return out;
}

MatrixXd schur_complement_serial(const Problem& problem, const BlockMatrix& x,
                                 const BlockMatrix& w) {
  const auto m = static_cast<long>(problem.a.size());
  MatrixXd out(m, m);
  std::vector<MatrixXd> scratch = make_scratch(problem);
  for (long i = 0; i < m; ++i) schur_row(problem, x, w, size_t(i), scratch, out);
  mirror_upper(out);
  return out;
}

Solution solve(const Problem& problem, const Options& options) {
  problem.validate();
  const size_t blocks = problem.block_sizes.size();
  const auto m = static_cast<long>(problem.a.size());
  double n_total = 0.0;
  for (const int n : problem.block_sizes) n_total += n;

  // Starting point after CSDP's scaling heuristic.
  double a_max = 0.0;
  double alpha = 0.0;
  for (long i = 0; i < m; ++i) {
    const double norm = sparse_norm(problem.a[size_t(i)]);
    a_max = std::max(a_max, norm);
    alpha = std::max(alpha, (1.0 + std::abs(problem.b(i))) / (1.0 + norm));
  }
  const double c_norm = block_norm(problem.c);
  const double beta = (1.0 + std::max(a_max, c_norm)) / std::sqrt(n_total);
  const double b_norm = problem.b.norm();

  Solution s;
  s.x = scaled_identity(problem.block_sizes, n_total * alpha);
  s.z = scaled_identity(problem.block_sizes, 10.0 * beta);
  s.y = VectorXd::Zero(m);
  s.status = "iteration limit";

  for (int iter = 0; iter <= options.max_iterations; ++iter) {
    VectorXd rp(m);
    for (long i = 0; i < m; ++i) rp(i) = problem.b(i) - inner(problem.a[size_t(i)], s.x);
    const BlockMatrix aty = adjoint_map(problem, s.y);
    BlockMatrix rd(blocks);
    for (size_t k = 0; k < blocks; ++k) rd[k] = problem.c[k] - s.z[k] - aty[k];

    s.primal_objective = block_inner(problem.c, s.x);
    s.dual_objective = problem.b.dot(s.y);
    s.primal_infeasibility = rp.norm() / (1.0 + b_norm);
    s.dual_infeasibility = block_norm(rd) / (1.0 + c_norm);
    s.relative_gap = std::abs(s.primal_objective - s.dual_objective) /
                     (1.0 + std::abs(s.primal_objective) +
                      std::abs(s.dual_objective));
    s.iterations = iter;
    if (s.primal_infeasibility <= options.feasibility_tol &&
        s.dual_infeasibility <= options.feasibility_tol &&
        s.relative_gap <= options.gap_tol) {
      s.converged = true;
      s.status = "optimal";
      break;
    }
    if (iter == options.max_iterations) break;

    const double mu = block_inner(s.x, s.z) / n_total;
    const double target = options.centering * mu;

    BlockMatrix w(blocks);
    bool ok = true;
    for (size_t k = 0; k < blocks; ++k) {
      Eigen::LLT<MatrixXd> llt(s.z[k]);
      if (llt.info() != Eigen::Success) {
        ok = false;
        break;
      }
      w[k] = llt.solve(MatrixXd::Identity(s.z[k].rows(), s.z[k].cols()));
      w[k] = 0.5 * (w[k] + w[k].transpose()).eval();
    }
    if (!ok) {
      s.status = "dual slack lost definiteness";
      break;
    }

    const MatrixXd schur = schur_complement(problem, s.x, w);
    Eigen::LLT<MatrixXd> schur_llt(schur);
    if (schur_llt.info() != Eigen::Success) {
      s.status = "Schur complement not positive definite";
      break;
    }

    BlockMatrix g(blocks);
    for (size_t k = 0; k < blocks; ++k) {
      g[k] = target * w[k] - s.x[k] - s.x[k] * rd[k] * w[k];
    }
    VectorXd rhs(m);
    for (long i = 0; i < m; ++i) rhs(i) = rp(i) - inner(problem.a[size_t(i)], g);
    const VectorXd dy = schur_llt.solve(rhs);

    const BlockMatrix atdy = adjoint_map(problem, dy);
    BlockMatrix dz(blocks);
    BlockMatrix dx(blocks);
    for (size_t k = 0; k < blocks; ++k) {
      dz[k] = rd[k] - atdy[k];
      dz[k] = 0.5 * (dz[k] + dz[k].transpose()).eval();
      dx[k] = target * w[k] - s.x[k] - s.x[k] * dz[k] * w[k];
      dx[k] = 0.5 * (dx[k] + dx[k].transpose()).eval();
    }

    const double alpha_p =
        std::min(1.0, options.step_fraction * max_step(s.x, dx));
    const double alpha_d =
        std::min(1.0, options.step_fraction * max_step(s.z, dz));
    if (!(alpha_p > 1e-14) || !(alpha_d > 1e-14)) {
      s.status = "step length collapsed";
      break;
    }
    for (size_t k = 0; k < blocks; ++k) {
      s.x[k] += alpha_p * dx[k];
      s.z[k] += alpha_d * dz[k];
    }
    s.y += alpha_d * dy;
  }
  return s;
}

}  // namespace stochan::sdp
