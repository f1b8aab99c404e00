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

#include "stochan/diamond.hpp"

#include <algorithm>
#include <cmath>

#include "stochan/errors.hpp"
#include "stochan/random.hpp"
#include "stochan/stochastic.hpp"

namespace stochan {

namespace {

// Gap at which an SDP answer is accepted as converged.
constexpr double kCertifiedGap = 1e-6;

enum class BasisKind { kDiagonal, kSymmetric, kAntisymmetric };

struct HermitianBasisElement {
  int p = 0;
  int q = 0;
  BasisKind kind = BasisKind::kDiagonal;
};

// Real coordinates of an N x N Hermitian matrix: N diagonal entries, then
// the real and imaginary parts of each p < q pair.
std::vector<HermitianBasisElement> hermitian_basis(int n) {
  std::vector<HermitianBasisElement> out;
  out.reserve(size_t(n) * size_t(n));
  for (int p = 0; p < n; ++p) out.push_back({p, p, BasisKind::kDiagonal});
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      out.push_back({p, q, BasisKind::kSymmetric});
      out.push_back({p, q, BasisKind::kAntisymmetric});
    }
  }
  return out;
}

struct ComplexEntry {
  int row;
  int col;
  Complex value;
};

std::vector<ComplexEntry> entries_of(const HermitianBasisElement& e) {
  switch (e.kind) {
    case BasisKind::kDiagonal:
      return {{e.p, e.p, 1.0}};
    case BasisKind::kSymmetric:
      return {{e.p, e.q, 1.0}, {e.q, e.p, 1.0}};
    case BasisKind::kAntisymmetric:
      return {{e.p, e.q, Complex(0.0, 1.0)}, {e.q, e.p, Complex(0.0, -1.0)}};
  }
  return {};
}

// Pushes the real embedding [[Re, -Im], [Im, Re]] of one complex entry of a
// Hermitian matrix of size n. Callers pass both (r, c) and (c, r).
void push_embedded(sdp::SparseSymmetric& a, size_t block, int n,
                   const ComplexEntry& e, double scale) {
  auto& entries = a.blocks[block];
  const double re = scale * e.value.real();
  const double im = scale * e.value.imag();
  if (re != 0.0) {
    entries.push_back({e.row, e.col, re});
    entries.push_back({n + e.row, n + e.col, re});
  }
  if (im != 0.0) {
    entries.push_back({e.row, n + e.col, -im});
    entries.push_back({n + e.row, e.col, im});
  }
}

RealMatrix embed(const ComplexMatrix& h) {
  const Index n = h.rows();
  RealMatrix out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = h.real();
  out.topRightCorner(n, n) = -h.imag();
  out.bottomLeftCorner(n, n) = h.imag();
  out.bottomRightCorner(n, n) = h.real();
  return out;
}

// Adjoint of the embedding: <embed(H), R> = 2 Re tr(H rho(R)).
ComplexMatrix unembed(const RealMatrix& r) {
  const Index n = r.rows() / 2;
  const RealMatrix re = r.topLeftCorner(n, n) + r.bottomRightCorner(n, n);
  const RealMatrix im = r.bottomLeftCorner(n, n) - r.topRightCorner(n, n);
  ComplexMatrix out(n, n);
  out.real() = re / 2.0;
  out.imag() = im / 2.0;
  return (out + out.adjoint()) * 0.5;
}

ComplexMatrix hermitian_from_coordinates(const Eigen::VectorXd& y, int n,
                                         const std::vector<HermitianBasisElement>& basis) {
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (size_t k = 0; k < basis.size(); ++k) {
    for (const auto& e : entries_of(basis[k])) {
      out(e.row, e.col) += y(long(k) + 1) * e.value;
    }
  }
  return out;
}

}  // namespace

std::string to_string(DiamondMethod method) {
  switch (method) {
    case DiamondMethod::kSdp: return "sdp";
    case DiamondMethod::kStochasticFastPath: return "stochastic_fast_path";
    case DiamondMethod::kSeesawOnly: return "seesaw_only";
  }
  return "unknown";
}

SdpProblem SdpProblem::for_channel(const Channel& phi) {
  const Index d = phi.dim();
  return {double(d) * (phi.choi() - identity_choi(d)), d};
}

sdp::Problem build_watrous_sdp(const SdpProblem& problem) {
  const Index d = problem.dim;
  const auto n = static_cast<int>(d * d);
  if (problem.choi_difference.rows() != n || problem.choi_difference.cols() != n) {
    throw DimensionError("watrous_sdp: Choi difference must be d^2 x d^2");
  }
  if (hermiticity_residual(problem.choi_difference) > tol::kHermitian) {
    throw MatrixPropertyError("watrous_sdp: Choi difference is not Hermitian");
  }
  const int di = static_cast<int>(d);
  const auto basis = hermitian_basis(n);

  // Variables (t, Y); slack blocks t*1 - Tr_out(Y), Y - C, Y + C.
  sdp::Problem p;
  p.block_sizes = {2 * di, 2 * n, 2 * n};
  const ComplexMatrix c = (problem.choi_difference +
                           problem.choi_difference.adjoint()) * 0.5;
  p.c = {RealMatrix::Zero(2 * di, 2 * di), -embed(c), embed(c)};
  p.b = Eigen::VectorXd::Zero(long(basis.size()) + 1);
  p.b(0) = -1.0;

  sdp::SparseSymmetric at(3);
  for (int i = 0; i < 2 * di; ++i) at.blocks[0].push_back({i, i, -1.0});
  p.a.push_back(std::move(at));

  for (const auto& element : basis) {
    sdp::SparseSymmetric a(3);
    for (const auto& e : entries_of(element)) {
      // Tr over the first factor: (a, i), (b, j) -> delta_ab |i><j|.
      if (e.row / di == e.col / di) {
        push_embedded(a, 0, di, {e.row % di, e.col % di, e.value}, 1.0);
      }
      push_embedded(a, 1, n, e, -1.0);
      push_embedded(a, 2, n, e, -1.0);
    }
    p.a.push_back(std::move(a));
  }
  return p;
}

double diamond_lower_bound_from_state(const SdpProblem& problem,
                                      const ComplexMatrix& rho) {
  const Index d = problem.dim;
  const ComplexMatrix root =
      kron(ComplexMatrix::Identity(d, d), psd_sqrt(rho));
  return 0.5 * trace_norm(root * problem.choi_difference * root);
}

WatrousSolution watrous_sdp_solve(const SdpProblem& problem,
                                  const sdp::Options& options) {
  const sdp::Problem p = build_watrous_sdp(problem);
  const sdp::Solution s = sdp::solve(p, options);
  const Index d = problem.dim;
  const auto n = static_cast<int>(d * d);

  WatrousSolution out;
  out.converged = s.converged;
  out.iterations = s.iterations;
  out.status = s.status;

  // Upper bound: shift Y until Y -/+ C >= 0 holds exactly.
  const ComplexMatrix y = hermitian_from_coordinates(s.y, n, hermitian_basis(n));
  const ComplexMatrix& c = problem.choi_difference;
  const double shift = std::max(
      {0.0, -hermitian_spectral(y - c, 1e-8).min_eigenvalue(),
       -hermitian_spectral(y + c, 1e-8).min_eigenvalue()});
  const ComplexMatrix reduced =
      partial_trace_first(y, d, d) +
      double(d) * shift * ComplexMatrix::Identity(d, d);
  out.upper_bound = 0.5 * hermitian_spectral(reduced, 1e-8).eigenvalues(0);

  // Lower bound: the input density matrix carried by the primal block.
  ComplexMatrix rho = psd_part(unembed(s.x[0]));
  const double trace = rho.trace().real();
  if (trace > 0.0 && std::isfinite(trace)) {
    rho /= trace;
  } else {
    rho = ComplexMatrix::Identity(d, d) / double(d);
  }
  out.lower_bound = diamond_lower_bound_from_state(problem, rho);

  out.gap = std::max(0.0, out.upper_bound - out.lower_bound);
  out.value = 0.5 * (out.lower_bound + out.upper_bound);
  if (out.upper_bound < out.lower_bound) out.value = out.lower_bound;
  return out;
}

std::vector<double> seesaw_trajectory(const Channel& phi,
                                      const ComplexVector& psi0,
                                      const SeesawOptions& options) {
  const Index d = phi.dim();
  const Index n = d * d;
  if (psi0.size() != n) throw DimensionError("seesaw: psi must have length d^2");
  const KrausList kraus = phi.has_kraus() ? *phi.kraus() : canonical_kraus(phi);
  const ComplexMatrix id_in = ComplexMatrix::Identity(d, d);
  std::vector<ComplexMatrix> big;
  big.reserve(kraus.size());
  for (const auto& l : kraus) big.push_back(kron(l, id_in));

  auto image = [&](const ComplexVector& psi) {
    const ComplexMatrix rho = psi * psi.adjoint();
    ComplexMatrix out = -rho;
    for (const auto& k : big) out.noalias() += k * rho * k.adjoint();
    return out;
  };

  ComplexVector psi = psi0.normalized();
  std::vector<double> history;
  ComplexMatrix h = image(psi);
  history.push_back(0.5 * trace_norm(h));
  for (int it = 0; it < options.max_iterations; ++it) {
    const HermitianSpectrum s = hermitian_spectral(h, 1e-8);
    RealVector signs(s.eigenvalues.size());
    for (Index k = 0; k < signs.size(); ++k) {
      signs(k) = s.eigenvalues(k) > 0.0 ? 1.0 : (s.eigenvalues(k) < 0.0 ? -1.0 : 0.0);
    }
    const ComplexMatrix sign =
        s.eigenvectors * signs.cast<Complex>().asDiagonal() * s.eigenvectors.adjoint();
    ComplexMatrix adjoint = -sign;
    for (const auto& k : big) adjoint.noalias() += k.adjoint() * sign * k;
    const HermitianSpectrum top = hermitian_spectral(adjoint, 1e-8);
    const ComplexVector next = top.eigenvectors.col(0);
    const ComplexMatrix next_h = image(next);
    const double value = 0.5 * trace_norm(next_h);
    // Objective is non-decreasing; keep the old point on round-off ties.
    if (value < history.back()) {
      history.push_back(history.back());
      break;
    }
    const bool done = value - history.back() <= options.tolerance;
    psi = next;
    h = next_h;
    history.push_back(value);
    if (done) break;
  }
  return history;
}

double seesaw_lower_bound(const Channel& phi, std::uint64_t seed, int restarts,
                          const SeesawOptions& options) {
  const Index d = phi.dim();
  const int count = std::max(restarts, 1);
  std::vector<double> best(static_cast<size_t>(count), 0.0);
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < count; ++r) {
    ComplexVector psi;
    if (r == 0) {
      psi = col(ComplexMatrix::Identity(d, d));
    } else {
      Rng rng = make_rng(seed, std::uint64_t(r));
      psi = random_ginibre(d * d, 1, rng).col(0);
    }
    best[size_t(r)] = seesaw_trajectory(phi, psi, options).back();
  }
  return *std::max_element(best.begin(), best.end());
}

DiamondResult diamond_distance(const Channel& phi,
                               const DiamondOptions& options) {
  const CptpReport report = validate_cptp(phi);
  if (!report.is_cptp()) {
    throw NotCptpError("diamond_distance: channel is not CPTP");
  }
  const double infidelity = process_infidelity(phi);
  DiamondResult out;
  if (!options.force_sdp) {
    if (const auto lambda = stochastic_eigenvalue(phi)) {
      out.method = DiamondMethod::kStochasticFastPath;
      out.value = 1.0 - *lambda;
      out.dual_bound = 1.0 - *lambda;
      out.primal_bound = std::min(infidelity, out.dual_bound);
      out.gap = out.dual_bound - out.primal_bound;
      return out;
    }
  }
  const WatrousSolution sol =
      watrous_sdp_solve(SdpProblem::for_channel(phi), options.sdp);
  if (sol.gap <= kCertifiedGap && std::isfinite(sol.upper_bound)) {
    out.method = DiamondMethod::kSdp;
    out.value = sol.value;
    out.primal_bound = sol.lower_bound;
    out.dual_bound = sol.upper_bound;
    out.gap = sol.gap;
    return out;
  }
  const double seesaw =
      seesaw_lower_bound(phi, options.seed, options.seesaw_restarts);
  out.method = DiamondMethod::kSeesawOnly;
  out.primal_bound = std::max(sol.lower_bound, seesaw);
  out.dual_bound = std::isfinite(sol.upper_bound)
                       ? std::max(sol.upper_bound, out.primal_bound)
                       : 1.0;
  out.value = out.primal_bound;
  out.gap = out.dual_bound - out.primal_bound;
  return out;
}

}  // namespace stochan
