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

// Search over lambda * id + (1 - lambda) * phi_perp where phi_perp has
// traceless Kraus operators K_j. Each restart runs
//   1. penalized ascent on trace_norm(phi(1) - 1) - mu ||sum K^dag K - 1||_F^2
//      for an increasing sequence of mu,
//   2. Gauss-Newton restoration of sum K^dag K = 1 inside the traceless
//      subspace,
//   3. ascent steps each followed by the same restoration,
// and scores the restored (exactly trace-preserving) channel.

#include <algorithm>
#include <cmath>
#include <limits>

#include "stochan/errors.hpp"
#include "stochan/random.hpp"
#include "stochan/stochastic.hpp"

namespace stochan {

namespace {

using Kraus = std::vector<ComplexMatrix>;

ComplexMatrix traceless(const ComplexMatrix& m) {
  const Index d = m.rows();
  return m - (m.trace() / double(d)) * ComplexMatrix::Identity(d, d);
}

ComplexMatrix gram(const Kraus& k) {
  ComplexMatrix s = ComplexMatrix::Zero(k.front().rows(), k.front().cols());
  for (const auto& m : k) s.noalias() += m.adjoint() * m;
  return s;
}

ComplexMatrix outer_gram(const Kraus& k) {
  ComplexMatrix s = ComplexMatrix::Zero(k.front().rows(), k.front().cols());
  for (const auto& m : k) s.noalias() += m * m.adjoint();
  return s;
}

struct Objective {
  double lambda;
  Index d;

  // phi(1) - 1 for the mixed channel.
  ComplexMatrix deviation(const Kraus& k) const {
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    return (1.0 - lambda) * (outer_gram(k) - id);
  }
  double nonunitality(const Kraus& k) const { return trace_norm(deviation(k)); }
  double penalized(const Kraus& k, double mu) const {
    const ComplexMatrix r = gram(k) - ComplexMatrix::Identity(d, d);
    return nonunitality(k) - mu * r.squaredNorm();
  }

  // Wirtinger gradient (d/d conj K_j), projected onto traceless matrices.
  Kraus gradient(const Kraus& k, double mu) const {
    const HermitianSpectrum s = hermitian_spectral(deviation(k), 1e-8);
    RealVector signs(s.eigenvalues.size());
    for (Index i = 0; i < signs.size(); ++i) {
      signs(i) = s.eigenvalues(i) > 0.0 ? 1.0 : (s.eigenvalues(i) < 0.0 ? -1.0 : 0.0);
    }
    const ComplexMatrix sign =
        s.eigenvectors * signs.cast<Complex>().asDiagonal() * s.eigenvectors.adjoint();
    const ComplexMatrix r = gram(k) - ComplexMatrix::Identity(d, d);
    Kraus g;
    g.reserve(k.size());
    for (const auto& m : k) {
      ComplexMatrix step = (1.0 - lambda) * sign * m;
      if (mu > 0.0) step -= 2.0 * mu * m * r;
      g.push_back(traceless(step));
    }
    return g;
  }
};

Kraus axpy(const Kraus& k, double t, const Kraus& g) {
  Kraus out = k;
  for (size_t j = 0; j < k.size(); ++j) out[j] += t * g[j];
  return out;
}

// Orthonormal basis of d x d Hermitian matrices (Frobenius inner product).
std::vector<ComplexMatrix> hermitian_frame(Index d) {
  std::vector<ComplexMatrix> out;
  const double h = 1.0 / std::sqrt(2.0);
  for (Index p = 0; p < d; ++p) out.push_back(ket_bra(p, p, d));
  for (Index p = 0; p < d; ++p) {
    for (Index q = p + 1; q < d; ++q) {
      out.push_back(h * (ket_bra(p, q, d) + ket_bra(q, p, d)));
      out.push_back(Complex(0.0, h) * (ket_bra(p, q, d) - ket_bra(q, p, d)));
    }
  }
  return out;
}

// Newton-type projection onto sum K^dag K = 1 with every K traceless. The
// step is the minimum-norm solution of the linearized constraint,
// delta_j = P(K_j H) with H Hermitian.
bool restore_trace_preservation(Kraus& k, const std::vector<ComplexMatrix>& frame,
                                int max_iterations = 50) {
  const Index d = k.front().rows();
  const auto dim = static_cast<Index>(frame.size());
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  for (int it = 0; it < max_iterations; ++it) {
    const ComplexMatrix r = gram(k) - id;
    if (r.cwiseAbs().maxCoeff() <= 1e-14) return true;
    RealMatrix t(dim, dim);
    for (Index s = 0; s < dim; ++s) {
      ComplexMatrix image = ComplexMatrix::Zero(d, d);
      for (const auto& m : k) {
        const ComplexMatrix delta = traceless(m * frame[size_t(s)]);
        image.noalias() += delta.adjoint() * m + m.adjoint() * delta;
      }
      for (Index u = 0; u < dim; ++u) t(u, s) = hs_inner(frame[size_t(u)], image).real();
    }
    RealVector rhs(dim);
    for (Index u = 0; u < dim; ++u) rhs(u) = -hs_inner(frame[size_t(u)], r).real();
    const RealVector h = t.colPivHouseholderQr().solve(rhs);
    if (!h.allFinite()) return false;
    ComplexMatrix step = ComplexMatrix::Zero(d, d);
    for (Index s = 0; s < dim; ++s) step += h(s) * frame[size_t(s)];
    for (auto& m : k) m += traceless(m * step);
  }
  return (gram(k) - id).cwiseAbs().maxCoeff() <= 1e-12;
}

Kraus random_start(Index d, int count, Rng& rng) {
  Kraus k;
  for (int j = 0; j < count; ++j) {
    ComplexMatrix m = traceless(random_ginibre(d, d, rng));
    for (const auto& prev : k) m -= (hs_inner(prev, m) / prev.squaredNorm()) * prev;
    k.push_back(m);
  }
  double total = 0.0;
  for (const auto& m : k) total += m.squaredNorm();
  const double scale = std::sqrt(double(d) / total);
  for (auto& m : k) m *= scale;
  return k;
}

struct RestartResult {
  double value = -std::numeric_limits<double>::infinity();
  Kraus kraus;
};

RestartResult run_restart(Index d, std::uint64_t seed, int restart,
                          const NonunitalSearchOptions& opt) {
  const int count = opt.kraus_count > 0 ? opt.kraus_count : int(d * d - 1);
  Rng rng = make_rng(seed, std::uint64_t(restart));
  Kraus k = random_start(d, count, rng);
  const Objective f{opt.lambda, d};
  const auto frame = hermitian_frame(d);

  double mu = 1.0;
  for (int round = 0; round < opt.penalty_rounds; ++round, mu *= 10.0) {
    double step = 0.1 / mu;
    double current = f.penalized(k, mu);
    for (int it = 0; it < opt.ascent_steps && step > 1e-14; ++it) {
      const Kraus g = f.gradient(k, mu);
      const Kraus trial = axpy(k, step, g);
      const double value = f.penalized(trial, mu);
      if (value > current) {
        k = trial;
        current = value;
        step *= 1.5;
      } else {
        step *= 0.5;
      }
    }
  }

  RestartResult out;
  if (!restore_trace_preservation(k, frame)) return out;
  double current = f.nonunitality(k);
  double step = 0.05;
  for (int it = 0; it < opt.manifold_steps && step > 1e-12; ++it) {
    Kraus trial = axpy(k, step, f.gradient(k, 0.0));
    if (!restore_trace_preservation(trial, frame)) {
      step *= 0.5;
      continue;
    }
    const double value = f.nonunitality(trial);
    if (value > current) {
      k = std::move(trial);
      current = value;
      step *= 1.5;
    } else {
      step *= 0.5;
    }
  }
  out.value = current;
  out.kraus = std::move(k);
  return out;
}

Channel assemble(const Kraus& k, double lambda, Index d) {
  Kraus all;
  all.push_back(std::sqrt(lambda) * ComplexMatrix::Identity(d, d));
  for (const auto& m : k) all.push_back(std::sqrt(1.0 - lambda) * m);
  return choi_of(all, d);
}

NonunitalSearchResult merge(const std::vector<RestartResult>& results,
                            double lambda, Index d) {
  size_t best = 0;
  for (size_t r = 1; r < results.size(); ++r) {
    if (results[r].value > results[best].value) best = r;
  }
  if (!std::isfinite(results[best].value)) {
    throw std::runtime_error("search_nonunital: no restart reached a "
                             "trace-preserving point");
  }
  const Channel witness = assemble(results[best].kraus, lambda, d);
  const CptpReport report = validate_cptp(witness);
  NonunitalSearchResult out{
      trace_norm(stochan::apply(witness, ComplexMatrix::Identity(d, d)) -
                 ComplexMatrix::Identity(d, d)),
      witness, report.tp_residual, {}};
  out.per_restart.reserve(results.size());
  for (const auto& r : results) out.per_restart.push_back(r.value);
  return out;
}

void check_arguments(Index d, int restarts, const NonunitalSearchOptions& opt) {
  if (d < 2) throw ParameterError("search_nonunital: d must be >= 2");
  if (restarts < 1) throw ParameterError("search_nonunital: restarts must be >= 1");
  if (!(opt.lambda > 0.0 && opt.lambda < 1.0)) {
    throw ParameterError("search_nonunital: lambda must lie in (0, 1)");
  }
}

}  // namespace

NonunitalSearchResult search_nonunital(Index d, std::uint64_t seed,
                                       int restarts,
                                       const NonunitalSearchOptions& options) {
  check_arguments(d, restarts, options);
  std::vector<RestartResult> results(static_cast<size_t>(restarts));
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < restarts; ++r) {
    results[size_t(r)] = run_restart(d, seed, r, options);
  }
  return merge(results, options.lambda, d);
}

NonunitalSearchResult search_nonunital_serial(
    Index d, std::uint64_t seed, int restarts,
    const NonunitalSearchOptions& options) {
  check_arguments(d, restarts, options);
  std::vector<RestartResult> results;
  for (int r = 0; r < restarts; ++r) results.push_back(run_restart(d, seed, r, options));
  return merge(results, options.lambda, d);
}

}  // namespace stochan
