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

#ifndef STOCHAN_STOCHASTIC_HPP
#define STOCHAN_STOCHASTIC_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "stochan/channel.hpp"

namespace stochan {

/// phi = lambda * id + (1 - lambda) * phi_perp with J(phi_perp) col(1) = 0.
struct StochasticDecomposition {
  double lambda = 1.0;
  std::optional<Channel> orthogonal_part;  // absent when lambda == 1
};

/// Bloch-ball distortion (eta) and image of the maximally mixed state
/// (kappa) for a qubit channel in the Bengtsson-Zyczkowski Choi form.
struct QubitParams {
  std::array<double, 3> eta{};
  std::array<double, 3> kappa{};
};

/// If J(phi) col(1) = lambda col(1) within tol * sqrt(d) entrywise with
/// lambda > tol, returns lambda = col(1)^dagger J col(1) / d.
std::optional<double> stochastic_eigenvalue(const Channel& phi,
                                            double tol = 1e-9);

/// Splits a stochastic channel into its identity weight and the orthogonal
/// error channel. Throws NotStochasticError if detection fails.
StochasticDecomposition decompose(const Channel& phi, double tol = 1e-9);

/// The non-unital stochastic channel on C^2 (x) C^m (d = 2m >= 4):
/// Kraus {sqrt(lam) 1, sqrt(1-lam) sigma_z (x) |0><j| for j < m}.
Channel paper_example(double lam, Index d);

/// alpha * id + (1 - alpha) * completely depolarizing, as a Choi mixture.
Channel depolarizing(double alpha, Index d);

/// Kraus sqrt(p_P) P over n-qubit Pauli strings, with `probabilities` of
/// length 4^n ordered lexicographically (first qubit most significant).
Channel pauli_channel(const std::vector<double>& probabilities);

/// Builds the 4x4 Choi matrix in the Bengtsson-Zyczkowski parameterization,
/// rescaled by 1/4 so the identity point (eta = 1, kappa = 0) reproduces the
/// normalized identity Choi. Physicality is not checked here.
///
/// With the output-first tensor ordering used throughout, the resulting map
/// sends sigma_i to eta_i sigma_i and 1 to 1 + kx sigma_x - ky sigma_y +
/// kz sigma_z (the y shift enters with a minus sign).
Channel qubit_choi_bz(const QubitParams& params);

struct NonunitalSearchOptions {
  double lambda = 0.5;     // identity weight of the searched channels
  int kraus_count = 0;     // traceless Kraus operators; 0 means d^2 - 1
  int penalty_rounds = 4;  // penalty weights 1, 10, 100, ...
  int ascent_steps = 150;  // per penalty round
  int manifold_steps = 200;  // projected ascent on the exact TP set
};

struct NonunitalSearchResult {
  double best_nonunitality = 0.0;  // trace_norm(phi(1) - 1)
  Channel witness;
  double witness_tp_residual = 0.0;
  std::vector<double> per_restart;  // restart-index order
};

/// Multi-start local search maximizing trace_norm(phi(1) - 1) over channels
/// lambda * id + (1 - lambda) * phi_perp, phi_perp with traceless Kraus
/// operators. Restarts may run in parallel; results are merged in index
/// order, so output is a pure function of the arguments.
NonunitalSearchResult search_nonunital(Index d, std::uint64_t seed,
                                       int restarts,
                                       const NonunitalSearchOptions& options =
                                           {});

/// Serial reference of search_nonunital.
NonunitalSearchResult search_nonunital_serial(
    Index d, std::uint64_t seed, int restarts,
    const NonunitalSearchOptions& options = {});

}  // namespace stochan

#endif  // STOCHAN_STOCHASTIC_HPP
