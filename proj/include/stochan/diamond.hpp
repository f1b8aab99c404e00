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

#ifndef STOCHAN_DIAMOND_HPP
#define STOCHAN_DIAMOND_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stochan/channel.hpp"
#include "stochan/sdp.hpp"

namespace stochan {

enum class DiamondMethod { kSdp, kStochasticFastPath, kSeesawOnly };

std::string to_string(DiamondMethod method);

/// Diamond distance r = (1/2) ||phi - id||_diamond with certified bounds.
struct DiamondResult {
  double value = 0.0;
  double primal_bound = 0.0;  // lower
  double dual_bound = 0.0;    // upper
  double gap = 0.0;           // dual_bound - primal_bound
  DiamondMethod method = DiamondMethod::kSdp;
};

/// C = d * (J(phi) - J(id)), the unnormalized Choi matrix of phi - id.
struct SdpProblem {
  ComplexMatrix choi_difference;
  Index dim = 0;

  static SdpProblem for_channel(const Channel& phi);
};

struct WatrousSolution {
  double value = 0.0;        // midpoint of the certified bounds
  double gap = 0.0;
  double lower_bound = 0.0;  // from the primal density matrix
  double upper_bound = 0.0;  // from the repaired dual variable
  bool converged = false;
  int iterations = 0;
  std::string status;
};

/// Solves
///
///   minimize (1/2)(||Tr_out Y0||_inf + ||Tr_out Y1||_inf)
///   s.t.     [[Y0, -C], [-C^dag, Y1]] >= 0
///
/// whose optimum is ||phi - id||_diamond, and returns half of it. For
/// Hermitian C an optimal pair has Y0 = Y1 = Y and the block constraint is
/// equivalent to Y - C >= 0, Y + C >= 0; that reduced problem is what gets
/// handed to the interior-point solver (real embedding [[Re, -Im], [Im, Re]]).
/// Bounds are certified: the upper bound from a dual point shifted to exact
/// feasibility, the lower bound (1/2)||(1 (x) sqrt(rho)) C (1 (x) sqrt(rho))||_1
/// from the primal density matrix rho.
WatrousSolution watrous_sdp_solve(const SdpProblem& problem,
                                  const sdp::Options& options = {});

/// The interior-point instance solved by watrous_sdp_solve; exposed for
/// tests and benchmarks.
sdp::Problem build_watrous_sdp(const SdpProblem& problem);

/// Certified lower bound (1/2)||(1 (x) sqrt(rho)) C (1 (x) sqrt(rho))||_1 for
/// any density matrix rho on the input space.
double diamond_lower_bound_from_state(const SdpProblem& problem,
                                      const ComplexMatrix& rho);

struct SeesawOptions {
  int max_iterations = 300;
  double tolerance = 1e-13;
};

/// Alternating maximization of (1/2)||(phi (x) id - id (x) id)(psi psi^dag)||_1
/// over unit vectors psi in C^d (x) C^d. Returns the objective after each
/// iteration, starting with the value at psi0; the sequence is non-decreasing.
std::vector<double> seesaw_trajectory(const Channel& phi,
                                      const ComplexVector& psi0,
                                      const SeesawOptions& options = {});

/// Best see-saw value over `restarts` starts (restart 0 is the maximally
/// entangled state, the rest are seeded random). Every value is attained by
/// an explicit input state, so it is a lower bound on the diamond distance.
double seesaw_lower_bound(const Channel& phi, std::uint64_t seed, int restarts,
                          const SeesawOptions& options = {});

struct DiamondOptions {
  bool force_sdp = false;
  std::uint64_t seed = 1;
  int seesaw_restarts = 8;
  sdp::Options sdp;
};

/// Diamond distance to the identity. Stochastic channels take the closed
/// form 1 - lambda unless force_sdp is set; everything else goes through the
/// SDP, falling back to see-saw bounds if the solver does not close the gap
/// to 1e-6. Throws NotCptpError for non-CPTP input.
DiamondResult diamond_distance(const Channel& phi,
                               const DiamondOptions& options = {});

}  // namespace stochan

#endif  // STOCHAN_DIAMOND_HPP
