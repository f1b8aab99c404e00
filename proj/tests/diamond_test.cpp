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

#include <cmath>

#include <gtest/gtest.h>

#include "stochan/errors.hpp"
#include "stochan/random.hpp"
#include "stochan/stochastic.hpp"

using namespace stochan;

namespace {

DiamondResult by_sdp(const Channel& phi) {
  DiamondOptions opt;
  opt.force_sdp = true;
  return diamond_distance(phi, opt);
}

ComplexMatrix phase_gate(Index d, double theta) {
  ComplexMatrix u = ComplexMatrix::Identity(d, d);
  for (Index k = 1; k < d; ++k) u(k, k) = std::polar(1.0, theta);
  return u;
}

}  // namespace

TEST(diamond, identity_is_zero) {
  for (const Index d : {2, 3}) {
    const DiamondResult fast = diamond_distance(identity_channel(d));
    EXPECT_EQ(fast.method, DiamondMethod::kStochasticFastPath);
    EXPECT_DOUBLE_EQ(fast.value, 0.0);
    const DiamondResult r = by_sdp(identity_channel(d));
    EXPECT_EQ(r.method, DiamondMethod::kSdp);
    EXPECT_NEAR(r.value, 0.0, 1e-8);
  }
}

TEST(diamond, depolarizing_and_pauli_values) {
  const DiamondResult dep = by_sdp(depolarizing(0.8, 2));
  EXPECT_EQ(dep.method, DiamondMethod::kSdp);
  EXPECT_NEAR(dep.value, 0.15, 1e-6);
  const DiamondResult pauli = by_sdp(pauli_channel({0.9, 0.1, 0.0, 0.0}));
  EXPECT_NEAR(pauli.value, 0.1, 1e-6);
}

TEST(diamond, unitary_channels_match_closed_form) {
  // Ad_u for u with eigenphases {0, theta}: r = sin(theta / 2), while the
  // infidelity is only sin^2(theta / 2).
  for (const Index d : {2, 3}) {
    for (const double theta : {0.3, 1.0, 2.5}) {
      const Channel phi = choi_of({phase_gate(d, theta)}, d);
      ASSERT_FALSE(stochastic_eigenvalue(phi).has_value());
      const DiamondResult r = diamond_distance(phi);
      EXPECT_EQ(r.method, DiamondMethod::kSdp);
      EXPECT_NEAR(r.value, std::sin(theta / 2.0), 1e-6);
      EXPECT_LE(r.primal_bound, r.dual_bound);
      EXPECT_LE(r.gap, 1e-6);
    }
  }
}

TEST(diamond, fast_path_bounds) {
  const Channel phi = paper_example(0.9, 4);
  const DiamondResult fast = diamond_distance(phi);
  EXPECT_EQ(fast.method, DiamondMethod::kStochasticFastPath);
  EXPECT_NEAR(fast.value, 0.1, 1e-12);
  EXPECT_NEAR(fast.primal_bound, process_infidelity(phi), 1e-12);
  EXPECT_NEAR(fast.dual_bound, 0.1, 1e-12);
  EXPECT_NEAR(by_sdp(phi).value, 0.1, 1e-6);
}

TEST(diamond, sandwich_bound_and_seesaw_on_random_channels) {
  Rng rng = make_rng(61);
  for (int k = 0; k < 6; ++k) {
    const Index d = 2 + k % 2;
    const Channel phi = random_channel(d, rng, 1 + k % 3);
    const DiamondResult r = diamond_distance(phi);
    EXPECT_GE(r.value, process_infidelity(phi) - 1e-7);
    EXPECT_LE(r.value, r.dual_bound + 1e-12);
    EXPECT_LE(seesaw_lower_bound(phi, 3, 4), r.value + 1e-7);
  }
}

TEST(diamond, unitary_invariance) {
  Rng rng = make_rng(62);
  const Channel phi = random_channel(3, rng, 2);
  const ComplexMatrix u = random_unitary(3, rng);
  const Channel rotated = sandwich(u, phi, u.adjoint());
  EXPECT_NEAR(diamond_distance(phi).value, diamond_distance(rotated).value, 1e-6);
}

TEST(diamond, seesaw_is_monotone_and_tight_on_the_example) {
  Rng rng = make_rng(63);
  const Channel phi = random_channel(3, rng, 3);
  const auto history = seesaw_trajectory(phi, random_ginibre(9, 1, rng).col(0));
  ASSERT_GE(history.size(), 2u);
  for (size_t i = 1; i < history.size(); ++i) EXPECT_GE(history[i], history[i - 1]);
  EXPECT_GE(seesaw_lower_bound(paper_example(0.9, 4), 1, 4), 0.1 - 1e-4);
  EXPECT_NEAR(seesaw_lower_bound(identity_channel(2), 1, 3), 0.0, 1e-12);
  EXPECT_EQ(seesaw_lower_bound(phi, 7, 5), seesaw_lower_bound(phi, 7, 5));
}

TEST(diamond, lower_bound_from_any_state) {
  Rng rng = make_rng(64);
  const Channel phi = random_channel(2, rng);
  const SdpProblem p = SdpProblem::for_channel(phi);
  const double mixed = diamond_lower_bound_from_state(p, ComplexMatrix::Identity(2, 2) / 2.0);
  EXPECT_NEAR(mixed, 0.5 * trace_norm(phi.choi() - identity_choi(2)), 1e-12);
  EXPECT_GE(mixed, process_infidelity(phi) - 1e-12);
  EXPECT_LE(mixed, diamond_distance(phi).dual_bound + 1e-9);
}

TEST(diamond, watrous_problem_shape) {
  const sdp::Problem p = build_watrous_sdp(SdpProblem::for_channel(identity_channel(3)));
  EXPECT_EQ(p.block_sizes, (std::vector<int>{6, 18, 18}));
  EXPECT_EQ(p.a.size(), 82u);
  const WatrousSolution s = watrous_sdp_solve(SdpProblem::for_channel(identity_channel(3)));
  EXPECT_TRUE(s.converged);
  EXPECT_NEAR(s.value, 0.0, 1e-8);
}

TEST(diamond, rejects_non_cptp_input) {
  const Channel scaled = choi_of({0.9 * ComplexMatrix::Identity(2, 2)}, 2);
  EXPECT_THROW(diamond_distance(scaled), NotCptpError);
  SdpProblem bad{ComplexMatrix::Zero(3, 3), 2};
  EXPECT_THROW(build_watrous_sdp(bad), DimensionError);
}
