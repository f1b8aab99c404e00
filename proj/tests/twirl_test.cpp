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


#include "stochan/twirl.hpp"

#include <gtest/gtest.h>

#include "stochan/random.hpp"
#include "stochan/stochastic.hpp"

using namespace stochan;

TEST(twirl, routes_agree) {
  Rng rng = make_rng(41);
  for (const auto& mu : {pauli_design(1), pauli_design(2), weyl_heisenberg_design(3),
                         weyl_heisenberg_design(4)}) {
    const Channel phi = random_channel(mu.dim, rng);
    EXPECT_LE(max_abs_diff(twirl_definition(phi, mu).choi(), twirl_choi(phi, mu).choi()),
              1e-12);
  }
}

TEST(twirl, parallel_matches_serial_bitwise) {
  Rng rng = make_rng(42);
  const UnitaryDesign mu = weyl_heisenberg_design(5);
  const Channel phi = random_channel(5, rng);
  EXPECT_EQ(twirl_choi(phi, mu).choi(), twirl_choi_serial(phi, mu).choi());
  EXPECT_EQ(twirl_definition(phi, mu).choi(), twirl_definition_serial(phi, mu).choi());
}

TEST(twirl, pauli_twirl_is_the_pauli_channel_of_diagonal_chi) {
  // Pauli twirl keeps the diagonal of the chi matrix:
  // p_P = sum_k |tr(P L_k)|^2 / d^2.
  Rng rng = make_rng(43);
  for (const int n : {1, 2}) {
    const Index d = Index(1) << n;
    const Channel phi = random_channel(d, rng);
    std::vector<double> p;
    for (int idx = 0; idx < (1 << (2 * n)); ++idx) {
      std::vector<int> digits(static_cast<size_t>(n), 0);
      for (int q = n - 1, rest = idx; q >= 0; --q, rest /= 4) digits[size_t(q)] = rest % 4;
      const ComplexMatrix pm = pauli::string(digits);
      double w = 0.0;
      for (const auto& l : *phi.kraus()) w += std::norm((pm * l).trace());
      p.push_back(w / double(d * d));
    }
    EXPECT_LE(max_abs_diff(twirl_choi(phi, pauli_design(n)).choi(), pauli_channel(p).choi()),
              1e-13);
  }
}

TEST(twirl, idempotent_over_groups) {
  Rng rng = make_rng(44);
  for (const auto& mu : {pauli_design(1), weyl_heisenberg_design(3)}) {
    const Channel once = twirl_choi(random_channel(mu.dim, rng), mu);
    EXPECT_LE(max_abs_diff(twirl_choi(once, mu).choi(), once.choi()), 1e-13);
  }
}

TEST(twirl, output_is_stochastic_unital_with_same_fidelity) {
  Rng rng = make_rng(45);
  const Channel phi = paper_example(0.9, 4);
  for (const auto& mu : {weyl_heisenberg_design(4),
                         rotated_design(random_unitary(4, rng), pauli_design(2))}) {
    const Channel t = twirl_choi(phi, mu);
    const auto lambda = stochastic_eigenvalue(t);
    ASSERT_TRUE(lambda.has_value());
    EXPECT_NEAR(*lambda, 0.9, 1e-12);
    EXPECT_TRUE(validate_cptp(t).is_unital);
    EXPECT_NEAR(process_fidelity(t), process_fidelity(phi), 1e-12);
  }
}

TEST(twirl, identity_is_fixed) {
  const Channel id = identity_channel(3);
  EXPECT_LE(max_abs_diff(twirl_choi(id, weyl_heisenberg_design(3)).choi(), id.choi()), 1e-14);
}

TEST(twirl, dimension_mismatch_throws) {
  EXPECT_THROW(twirl_choi(identity_channel(3), pauli_design(1)), std::invalid_argument);
  EXPECT_THROW(twirl_definition(identity_channel(3), pauli_design(1)), std::invalid_argument);
}
