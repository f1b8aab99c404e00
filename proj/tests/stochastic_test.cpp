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


#include "stochan/stochastic.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "stochan/errors.hpp"
#include "stochan/random.hpp"

using namespace stochan;

TEST(stochastic, paper_example_image_of_identity) {
  for (const double lam : {0.5, 0.9, 0.99}) {
    for (const Index d : {4, 6}) {
      const Channel phi = paper_example(lam, d);
      EXPECT_TRUE(validate_cptp(phi).is_cptp());
      const auto lambda = stochastic_eigenvalue(phi);
      ASSERT_TRUE(lambda.has_value());
      EXPECT_NEAR(*lambda, lam, 1e-12);
      const Index m = d / 2;
      const ComplexMatrix id = ComplexMatrix::Identity(d, d);
      const ComplexMatrix expected =
          lam * id + (1.0 - lam) * kron(ComplexMatrix::Identity(2, 2),
                                        double(m) * ket_bra(0, 0, m));
      EXPECT_LE(max_abs_diff(stochan::apply(phi, id), expected), 1e-12);
      EXPECT_NEAR(trace_norm(stochan::apply(phi, id) - id), (1.0 - lam) * 2.0 * double(d - 2),
                  1e-10);
    }
  }
}

TEST(stochastic, paper_example_rejects_bad_arguments) {
  EXPECT_THROW(paper_example(0.9, 2), ParameterError);
  EXPECT_THROW(paper_example(0.9, 5), ParameterError);
  EXPECT_THROW(paper_example(0.0, 4), ParameterError);
  EXPECT_THROW(paper_example(1.1, 4), ParameterError);
  EXPECT_LE(max_abs_diff(paper_example(1.0, 4).choi(), identity_choi(4)), 1e-15);
}

TEST(stochastic, depolarizing_eigenvalue) {
  for (const Index d : {2, 3, 5}) {
    for (const double alpha : {0.0, 0.3, 0.8}) {
      const auto lambda = stochastic_eigenvalue(depolarizing(alpha, d));
      ASSERT_TRUE(lambda.has_value());
      EXPECT_NEAR(*lambda, alpha + (1.0 - alpha) / double(d * d), 1e-14);
    }
  }
  EXPECT_NEAR(process_infidelity(depolarizing(0.8, 2)), 0.15, 1e-14);
}

TEST(stochastic, pauli_channel_weight_of_identity) {
  const Channel phi = pauli_channel({0.7, 0.1, 0.15, 0.05});
  EXPECT_NEAR(*stochastic_eigenvalue(phi), 0.7, 1e-14);
  EXPECT_TRUE(validate_cptp(phi).is_unital);
  // Bloch action: sigma_x -> (p0 + px - py - pz) sigma_x.
  EXPECT_LE(max_abs_diff(stochan::apply(phi, pauli::x()), 0.6 * pauli::x()), 1e-14);
  EXPECT_THROW(pauli_channel({0.5, 0.5, 0.1}), ParameterError);
  EXPECT_THROW(pauli_channel({0.5, 0.6, 0.0, 0.0}), ParameterError);
  EXPECT_THROW(pauli_channel({1.1, -0.1, 0.0, 0.0}), ParameterError);
  EXPECT_EQ(pauli_channel(std::vector<double>(16, 1.0 / 16)).dim(), 4);
}

TEST(stochastic, non_stochastic_channels_are_not_detected) {
  // Pauli X conjugation: J col(1) = 0.
  EXPECT_FALSE(stochastic_eigenvalue(choi_of({pauli::x()}, 2)).has_value());
  const double g = 0.3;
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - g);
  ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
  k1(0, 1) = std::sqrt(g);
  const Channel damping = choi_of({k0, k1}, 2);
  EXPECT_FALSE(stochastic_eigenvalue(damping).has_value());
  EXPECT_THROW(decompose(damping), NotStochasticError);
}

TEST(stochastic, decomposition_reconstructs_and_is_orthogonal) {
  Rng rng = make_rng(21);
  for (const Index d : {2, 3, 4}) {
    for (int k = 0; k < 5; ++k) {
      const Channel phi = random_stochastic_channel(d, rng);
      const StochasticDecomposition s = decompose(phi);
      ASSERT_TRUE(s.orthogonal_part.has_value());
      const Channel& perp = *s.orthogonal_part;
      EXPECT_TRUE(validate_cptp(perp).is_cptp());
      const ComplexVector v = col(ComplexMatrix::Identity(d, d));
      EXPECT_LE((perp.choi() * v).cwiseAbs().maxCoeff(), 1e-12);
      const ComplexMatrix back =
          s.lambda * identity_choi(d) + (1.0 - s.lambda) * perp.choi();
      EXPECT_LE(max_abs_diff(back, phi.choi()), 1e-13);
      EXPECT_NEAR(s.lambda, process_fidelity(phi), 1e-12);
    }
  }
  const StochasticDecomposition id = decompose(identity_channel(3));
  EXPECT_DOUBLE_EQ(id.lambda, 1.0);
  EXPECT_FALSE(id.orthogonal_part.has_value());
}

TEST(stochastic, random_stochastic_lambda_range) {
  Rng rng = make_rng(22);
  for (int k = 0; k < 20; ++k) {
    const Channel phi = random_stochastic_channel(4, rng);
    const auto lambda = stochastic_eigenvalue(phi);
    ASSERT_TRUE(lambda.has_value());
    EXPECT_GE(*lambda, 0.05 - 1e-12);
    EXPECT_LE(*lambda, 0.95 + 1e-12);
  }
}

TEST(stochastic, qubit_parameterization_identity_and_depolarizing) {
  const Channel id = qubit_choi_bz({{1.0, 1.0, 1.0}, {0.0, 0.0, 0.0}});
  EXPECT_LE(max_abs_diff(id.choi(), identity_choi(2)), 1e-15);
  const Channel full = qubit_choi_bz({{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}});
  EXPECT_LE(max_abs_diff(full.choi(), ComplexMatrix::Identity(4, 4) / 4.0), 1e-15);
}

TEST(stochastic, qubit_parameterization_action) {
  const QubitParams p{{0.3, 0.5, 0.7}, {0.1, 0.2, 0.15}};
  const Channel phi = qubit_choi_bz(p);
  const CptpReport r = validate_cptp(phi);
  EXPECT_TRUE(r.is_tp);
  EXPECT_FALSE(r.is_unital);
  EXPECT_LE(max_abs_diff(stochan::apply(phi, pauli::x()), 0.3 * pauli::x()), 1e-14);
  EXPECT_LE(max_abs_diff(stochan::apply(phi, pauli::y()), 0.5 * pauli::y()), 1e-14);
  EXPECT_LE(max_abs_diff(stochan::apply(phi, pauli::z()), 0.7 * pauli::z()), 1e-14);
  const ComplexMatrix shift =
      pauli::i() + 0.1 * pauli::x() - 0.2 * pauli::y() + 0.15 * pauli::z();
  EXPECT_LE(max_abs_diff(stochan::apply(phi, pauli::i()), shift), 1e-14);
}

TEST(stochastic, qubit_parameterization_reports_unphysical_points) {
  const Channel phi = qubit_choi_bz({{1.0, 1.0, 1.0}, {0.5, 0.0, 0.0}});
  const CptpReport r = validate_cptp(phi);
  EXPECT_FALSE(r.is_cp);
  EXPECT_TRUE(r.is_tp);
}

TEST(stochastic, unital_iff_no_shift) {
  Rng rng = make_rng(23);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  for (int k = 0; k < 50; ++k) {
    QubitParams p{{u(rng), u(rng), u(rng)}, {0.0, 0.0, 0.0}};
    EXPECT_TRUE(validate_cptp(qubit_choi_bz(p)).is_unital);
    p.kappa[k % 3] = 0.1;
    EXPECT_FALSE(validate_cptp(qubit_choi_bz(p)).is_unital);
  }
}
