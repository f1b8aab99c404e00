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


#include "stochan/designs.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "stochan/errors.hpp"
#include "stochan/random.hpp"

using namespace stochan;

TEST(designs, pauli_and_weyl_heisenberg_are_1_designs) {
  for (const int n : {1, 2, 3}) {
    const UnitaryDesign mu = pauli_design(n);
    EXPECT_EQ(mu.elements.size(), size_t(1) << (2 * n));
    const DesignCheck c = verify_1design(mu);
    EXPECT_TRUE(c.passes);
    EXPECT_LE(c.residual, 1e-11);
  }
  for (Index d = 2; d <= 6; ++d) {
    const UnitaryDesign mu = weyl_heisenberg_design(d);
    EXPECT_EQ(Index(mu.elements.size()), d * d);
    EXPECT_NEAR(mu.elements[1].weight, 1.0 / double(d * d), 1e-16);
    const DesignCheck c = verify_1design(mu);
    EXPECT_TRUE(c.passes);
    EXPECT_LE(c.residual, 1e-11);
  }
}

TEST(designs, averaging_gives_the_trace) {
  // sum_i w_i u X u^dagger = tr(X)/d 1, checked directly on random X.
  Rng rng = make_rng(31);
  for (Index d = 2; d <= 5; ++d) {
    const UnitaryDesign mu = weyl_heisenberg_design(d);
    const ComplexMatrix x = random_ginibre(d, d, rng);
    ComplexMatrix avg = ComplexMatrix::Zero(d, d);
    for (const auto& e : mu.elements) avg += e.weight * e.unitary * x * e.unitary.adjoint();
    EXPECT_LE(max_abs_diff(avg, (x.trace() / double(d)) * ComplexMatrix::Identity(d, d)),
              1e-13);
  }
}

TEST(designs, clock_and_shift_commutation) {
  for (Index d = 2; d <= 6; ++d) {
    const ComplexMatrix x = shift_matrix(d);
    const ComplexMatrix z = clock_matrix(d);
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / double(d));
    EXPECT_LE(max_abs_diff(z * x, w * x * z), 1e-13);
    EXPECT_EQ(x(1, 0), Complex(1.0));
    EXPECT_EQ(x(0, d - 1), Complex(1.0));
  }
}

TEST(designs, rotation_preserves_the_design_property) {
  Rng rng = make_rng(32);
  const UnitaryDesign mu = rotated_design(random_unitary(4, rng), weyl_heisenberg_design(4));
  EXPECT_TRUE(verify_1design(mu).passes);
  EXPECT_THROW(rotated_design(random_unitary(3, rng), pauli_design(1)), DimensionError);
}

TEST(designs, non_designs_fail) {
  const UnitaryDesign trivial{2, {{1.0, ComplexMatrix::Identity(2, 2)}}};
  const UnitaryDesign dephasing{
      2, {{0.5, ComplexMatrix::Identity(2, 2)}, {0.5, pauli::z()}}};
  EXPECT_FALSE(verify_1design(trivial).passes);
  const DesignCheck c = verify_1design(dephasing);
  EXPECT_FALSE(c.passes);
  EXPECT_NEAR(c.residual, 0.5, 1e-14);
}

TEST(designs, validation_errors) {
  UnitaryDesign bad_weights{2, {{0.7, ComplexMatrix::Identity(2, 2)}}};
  EXPECT_THROW(bad_weights.validate(), ParameterError);
  UnitaryDesign not_unitary{2, {{1.0, 2.0 * ComplexMatrix::Identity(2, 2)}}};
  EXPECT_THROW(not_unitary.validate(), MatrixPropertyError);
  UnitaryDesign wrong_dim{3, {{1.0, ComplexMatrix::Identity(2, 2)}}};
  EXPECT_THROW(wrong_dim.validate(), DimensionError);
  EXPECT_THROW(weyl_heisenberg_design(1), ParameterError);
  EXPECT_THROW(pauli_design(0), ParameterError);
}
