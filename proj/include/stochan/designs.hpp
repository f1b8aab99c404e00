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

#ifndef STOCHAN_DESIGNS_HPP
#define STOCHAN_DESIGNS_HPP

#include <vector>

#include "stochan/matkernel.hpp"

namespace stochan {

struct DesignElement {
  double weight = 0.0;
  ComplexMatrix unitary;
};

/// A finite weighted set of unitaries standing in for a measure on U(d).
struct UnitaryDesign {
  Index dim = 0;
  std::vector<DesignElement> elements;

  /// Checks weights (positive, sum 1 within 1e-12) and unitarity (1e-10).
  /// Throws ParameterError / MatrixPropertyError / DimensionError.
  void validate() const;
};

struct DesignCheck {
  bool passes = false;
  double residual = 0.0;  // max-entry |sum w u (x) conj(u) - col(1)col(1)^dag / d|
};

/// 1-design test through the averaged operator sum_i w_i u_i (x) conj(u_i).
DesignCheck verify_1design(const UnitaryDesign& mu, double tol = 1e-9);

/// Uniform weights over the 4^n Pauli strings.
UnitaryDesign pauli_design(int n_qubits);

/// Uniform weights over X^a Z^b, a, b in 0..d-1, ordered by (a, b).
UnitaryDesign weyl_heisenberg_design(Index d);

/// Cyclic shift |j> -> |j+1 mod d> and clock diag(1, w, ..., w^(d-1)).
ComplexMatrix shift_matrix(Index d);
ComplexMatrix clock_matrix(Index d);

/// Conjugates every element by U (u -> U u U^dagger), same weights.
UnitaryDesign rotated_design(const ComplexMatrix& u, const UnitaryDesign& mu);

}  // namespace stochan

#endif  // STOCHAN_DESIGNS_HPP
