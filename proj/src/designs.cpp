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
#include <string>

#include "stochan/errors.hpp"

namespace stochan {

void UnitaryDesign::validate() const {
  if (dim <= 0) throw DimensionError("design: dimension must be positive");
  if (elements.empty()) throw ParameterError("design: no elements");
  double total = 0.0;
  for (const auto& e : elements) {
    if (!(e.weight > 0.0)) throw ParameterError("design: weights must be positive");
    if (e.unitary.rows() != dim || e.unitary.cols() != dim) {
      throw DimensionError("design: element is not " + std::to_string(dim) +
                           "x" + std::to_string(dim));
    }
    if (!is_unitary(e.unitary, 1e-10)) {
      throw MatrixPropertyError("design: element is not unitary");
    }
    total += e.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ParameterError("design: weights sum to " + std::to_string(total));
  }
}

DesignCheck verify_1design(const UnitaryDesign& mu, double tol) {
  const Index d = mu.dim;
  ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& e : mu.elements) {
    s.noalias() += e.weight * kron(e.unitary, e.unitary.conjugate());
  }
  const ComplexVector omega = col(ComplexMatrix::Identity(d, d));
  const ComplexMatrix target = omega * omega.adjoint() / double(d);
  DesignCheck out;
  out.residual = max_abs_diff(s, target);
  out.passes = out.residual <= tol;
  return out;
}

UnitaryDesign pauli_design(int n_qubits) {
  if (n_qubits < 1) throw ParameterError("pauli_design: n must be >= 1");
  const size_t count = size_t{1} << (2 * n_qubits);
  UnitaryDesign mu;
  mu.dim = Index{1} << n_qubits;
  mu.elements.reserve(count);
  for (size_t k = 0; k < count; ++k) {
    std::vector<int> digits(static_cast<size_t>(n_qubits));
    size_t rest = k;
    for (int q = n_qubits - 1; q >= 0; --q) {
      digits[static_cast<size_t>(q)] = static_cast<int>(rest % 4);
      rest /= 4;
    }
    mu.elements.push_back({1.0 / double(count), pauli::string(digits)});
  }
  return mu;
}

ComplexMatrix shift_matrix(Index d) {
  ComplexMatrix x = ComplexMatrix::Zero(d, d);
  for (Index j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  return x;
}

ComplexMatrix clock_matrix(Index d) {
  ComplexMatrix z = ComplexMatrix::Zero(d, d);
  for (Index j = 0; j < d; ++j) {
    z(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * double(j) / double(d));
  }
  return z;
}

UnitaryDesign weyl_heisenberg_design(Index d) {
  if (d < 2) throw ParameterError("weyl_heisenberg_design: d must be >= 2");
  const ComplexMatrix x = shift_matrix(d);
  const ComplexMatrix z = clock_matrix(d);
  UnitaryDesign mu;
  mu.dim = d;
  mu.elements.reserve(static_cast<size_t>(d * d));
  ComplexMatrix xa = ComplexMatrix::Identity(d, d);
  for (Index a = 0; a < d; ++a) {
    ComplexMatrix zb = ComplexMatrix::Identity(d, d);
    for (Index b = 0; b < d; ++b) {
      mu.elements.push_back({1.0 / double(d * d), xa * zb});
      zb = zb * z;
    }
    xa = xa * x;
  }
  return mu;
}

UnitaryDesign rotated_design(const ComplexMatrix& u, const UnitaryDesign& mu) {
  if (u.rows() != mu.dim || u.cols() != mu.dim) {
    throw DimensionError("rotated_design: rotation dimension mismatch");
  }
  if (!is_unitary(u)) throw MatrixPropertyError("rotated_design: U is not unitary");
  UnitaryDesign out;
  out.dim = mu.dim;
  out.elements.reserve(mu.elements.size());
  for (const auto& e : mu.elements) {
    out.elements.push_back({e.weight, u * e.unitary * u.adjoint()});
  }
  return out;
}

}  // namespace stochan
