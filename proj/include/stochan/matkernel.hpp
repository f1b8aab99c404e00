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

#ifndef STOCHAN_MATKERNEL_HPP
#define STOCHAN_MATKERNEL_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace stochan {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace tol {
// max |M - M^dagger| accepted as Hermitian before symmetrization.
inline constexpr double kHermitian = 1e-10;
inline constexpr double kCompletePositivity = 1e-9;
inline constexpr double kTracePreservation = 1e-9;
inline constexpr double kUnitality = 1e-9;
inline constexpr double kUnitary = 1e-9;
// Choi eigenvalues at or below this are dropped from canonical Kraus sets.
inline constexpr double kKrausCutoff = 1e-12;
}  // namespace tol

/// Column-stacking vectorization: entry (i, j) lands at index j * rows + i.
ComplexVector col(const ComplexMatrix& m);

/// Inverse of col(). Throws DimensionError unless v.size() == rows * cols.
ComplexMatrix uncol(const ComplexVector& v, Index rows, Index cols);

/// Hilbert-Schmidt inner product tr(A^dagger B).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Sum of singular values. Square input only.
double trace_norm(const ComplexMatrix& m);

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

struct HermitianSpectrum {
  RealVector eigenvalues;     // descending
  ComplexMatrix eigenvectors;  // column k pairs with eigenvalues[k]

  double min_eigenvalue() const { return eigenvalues[eigenvalues.size() - 1]; }
  bool is_psd(double tolerance) const { return min_eigenvalue() >= -tolerance; }
};

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
/// (M + M^dagger) / 2 first; inputs further than `hermitian_tol` from
/// Hermitian are rejected. Ties keep the solver's index order.
HermitianSpectrum hermitian_spectral(const ComplexMatrix& m,
                                     double hermitian_tol = tol::kHermitian);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |M - M^dagger|_ij
double hermiticity_residual(const ComplexMatrix& m);

bool is_unitary(const ComplexMatrix& u, double tolerance = tol::kUnitary);

/// Partial traces of an operator on C^first (x) C^second (first factor is
/// the major index, matching kron()).
ComplexMatrix partial_trace_first(const ComplexMatrix& m, Index first,
                                  Index second);
ComplexMatrix partial_trace_second(const ComplexMatrix& m, Index first,
                                   Index second);

/// Principal square root of a PSD matrix; negative eigenvalues clip to 0.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Projection of a Hermitian matrix onto the PSD cone.
ComplexMatrix psd_part(const ComplexMatrix& m);

/// |i><j| in dimension d.
ComplexMatrix ket_bra(Index i, Index j, Index d);

namespace pauli {
ComplexMatrix i();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
/// Pauli string from indices 0..3 (I, X, Y, Z); first entry is the most
/// significant tensor factor.
ComplexMatrix string(const std::vector<int>& indices);
}  // namespace pauli

}  // namespace stochan

#endif  // STOCHAN_MATKERNEL_HPP
