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

#include "stochan/matkernel.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stochan/errors.hpp"

namespace stochan {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": matrix must be square, got " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
}

}  // namespace

ComplexVector col(const ComplexMatrix& m) {
  // Eigen storage is column-major, so the raw buffer already is col(m).
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix uncol(const ComplexVector& v, Index rows, Index cols) {
  if (rows <= 0 || cols <= 0 || v.size() != rows * cols) {
    throw DimensionError("uncol: vector of length " + std::to_string(v.size()) +
                         " cannot fill a " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " matrix");
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), rows, cols);
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_inner: shape mismatch");
  }
  return (a.adjoint() * b).trace();
}

double trace_norm(const ComplexMatrix& m) {
  require_square(m, "trace_norm");
  if (m.size() == 0) return 0.0;
  if (hermiticity_residual(m) <= tol::kHermitian) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(
        (m + m.adjoint()) * 0.5, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

HermitianSpectrum hermitian_spectral(const ComplexMatrix& m,
                                     double hermitian_tol) {
  require_square(m, "hermitian_spectral");
  const double residual = hermiticity_residual(m);
  if (residual > hermitian_tol) {
    throw MatrixPropertyError("hermitian_spectral: matrix is not Hermitian (" +
                              std::to_string(residual) + ")");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((m + m.adjoint()) * 0.5);
  if (es.info() != Eigen::Success) {
    throw MatrixPropertyError("hermitian_spectral: eigensolver failed");
  }
  const Index n = m.rows();
  std::vector<Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  const auto& values = es.eigenvalues();
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return values(a) > values(b); });

  HermitianSpectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = values(order[k]);
    out.eigenvectors.col(k) = es.eigenvectors().col(order[k]);
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double hermiticity_residual(const ComplexMatrix& m) {
  require_square(m, "hermiticity_residual");
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& u, double tolerance) {
  if (u.rows() != u.cols()) return false;
  const ComplexMatrix gram = u.adjoint() * u;
  return max_abs_diff(gram, ComplexMatrix::Identity(u.rows(), u.cols())) <=
         tolerance;
}

ComplexMatrix partial_trace_first(const ComplexMatrix& m, Index first,
                                  Index second) {
  if (m.rows() != first * second || m.cols() != first * second) {
    throw DimensionError("partial_trace_first: shape mismatch");
  }
  ComplexMatrix out = ComplexMatrix::Zero(second, second);
  for (Index a = 0; a < first; ++a) {
    out += m.block(a * second, a * second, second, second);
  }
  return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& m, Index first,
                                   Index second) {
  if (m.rows() != first * second || m.cols() != first * second) {
    throw DimensionError("partial_trace_second: shape mismatch");
  }
  ComplexMatrix out(first, first);
  for (Index a = 0; a < first; ++a) {
    for (Index b = 0; b < first; ++b) {
      out(a, b) = m.block(a * second, b * second, second, second).trace();
    }
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const HermitianSpectrum s = hermitian_spectral(m, 1e-8);
  const RealVector roots = s.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  return s.eigenvectors * roots.cast<Complex>().asDiagonal() *
         s.eigenvectors.adjoint();
}

ComplexMatrix psd_part(const ComplexMatrix& m) {
  const HermitianSpectrum s = hermitian_spectral(m, 1e-8);
  const RealVector clipped = s.eigenvalues.cwiseMax(0.0);
  return s.eigenvectors * clipped.cast<Complex>().asDiagonal() *
         s.eigenvectors.adjoint();
}

ComplexMatrix ket_bra(Index i, Index j, Index d) {
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  out(i, j) = 1.0;
  return out;
}

namespace pauli {

ComplexMatrix i() { return ComplexMatrix::Identity(2, 2); }

ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexMatrix string(const std::vector<int>& indices) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (const int k : indices) {
    switch (k) {
      case 0: out = kron(out, i()); break;
      case 1: out = kron(out, x()); break;
      case 2: out = kron(out, y()); break;
      case 3: out = kron(out, z()); break;
      default:
        throw ParameterError("pauli::string: index must be in 0..3");
    }
  }
  return out;
}

}  // namespace pauli

}  // namespace stochan
