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

#include "stochan/channel.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "stochan/errors.hpp"

namespace stochan {

namespace {

Index dim_from_choi_size(Index n) {
  const auto d = static_cast<Index>(std::llround(std::sqrt(double(n))));
  if (d <= 0 || d * d != n) {
    throw DimensionError("Choi matrix size " + std::to_string(n) +
                         " is not a perfect square");
  }
  return d;
}

}  // namespace

Channel::Channel(Index dim, ComplexMatrix choi, std::optional<KrausList> kraus)
    : dim_(dim), choi_(std::move(choi)), kraus_(std::move(kraus)) {}

Channel Channel::from_choi(ComplexMatrix choi) {
  if (choi.rows() != choi.cols()) {
    throw DimensionError("Choi matrix must be square");
  }
  const Index d = dim_from_choi_size(choi.rows());
  const double residual = hermiticity_residual(choi);
  if (residual > tol::kHermitian) {
    throw MatrixPropertyError("Choi matrix is not Hermitian (residual " +
                              std::to_string(residual) + ")");
  }
  ComplexMatrix hermitian = (choi + choi.adjoint()) * 0.5;
  return Channel(d, std::move(hermitian), std::nullopt);
}

Channel Channel::with_canonical_kraus() const {
  return Channel(dim_, choi_, canonical_kraus(*this));
}

Channel choi_of(const KrausList& kraus, Index d) {
  if (d <= 0) throw DimensionError("choi_of: dimension must be positive");
  if (kraus.empty()) throw DimensionError("choi_of: empty Kraus list");
  ComplexMatrix choi = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& l : kraus) {
    if (l.rows() != d || l.cols() != d) {
      throw DimensionError("choi_of: Kraus operator is " +
                           std::to_string(l.rows()) + "x" +
                           std::to_string(l.cols()) + ", expected " +
                           std::to_string(d) + "x" + std::to_string(d));
    }
    const ComplexVector v = col(l.transpose());
    choi.noalias() += v * v.adjoint();
  }
  choi /= static_cast<double>(d);
  return Channel(d, std::move(choi), kraus);
}

KrausList canonical_kraus(const Channel& phi) {
  const Index d = phi.dim();
  const HermitianSpectrum s = hermitian_spectral(phi.choi());
  if (!s.is_psd(tol::kCompletePositivity)) {
    throw MatrixPropertyError(
        "canonical_kraus: Choi matrix is not positive semidefinite (min "
        "eigenvalue " +
        std::to_string(s.min_eigenvalue()) + ")");
  }
  KrausList out;
  for (Index k = 0; k < s.eigenvalues.size(); ++k) {
    const double lambda = s.eigenvalues(k);
    if (lambda <= tol::kKrausCutoff) break;
    out.push_back(std::sqrt(double(d) * lambda) *
                  uncol(s.eigenvectors.col(k), d, d).transpose());
  }
  return out;
}

ComplexMatrix apply(const Channel& phi, const ComplexMatrix& x) {
  const Index d = phi.dim();
  if (x.rows() != d || x.cols() != d) {
    throw DimensionError("apply: input must be " + std::to_string(d) + "x" +
                         std::to_string(d));
  }
  const KrausList kraus =
      phi.has_kraus() ? *phi.kraus() : canonical_kraus(phi);
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& l : kraus) out.noalias() += l * x * l.adjoint();
  return out;
}

CptpReport validate_cptp(const Channel& phi) {
  const Index d = phi.dim();
  const ComplexMatrix identity = ComplexMatrix::Identity(d, d);
  CptpReport r;
  r.min_choi_eigenvalue = hermitian_spectral(phi.choi()).min_eigenvalue();
  r.is_cp = r.min_choi_eigenvalue >= -tol::kCompletePositivity;

  // sum_k L_k^dag L_k = d * Tr_out(J)^T and phi(1) = d * Tr_in(J); both are
  // read off the Choi matrix so the report also covers non-CP inputs.
  const ComplexMatrix tp =
      double(d) * partial_trace_first(phi.choi(), d, d).transpose();
  r.tp_residual = max_abs_diff(tp, identity);
  r.is_tp = r.tp_residual <= tol::kTracePreservation;

  const ComplexMatrix image = double(d) * partial_trace_second(phi.choi(), d, d);
  r.unitality_residual = max_abs_diff(image, identity);
  r.is_unital = r.unitality_residual <= tol::kUnitality;
  return r;
}

double process_fidelity(const Channel& phi) {
  const Index d = phi.dim();
  // col(1) has ones exactly at indices i * (d + 1).
  Complex sum = 0.0;
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) sum += phi.choi()(i * (d + 1), j * (d + 1));
  }
  return sum.real() / double(d);
}

double process_infidelity(const Channel& phi) {
  return 1.0 - process_fidelity(phi);
}

Channel sandwich(const ComplexMatrix& u, const Channel& phi,
                 const ComplexMatrix& v) {
  const Index d = phi.dim();
  if (u.rows() != d || u.cols() != d || v.rows() != d || v.cols() != d) {
    throw DimensionError("sandwich: unitaries must match the channel dimension");
  }
  if (!is_unitary(u) || !is_unitary(v)) {
    throw MatrixPropertyError("sandwich: u and v must be unitary");
  }
  const ComplexMatrix w = kron(u, v.transpose());
  ComplexMatrix choi = w * phi.choi() * w.adjoint();
  choi = (choi + choi.adjoint()) * 0.5;
  std::optional<KrausList> kraus;
  if (phi.has_kraus()) kraus = sandwich_kraus(u, *phi.kraus(), v);
  return Channel(d, std::move(choi), std::move(kraus));
}

KrausList sandwich_kraus(const ComplexMatrix& u, const KrausList& kraus,
                         const ComplexMatrix& v) {
  KrausList out;
  out.reserve(kraus.size());
  for (const auto& l : kraus) out.push_back(u * l * v);
  return out;
}

ComplexMatrix identity_choi(Index d) {
  const ComplexVector omega = col(ComplexMatrix::Identity(d, d));
  return omega * omega.adjoint() / double(d);
}

Channel identity_channel(Index d) {
  return choi_of({ComplexMatrix::Identity(d, d)}, d);
}

Channel mix(const std::vector<double>& weights,
            const std::vector<Channel>& channels) {
  if (weights.size() != channels.size() || channels.empty()) {
    throw DimensionError("mix: weights and channels must be non-empty and "
                         "of equal length");
  }
  const Index d = channels.front().dim();
  ComplexMatrix choi = ComplexMatrix::Zero(d * d, d * d);
  for (size_t i = 0; i < channels.size(); ++i) {
    if (channels[i].dim() != d) throw DimensionError("mix: dimension mismatch");
    if (weights[i] < 0.0) throw ParameterError("mix: negative weight");
    choi += weights[i] * channels[i].choi();
  }
  return Channel::from_choi(std::move(choi));
}

}  // namespace stochan
