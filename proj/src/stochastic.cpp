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
#include <numeric>
#include <string>

#include "stochan/errors.hpp"

namespace stochan {

std::optional<double> stochastic_eigenvalue(const Channel& phi, double tol) {
  const Index d = phi.dim();
  const ComplexVector omega = col(ComplexMatrix::Identity(d, d));
  const ComplexVector w = phi.choi() * omega;
  const double lambda = omega.dot(w).real() / double(d);
  if (lambda <= tol) return std::nullopt;
  const double residual = (w - lambda * omega).cwiseAbs().maxCoeff();
  if (residual > tol * std::sqrt(double(d))) return std::nullopt;
  return lambda;
}

StochasticDecomposition decompose(const Channel& phi, double tol) {
  const auto lambda = stochastic_eigenvalue(phi, tol);
  if (!lambda) {
    throw NotStochasticError(
        "decompose: col(1) is not an eigenvector of the Choi matrix with a "
        "positive eigenvalue");
  }
  StochasticDecomposition out;
  out.lambda = *lambda;
  if (1.0 - out.lambda <= tol) {
    out.lambda = 1.0;
    return out;
  }
  const Index d = phi.dim();
  ComplexMatrix rest =
      (phi.choi() - out.lambda * identity_choi(d)) / (1.0 - out.lambda);
  out.orthogonal_part = Channel::from_choi(std::move(rest));
  return out;
}

Channel paper_example(double lam, Index d) {
  if (!(lam > 0.0 && lam <= 1.0)) {
    throw ParameterError("paper_example: lambda must lie in (0, 1]");
  }
  if (d < 4 || d % 2 != 0) {
    throw ParameterError("paper_example: d must be even and at least 4");
  }
  const Index m = d / 2;
  KrausList kraus{std::sqrt(lam) * ComplexMatrix::Identity(d, d)};
  if (lam < 1.0) {
    for (Index j = 0; j < m; ++j) {
      kraus.push_back(std::sqrt(1.0 - lam) * kron(pauli::z(), ket_bra(0, j, m)));
    }
  }
  return choi_of(kraus, d);
}

Channel depolarizing(double alpha, Index d) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ParameterError("depolarizing: alpha must lie in [0, 1]");
  }
  if (d < 1) throw ParameterError("depolarizing: d must be positive");
  const Index n = d * d;
  ComplexMatrix choi = alpha * identity_choi(d) +
                       (1.0 - alpha) / double(n) * ComplexMatrix::Identity(n, n);
  return Channel::from_choi(std::move(choi));
}

Channel pauli_channel(const std::vector<double>& probabilities) {
  const size_t count = probabilities.size();
  int qubits = 0;
  size_t size = 1;
  while (size < count) {
    size *= 4;
    ++qubits;
  }
  if (count == 0 || size != count || qubits == 0) {
    throw ParameterError("pauli_channel: need 4^n probabilities, got " +
                         std::to_string(count));
  }
  double total = 0.0;
  for (const double p : probabilities) {
    if (!(p >= 0.0)) throw ParameterError("pauli_channel: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ParameterError("pauli_channel: probabilities must sum to 1");
  }
  const Index d = Index{1} << qubits;
  KrausList kraus;
  for (size_t k = 0; k < count; ++k) {
    if (probabilities[k] == 0.0) continue;
    std::vector<int> digits(static_cast<size_t>(qubits));
    size_t rest = k;
    for (int q = qubits - 1; q >= 0; --q) {
      digits[static_cast<size_t>(q)] = static_cast<int>(rest % 4);
      rest /= 4;
    }
    kraus.push_back(std::sqrt(probabilities[k]) * pauli::string(digits));
  }
  return choi_of(kraus, d);
}

Channel qubit_choi_bz(const QubitParams& params) {
  const auto [ex, ey, ez] = params.eta;
  const auto [kx, ky, kz] = params.kappa;
  const Complex kp(kx, ky);
  const Complex km(kx, -ky);
  ComplexMatrix j(4, 4);
  // Entries exactly as printed; the (1,4) pair carries eta_x + eta_y.
  j << 1.0 + ez + kz, 0.0, kp, ex + ey,
       0.0, 1.0 - ez + kz, ex - ey, kp,
       km, ex - ey, 1.0 - ez - kz, 0.0,
       ex + ey, km, 0.0, 1.0 + ez - kz;
  return Channel::from_choi(j / 4.0);
}

}  // namespace stochan
