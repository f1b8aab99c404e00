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

#include "stochan/random.hpp"

#include <cmath>

#include "stochan/designs.hpp"
#include "stochan/errors.hpp"
#include "stochan/stochastic.hpp"

namespace stochan {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

ComplexMatrix random_ginibre(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  return m;
}

ComplexMatrix random_unitary(Index d, Rng& rng) {
  const ComplexMatrix g = random_ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < d; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

Channel random_channel(Index d, Rng& rng, Index kraus_count) {
  if (d < 1) throw ParameterError("random_channel: d must be positive");
  if (kraus_count <= 0) kraus_count = d * d;
  const ComplexMatrix g = random_ginibre(kraus_count * d, d, rng);
  // Isometry V = G (G^dag G)^{-1/2}; its d x d blocks form a TP Kraus set.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g.adjoint() * g);
  const ComplexMatrix inv_sqrt =
      es.eigenvectors() *
      es.eigenvalues().cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() *
      es.eigenvectors().adjoint();
  const ComplexMatrix v = g * inv_sqrt;
  KrausList kraus;
  for (Index k = 0; k < kraus_count; ++k) kraus.push_back(v.middleRows(k * d, d));
  return choi_of(kraus, d);
}

Channel random_stochastic_channel(Index d, Rng& rng) {
  if (d < 2) throw ParameterError("random_stochastic_channel: d must be >= 2");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double lambda = 0.05 + 0.9 * unit(rng);

  const UnitaryDesign wh = weyl_heisenberg_design(d);
  const int terms = 1 + static_cast<int>(unit(rng) * 3.0);
  const bool with_nonunital = d >= 4 && d % 2 == 0 && unit(rng) < 0.5;

  std::vector<double> weights;
  std::vector<Channel> parts;
  std::uniform_int_distribution<size_t> pick(1, wh.elements.size() - 1);
  for (int t = 0; t < terms; ++t) {
    // V W V^dag stays traceless for every non-identity WH element W.
    const ComplexMatrix v = random_unitary(d, rng);
    const ComplexMatrix w = wh.elements[pick(rng)].unitary;
    parts.push_back(choi_of({v * w * v.adjoint()}, d));
    weights.push_back(0.2 + unit(rng));
  }
  if (with_nonunital) {
    const auto split = decompose(paper_example(0.5, d));
    const ComplexMatrix v = random_unitary(d, rng);
    parts.push_back(sandwich(v, *split.orthogonal_part, v.adjoint()));
    weights.push_back(0.2 + unit(rng));
  }
  double total = 0.0;
  for (const double w : weights) total += w;
  for (double& w : weights) w *= (1.0 - lambda) / total;

  weights.push_back(lambda);
  parts.push_back(identity_channel(d));
  return mix(weights, parts);
}

}  // namespace stochan
