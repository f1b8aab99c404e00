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

#include <string>
#include <vector>

#include "stochan/errors.hpp"

namespace stochan {

namespace {

void require_same_dim(const Channel& phi, const UnitaryDesign& mu) {
  if (phi.dim() != mu.dim) {
    throw DimensionError("twirl: channel dimension " + std::to_string(phi.dim()) +
                         " does not match design dimension " +
                         std::to_string(mu.dim));
  }
}

ComplexMatrix definition_term(const KrausList& kraus, const DesignElement& e,
                              Index d) {
  return e.weight *
         choi_of(sandwich_kraus(e.unitary, kraus, e.unitary.adjoint()), d).choi();
}

ComplexMatrix choi_term(const ComplexMatrix& choi, const DesignElement& e) {
  const ComplexMatrix w = kron(e.unitary, e.unitary.conjugate());
  return e.weight * (w * choi * w.adjoint());
}

Channel reduce_in_order(const std::vector<ComplexMatrix>& terms, Index d) {
  ComplexMatrix sum = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& t : terms) sum += t;
  return Channel::from_choi(std::move(sum));
}

}  // namespace

Channel twirl_definition(const Channel& phi, const UnitaryDesign& mu) {
  require_same_dim(phi, mu);
  const KrausList kraus = phi.has_kraus() ? *phi.kraus() : canonical_kraus(phi);
  const auto n = static_cast<long>(mu.elements.size());
  std::vector<ComplexMatrix> terms(mu.elements.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    terms[size_t(i)] = definition_term(kraus, mu.elements[size_t(i)], phi.dim());
  }
  return reduce_in_order(terms, phi.dim());
}

Channel twirl_definition_serial(const Channel& phi, const UnitaryDesign& mu) {
  require_same_dim(phi, mu);
  const KrausList kraus = phi.has_kraus() ? *phi.kraus() : canonical_kraus(phi);
  std::vector<ComplexMatrix> terms;
  terms.reserve(mu.elements.size());
  for (const auto& e : mu.elements) {
    terms.push_back(definition_term(kraus, e, phi.dim()));
  }
  return reduce_in_order(terms, phi.dim());
}

Channel twirl_choi(const Channel& phi, const UnitaryDesign& mu) {
  require_same_dim(phi, mu);
  const auto n = static_cast<long>(mu.elements.size());
  std::vector<ComplexMatrix> terms(mu.elements.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    terms[size_t(i)] = choi_term(phi.choi(), mu.elements[size_t(i)]);
  }
  return reduce_in_order(terms, phi.dim());
}

Channel twirl_choi_serial(const Channel& phi, const UnitaryDesign& mu) {
  require_same_dim(phi, mu);
  std::vector<ComplexMatrix> terms;
  terms.reserve(mu.elements.size());
  for (const auto& e : mu.elements) terms.push_back(choi_term(phi.choi(), e));
  return reduce_in_order(terms, phi.dim());
}

}  // namespace stochan
