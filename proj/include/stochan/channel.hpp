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

#ifndef STOCHAN_CHANNEL_HPP
#define STOCHAN_CHANNEL_HPP

#include <optional>
#include <vector>

#include "stochan/matkernel.hpp"

namespace stochan {

using KrausList = std::vector<ComplexMatrix>;

/// A linear map on d x d matrices, stored by its normalized Choi state
///
///   J(phi) = (1/d) (phi (x) id)(col(1) col(1)^dagger),
///
/// a d^2 x d^2 matrix whose first tensor factor is the channel output. A Kraus
/// list may be attached as a cache; it never changes after construction.
class Channel {
 public:
  /// Takes ownership of a Choi matrix. Throws DimensionError for non-square
  /// or non-d^2 shapes and MatrixPropertyError if not Hermitian to 1e-10.
  static Channel from_choi(ComplexMatrix choi);

  Index dim() const { return dim_; }
  const ComplexMatrix& choi() const { return choi_; }
  bool has_kraus() const { return kraus_.has_value(); }
  /// Cached Kraus operators; empty optional if none were attached.
  const std::optional<KrausList>& kraus() const { return kraus_; }

  /// Copy of this channel with the canonical Kraus set cached.
  Channel with_canonical_kraus() const;

 private:
  Channel(Index dim, ComplexMatrix choi, std::optional<KrausList> kraus);

  Index dim_ = 0;
  ComplexMatrix choi_;
  std::optional<KrausList> kraus_;

  friend Channel choi_of(const KrausList& kraus, Index d);
  friend Channel sandwich(const ComplexMatrix& u, const Channel& phi,
                          const ComplexMatrix& v);
};

struct CptpReport {
  bool is_cp = false;
  double min_choi_eigenvalue = 0.0;
  bool is_tp = false;
  double tp_residual = 0.0;  // max-entry deviation of sum L^dag L from 1_d
  bool is_unital = false;
  double unitality_residual = 0.0;  // max-entry deviation of phi(1) from 1_d

  bool is_cptp() const { return is_cp && is_tp; }
};

/// J = (1/d) sum_k col(L_k^T) col(L_k^T)^dagger, with the Kraus list cached.
Channel choi_of(const KrausList& kraus, Index d);

/// sum_k L_k X L_k^dagger, using the cached Kraus list or, if absent, the
/// canonical one.
ComplexMatrix apply(const Channel& phi, const ComplexMatrix& x);

/// HS-orthogonal Kraus operators from the Choi eigendecomposition,
/// L_k = sqrt(d * lambda_k) * uncol(v_k)^T, eigenvalues descending and above
/// tol::kKrausCutoff. Throws MatrixPropertyError if the Choi matrix has an
/// eigenvalue below -tol::kCompletePositivity.
KrausList canonical_kraus(const Channel& phi);

CptpReport validate_cptp(const Channel& phi);

/// F_e = (1/d) col(1)^dagger J col(1); equals 1 for the identity channel.
double process_fidelity(const Channel& phi);
double process_infidelity(const Channel& phi);

/// Ad_u o phi o Ad_v, via J' = (u (x) v^T) J (u (x) v^T)^dagger.
/// Throws MatrixPropertyError unless u and v are unitary within 1e-9.
Channel sandwich(const ComplexMatrix& u, const Channel& phi,
                 const ComplexMatrix& v);

/// Kraus-side route to the same map: {u L_k v}.
KrausList sandwich_kraus(const ComplexMatrix& u, const KrausList& kraus,
                         const ComplexMatrix& v);

/// Choi matrix of the identity channel, (1/d) col(1) col(1)^dagger.
ComplexMatrix identity_choi(Index d);
Channel identity_channel(Index d);

/// Convex combination sum_i w_i phi_i at the Choi level.
Channel mix(const std::vector<double>& weights,
            const std::vector<Channel>& channels);

}  // namespace stochan

#endif  // STOCHAN_CHANNEL_HPP
