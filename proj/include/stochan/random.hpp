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

#ifndef STOCHAN_RANDOM_HPP
#define STOCHAN_RANDOM_HPP

#include <cstdint>
#include <random>

#include "stochan/channel.hpp"

namespace stochan {

using Rng = std::mt19937_64;

/// Generator for stream `stream` of a seeded family; streams are independent
/// of one another and of evaluation order.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Entries i.i.d. standard complex normal.
ComplexMatrix random_ginibre(Index rows, Index cols, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix random_unitary(Index d, Rng& rng);

/// Random CPTP map with `kraus_count` Kraus operators taken from the blocks
/// of a random isometry C^d -> C^(kraus_count * d). 0 means d^2.
Channel random_channel(Index d, Rng& rng, Index kraus_count = 0);

/// Random stochastic channel lambda * id + (1 - lambda) * phi_perp. phi_perp
/// mixes randomly rotated traceless Weyl-Heisenberg unitaries and, for even
/// d >= 4, a randomly rotated copy of the non-unital orthogonal part of
/// paper_example. lambda is drawn from [0.05, 0.95].
Channel random_stochastic_channel(Index d, Rng& rng);

}  // namespace stochan

#endif  // STOCHAN_RANDOM_HPP
