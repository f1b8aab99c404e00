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

#ifndef STOCHAN_TWIRL_HPP
#define STOCHAN_TWIRL_HPP

#include "stochan/channel.hpp"
#include "stochan/designs.hpp"

namespace stochan {

// Both twirl routes compute the per-element terms independently (in
// parallel when OpenMP is available) and then add them sequentially in design
// order. The *_serial variants are the single-threaded references; they
// produce bit-identical results.

/// sum_i w_i Ad_{u_i} o phi o Ad_{u_i^dagger}, composed on the Kraus side:
/// each term is choi_of({u_i L_k u_i^dagger}).
Channel twirl_definition(const Channel& phi, const UnitaryDesign& mu);
Channel twirl_definition_serial(const Channel& phi, const UnitaryDesign& mu);

/// sum_i w_i (u_i (x) conj(u_i)) J (u_i (x) conj(u_i))^dagger.
Channel twirl_choi(const Channel& phi, const UnitaryDesign& mu);
Channel twirl_choi_serial(const Channel& phi, const UnitaryDesign& mu);

}  // namespace stochan

#endif  // STOCHAN_TWIRL_HPP
