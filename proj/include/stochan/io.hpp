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

#ifndef STOCHAN_IO_HPP
#define STOCHAN_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "stochan/channel.hpp"
#include "stochan/designs.hpp"

namespace stochan::io {

// Channel documents are JSON objects
//
//   {"dim": d, "kraus": [M, ...]}   or   {"dim": d, "choi": M}
//
// where a matrix M is a list of rows and every entry a [re, im] pair.
// Design documents are {"dim": d, "design": [{"weight": w, "unitary": M}, ...]}
// and unitary documents {"dim": d, "unitary": M}. Every parse failure throws
// ParseError, shape problems DimensionError.

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j, Index rows, Index cols);

Channel channel_from_json(const nlohmann::json& j);
/// Writes Kraus operators when the channel carries them, the Choi matrix
/// otherwise.
nlohmann::json channel_to_json(const Channel& phi);

UnitaryDesign design_from_json(const nlohmann::json& j);
nlohmann::json design_to_json(const UnitaryDesign& mu);

ComplexMatrix unitary_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

/// Resolves a constructor key or, failing that, a channel file path:
///   identity[:d]  depolarizing:alpha[,d]  pauli:p0,px,py,pz[,...]
///   paper-example:lambda,d  bz:ex,ey,ez,kx,ky,kz  random:d,seed[,kraus_count]
Channel parse_channel_spec(const std::string& spec);

/// pauli:n, wh:d, rotated:<design key>:<unitary file>, or a design file path.
UnitaryDesign parse_design_spec(const std::string& spec);

}  // namespace stochan::io

#endif  // STOCHAN_IO_HPP
