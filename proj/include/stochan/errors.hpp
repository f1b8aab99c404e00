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

#ifndef STOCHAN_ERRORS_HPP
#define STOCHAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stochan {

// Shapes or dimensions that do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A matrix failed a structural precondition (Hermitian, PSD, unitary).
class MatrixPropertyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Scalar parameter outside its admissible range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotStochasticError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotCptpError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed channel/design files or constructor keys.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stochan

#endif  // STOCHAN_ERRORS_HPP
