//
// Copyright (c) 2026 The voigt library authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#pragma once

#include <stdexcept>

namespace voigt {

/// Rejected argument (NaN/Inf input, negative erfcx argument, bad grid spec).
class InvalidInputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Lower half-plane point where exp(y^2 - x^2) exceeds the largest finite value.
class OverflowDomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Reference evaluator could not meet the requested error target.
class ConvergenceFailureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Safety net tripped (loop cap, unconverged continued fraction). Never a
/// silent wrong answer.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace voigt
