/*
 * Copyright 2026 The modpoly Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MODPOLY_ERRORS_HPP_
#define MODPOLY_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace modpoly {

// Base class of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arithmetic input: division by zero, mixing fields, off-curve points.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an algorithm does not hold for the given
// inputs (e.g. too few supersingular invariants for the requested ell).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A condition that the mathematics guarantees was violated. Reaching one of
// these means a bug, not a bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace modpoly

#endif  // MODPOLY_ERRORS_HPP_
