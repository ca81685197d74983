// Copyright 2026 The paritybit Authors
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

#ifndef PARITYBIT_ERRORS_H
#define PARITYBIT_ERRORS_H

#include <stdexcept>
#include <string>

namespace paritybit {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A signal or sweep parameter violates its documented bounds.
struct ParameterError : Error {
    using Error::Error;
};

/// A dense construction would exceed the configured dimension cap.
struct SizeError : Error {
    using Error::Error;
};

/// Input matrices do not have the expected sparsity pattern or shape.
struct StructureError : Error {
    using Error::Error;
};

/// A scalar argument lies outside the domain of the function.
struct DomainError : Error {
    using Error::Error;
};

/// The operation has no defined result for this kind of input (e.g. mixed signals).
struct UnsupportedError : Error {
    using Error::Error;
};

}  // namespace paritybit

#endif
