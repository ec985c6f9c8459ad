/*
 * Copyright 2026 The lrqbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LRQ_ERROR_HPP
#define LRQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lrq {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A templated topology was asked for a node count it does not define.
struct SizeMismatchError : Error {
    using Error::Error;
};

/// The exact optimum cannot be computed locally and none was supplied.
struct OptimumUnavailableError : Error {
    using Error::Error;
};

/// A simulation request exceeds the configured qubit cap.
struct ResourceError : Error {
    using Error::Error;
};

/// Malformed input text (instance, circuit, or sample files).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace lrq

#endif
