/*
   Copyright 2026 The cda Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace cda {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a truncated series does not carry enough known terms.
class PrecisionError : public Error {
public:
    using Error::Error;
};

/// Raised when operands live in different fields, algebras or contexts.
class DomainMismatch : public Error {
public:
    using Error::Error;
};

/// Invariant violation inside an algorithm; always a bug, never user input.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration or command-line input.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace cda
