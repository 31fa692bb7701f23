// Copyright 2026 The yhk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef YHK_ERRORS_HPP
#define YHK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace yhk {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: out-of-range index, rank mismatch, malformed expression.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Division by zero or evaluation at a pole.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size guard was exceeded (support size, dimension, rank).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; the message carries the diagnostic.
class CheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace yhk

#endif  // YHK_ERRORS_HPP
