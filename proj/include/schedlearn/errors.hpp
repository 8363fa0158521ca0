// Copyright 2026 The schedlearn Authors
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

#ifndef SCHEDLEARN_ERRORS_HPP
#define SCHEDLEARN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace schedlearn {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown dimension names or value labels, mismatched or invalid schemas.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Violated operation preconditions (wrong arity, empty dimension sets, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed or semantically invalid input documents.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace schedlearn

#endif  // SCHEDLEARN_ERRORS_HPP
