// Copyright 2026 The Taalwatch Authors.
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

#ifndef TAALWATCH_ERRORS_H_
#define TAALWATCH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace taalwatch {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that is well-formed at the I/O level but violates a format or
// domain invariant (bad lexicon line, out-of-range coordinate, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

// Failure to read or write a file, socket, or store.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace taalwatch

#endif  // TAALWATCH_ERRORS_H_
