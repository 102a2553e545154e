// Copyright 2026 The Stablematch Authors.
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

#ifndef STABLEMATCH_ERRORS_H_
#define STABLEMATCH_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stablematch {

// Base of every error thrown by the library. The subclasses map one-to-one
// onto the command-line exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance or matching text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A precondition on ids or structure does not hold (unknown id, list that is
// not a permutation, matching that is not 1:1, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The instance is too small or too large for the requested operation.
class SizeError : public Error {
 public:
  using Error::Error;
};

// An engine state or proposal history contradicts itself or its instance.
class StateError : public Error {
 public:
  using Error::Error;
};

class GeneratorExhausted : public Error {
 public:
  GeneratorExhausted(std::uint64_t attempts, const std::string& what)
      : Error(what), attempts_(attempts) {}

  std::uint64_t attempts() const { return attempts_; }

 private:
  std::uint64_t attempts_;
};

}  // namespace stablematch

#endif  // STABLEMATCH_ERRORS_H_
