// Copyright 2026 The sbmsdp Authors.
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

#ifndef SBMSDP_ERRORS_H_
#define SBMSDP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sbmsdp {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Model parameters produce an invalid edge probability or violate p > q.
class ParamOutOfRange : public Error {
 public:
  using Error::Error;
};

class MismatchedPartition : public Error {
 public:
  using Error::Error;
};

class BadDimensions : public Error {
 public:
  using Error::Error;
};

// The symmetric eigensolver failed to converge.
class NumericalBreakdown : public Error {
 public:
  using Error::Error;
};

// A bound function was evaluated outside its validity region.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An adversary action violates monotonicity or the current edge state.
class InvalidAction : public Error {
 public:
  InvalidAction(std::size_t index, const std::string& reason)
      : Error("invalid action #" + std::to_string(index) + ": " + reason),
        index_(index),
        reason_(reason) {}

  std::size_t index() const { return index_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t index_;
  std::string reason_;
};

// Malformed input file. The message carries line/column diagnostics.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sbmsdp

#endif  // SBMSDP_ERRORS_H_
