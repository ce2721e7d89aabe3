/* Copyright 2026 The mzbell Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MZBELL_ERROR_HPP_
#define MZBELL_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mzbell {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands disagree on truncation dimension, or a product space is too large.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  NotHermitianError(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

// The truncated Fock space cannot hold the requested state to tolerance.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// A value together with non-fatal diagnostics produced while computing it.
template <class T>
struct Checked {
  T value;
  std::vector<std::string> warnings;

  bool ok() const { return warnings.empty(); }
};

}  // namespace mzbell

#endif  // MZBELL_ERROR_HPP_
