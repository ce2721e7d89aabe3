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

#ifndef MZBELL_VALIDATION_HPP_
#define MZBELL_VALIDATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace mzbell {

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
  // Outcome is reported but does not decide the suite verdict.
  bool informational = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

enum class Suite { all, fock, optics, povm, mu, chsh };

Suite parse_suite(const std::string& name);
const char* to_string(Suite s);

std::vector<SuiteReport> run_validation(Suite suite, std::uint64_t seed);

}  // namespace mzbell

#endif  // MZBELL_VALIDATION_HPP_
