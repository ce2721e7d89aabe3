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

#ifndef MZBELL_TOOLS_CLI_HPP_
#define MZBELL_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace mzbell::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidationFailed = 1;
inline constexpr int kUsageError = 2;

// Runs the command line in args (program name first). Data goes to `out`
// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const char* version();

}  // namespace mzbell::cli

#endif  // MZBELL_TOOLS_CLI_HPP_
