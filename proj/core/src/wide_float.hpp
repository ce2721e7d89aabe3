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

// Extended-precision helpers shared by the displacement and POVM kernels.
#ifndef MZBELL_SRC_WIDE_FLOAT_HPP_
#define MZBELL_SRC_WIDE_FLOAT_HPP_

#include <quadmath.h>

#include <cmath>
#include <cstddef>
#include <vector>

namespace mzbell::detail {

using quad = __float128;

inline constexpr long double kEpsLong = 1.0842021724855044340e-19L;  // 2^-63
inline constexpr double kEpsQuad = 1.925929944387235853e-34;         // 2^-112

// log(n!) for n = 0..size-1.
inline std::vector<long double> log_factorials_ld(std::size_t size) {
  std::vector<long double> out(size);
  for (std::size_t n = 0; n < size; ++n) out[n] = std::lgamma(static_cast<long double>(n) + 1.0L);
  return out;
}

inline std::vector<quad> log_factorials_q(std::size_t size) {
  std::vector<quad> out(size);
  for (std::size_t n = 0; n < size; ++n) out[n] = lgammaq(static_cast<quad>(n) + 1);
  return out;
}

}  // namespace mzbell::detail

#endif  // MZBELL_SRC_WIDE_FLOAT_HPP_
