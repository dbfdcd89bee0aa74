// Copyright 2026 The tridots Authors
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

#pragma once

#include <cstdint>
#include <string>

#include "tridots/errors.hpp"
#include "tridots/rational.hpp"

namespace tridots {

/// n = 3t + residue.
struct ResidueParam {
  std::int64_t t = 0;
  int residue = 0;
};

inline ResidueParam residue_param(std::int64_t n) {
  if (n < 1) throw DomainError("n must be >= 1, got " + std::to_string(n));
  return {n / 3, static_cast<int>(n % 3)};
}

/// Maximum number of dots: floor((2n + 1) / 3).
inline std::int64_t nf(std::int64_t n) {
  if (n < 1) throw DomainError("n must be >= 1, got " + std::to_string(n));
  return (2 * n + 1) / 3;
}

/// Conjectured LP relaxation optimum:
///   3t    -> 2t + t / (3t + 1)
///   3t+1  -> 2t + 1
///   3t+2  -> 2t + 1 + (2t + 1) / (3t + 2)
inline Rational lpf(std::int64_t n) {
  const auto [t, residue] = residue_param(n);
  switch (residue) {
    case 0: return Rational(2 * t) + Rational(BigInt(t), BigInt(3 * t + 1));
    case 1: return Rational(2 * t + 1);
    default: return Rational(2 * t + 1) + Rational(BigInt(2 * t + 1), BigInt(3 * t + 2));
  }
}

}  // namespace tridots
