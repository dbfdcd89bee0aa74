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

#include <stdexcept>
#include <string>

namespace tridots {

// Bad argument: non-positive size, cell outside the board, index out of range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A size-capped computation was asked for an instance above its cap.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iteration limit hit inside a solver.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tridots
