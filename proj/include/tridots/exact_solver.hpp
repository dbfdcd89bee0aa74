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

// Exhaustive row-by-row search for N(n), independent of any LP machinery.

#include <cstdint>
#include <string>
#include <vector>

#include "tridots/construction.hpp"
#include "tridots/errors.hpp"
#include "tridots/geometry.hpp"

namespace tridots {

inline constexpr int kDefaultSearchCap = 25;
// Line occupancy lives in 64-bit masks.
inline constexpr int kSearchHardLimit = 64;

struct MaxDotsResult {
  int count = 0;
  Placement witness;
};

namespace detail {

class RowSearch {
 public:
  explicit RowSearch(int n) : n_(n) {}

  // Rows top to bottom; in each row try pos 1..row, then leave the row empty.
  // The first placement reaching the best count is kept as the witness.
  void Maximize(int row, int count) {
    if (row > n_) {
      if (count > best_) {
        best_ = count;
        witness_ = dots_;
      }
      return;
    }
    if (count + (n_ - row + 1) <= best_) return;
    for (int pos = 1; pos <= row; ++pos) {
      if (!Place(row, pos)) continue;
      Maximize(row + 1, count + 1);
      Remove(row, pos);
    }
    Maximize(row + 1, count);
  }

  // Counts placements of exactly `target` dots.
  void Count(int row, int count, int target) {
    if (count == target) {
      ++found_;
      return;
    }
    if (row > n_ || count + (n_ - row + 1) < target) return;
    for (int pos = 1; pos <= row; ++pos) {
      if (!Place(row, pos)) continue;
      Count(row + 1, count + 1, target);
      Remove(row, pos);
    }
    Count(row + 1, count, target);
  }

  int best() const { return best_; }
  const std::vector<Cell>& witness() const { return witness_; }
  std::uint64_t found() const { return found_; }

 private:
  bool Place(int row, int pos) {
    const std::uint64_t col = std::uint64_t{1} << (n_ - pos);        // col_len - 1
    const std::uint64_t diag = std::uint64_t{1} << (n_ - row + pos - 1);  // diag_len - 1
    if ((cols_ & col) || (diags_ & diag)) return false;
    cols_ |= col;
    diags_ |= diag;
    dots_.push_back({row, pos});
    return true;
  }

  void Remove(int row, int pos) {
    cols_ &= ~(std::uint64_t{1} << (n_ - pos));
    diags_ &= ~(std::uint64_t{1} << (n_ - row + pos - 1));
    dots_.pop_back();
  }

  int n_;
  std::uint64_t cols_ = 0;
  std::uint64_t diags_ = 0;
  std::vector<Cell> dots_;
  int best_ = 0;
  std::vector<Cell> witness_;
  std::uint64_t found_ = 0;
};

inline void require_search_size(TriangleSize size, int cap) {
  const int limit = cap < kSearchHardLimit ? cap : kSearchHardLimit;
  if (size.n() > limit) {
    throw RefusalError("exhaustive search refused for n = " + std::to_string(size.n()) +
                       " (cap " + std::to_string(limit) + ")");
  }
}

}  // namespace detail

/// N(n) by exhaustive search, with a witness placement of that size.
/// Throws RefusalError above `cap` (and never searches past n = 64).
inline MaxDotsResult max_dots(TriangleSize size, int cap = kDefaultSearchCap) {
  detail::require_search_size(size, cap);
  detail::RowSearch search(size.n());
  search.Maximize(1, 0);
  MaxDotsResult result{search.best(), Placement{size, {}}};
  result.witness.dots.insert(search.witness().begin(), search.witness().end());
  return result;
}

/// Number of distinct valid placements with N(n) dots.
inline std::uint64_t count_optima(TriangleSize size, int cap = kDefaultSearchCap) {
  const int target = max_dots(size, cap).count;
  detail::RowSearch search(size.n());
  search.Count(1, 0, target);
  return search.found();
}

}  // namespace tridots
