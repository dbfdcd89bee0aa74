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

// Test-only oracles. They model the board as an n x n square grid and never
// call into the library's geometry, so they can check it.
//
// A triangle cell sits at grid row `gr` (1 = top) and grid column `gc`
// (1 = left) with gc >= n - gr + 1. Library cell (row, pos) is grid cell
// (row, n - pos + 1). Rows share gr, columns share gc, standard diagonals
// (southwest to northeast) share gr + gc.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tridots/geometry.hpp"

namespace tridots::testing {

struct GridCell {
  int gr;
  int gc;
};

inline GridCell to_grid(const Cell& c, int n) { return {c.row, n - c.pos + 1}; }

inline std::vector<GridCell> grid_cells(int n) {
  std::vector<GridCell> out;
  for (int gr = 1; gr <= n; ++gr) {
    for (int gc = n - gr + 1; gc <= n; ++gc) out.push_back({gr, gc});
  }
  return out;
}

// Lengths of the row, column and diagonal through a grid cell, by counting.
inline LineIndices counted_line_lengths(GridCell x, int n) {
  LineIndices out;
  for (const GridCell& y : grid_cells(n)) {
    out.row_len += y.gr == x.gr;
    out.col_len += y.gc == x.gc;
    out.diag_len += (y.gr + y.gc) == (x.gr + x.gc);
  }
  return out;
}

// True when no two cells share a grid row, grid column or grid diagonal.
inline bool grid_independent(const std::vector<Cell>& cells, int n) {
  std::set<int> rows, cols, diags;
  for (const Cell& c : cells) {
    const GridCell g = to_grid(c, n);
    if (g.gc < n - g.gr + 1 || g.gc > n || g.gr < 1 || g.gr > n) return false;
    if (!rows.insert(g.gr).second || !cols.insert(g.gc).second || !diags.insert(g.gr + g.gc).second) return false;
  }
  return true;
}

// Maximum independent set size and the number of maximum sets, by trying
// every subset of cells. Feasible for n <= 5 (15 cells).
inline std::pair<int, std::uint64_t> subset_enumeration(int n) {
  std::vector<Cell> cells;
  for (const GridCell& g : grid_cells(n)) cells.push_back({g.gr, n - g.gc + 1});
  int best = 0;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
    std::vector<Cell> chosen;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (mask >> i & 1) chosen.push_back(cells[i]);
    }
    if (!grid_independent(chosen, n)) continue;
    const int size = static_cast<int>(chosen.size());
    if (size > best) {
      best = size;
      count = 1;
    } else if (size == best) {
      ++count;
    }
  }
  return {best, count};
}

// Unreduced fraction for checking Rational against naive arithmetic.
struct NaiveFraction {
  boost::multiprecision::cpp_int p;
  boost::multiprecision::cpp_int q;  // nonzero, any sign

  NaiveFraction operator+(const NaiveFraction& o) const { return {p * o.q + o.p * q, q * o.q}; }
  NaiveFraction operator-(const NaiveFraction& o) const { return {p * o.q - o.p * q, q * o.q}; }
  NaiveFraction operator*(const NaiveFraction& o) const { return {p * o.p, q * o.q}; }
  NaiveFraction operator/(const NaiveFraction& o) const { return {p * o.q, q * o.p}; }
};

}  // namespace tridots::testing
