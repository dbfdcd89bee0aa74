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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tridots/closed_forms.hpp"
#include "tridots/errors.hpp"
#include "tridots/geometry.hpp"

namespace tridots {

/// A set of dotted cells on a triangle. Not necessarily valid; see
/// validate_placement.
struct Placement {
  TriangleSize size;
  std::set<Cell> dots;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct LineViolation {
  LineFamily family;
  int index;                // line length
  std::vector<Cell> cells;  // every dot on the line, ascending
};

struct PlacementReport {
  std::vector<Cell> off_board;
  std::vector<LineViolation> violations;

  bool ok() const { return off_board.empty() && violations.empty(); }
};

/// Checks that every dot lies on the board and that no row, column or
/// diagonal carries more than one dot.
inline PlacementReport validate_placement(const Placement& p) {
  PlacementReport report;
  std::map<int, std::vector<Cell>> by_line[3];
  for (const Cell& c : p.dots) {
    if (!is_valid_cell(c, p.size)) {
      report.off_board.push_back(c);
      continue;
    }
    const LineIndices idx = line_indices_unchecked(c, p.size.n());
    by_line[0][idx.row_len].push_back(c);
    by_line[1][idx.col_len].push_back(c);
    by_line[2][idx.diag_len].push_back(c);
  }
  constexpr LineFamily kFamilies[] = {LineFamily::kRow, LineFamily::kColumn, LineFamily::kDiagonal};
  for (int f = 0; f < 3; ++f) {
    for (auto& [index, cells] : by_line[f]) {
      if (cells.size() > 1) report.violations.push_back({kFamilies[f], index, std::move(cells)});
    }
  }
  return report;
}

namespace detail {

// Placement on the (3t+1)-triangle with 2t+1 dots. Chain one starts at the
// leftmost cell of row 2t+1; chain two at the (t+2)nd cell from the left of
// the bottom row. Each step goes one row up and two cells to the right,
// i.e. (row, pos) -> (row - 1, pos - 2).
inline std::set<Cell> base_chains(std::int64_t t) {
  std::set<Cell> dots;
  const int tt = static_cast<int>(t);
  for (int s = 0; s <= tt; ++s) dots.insert({2 * tt + 1 - s, 2 * tt + 1 - 2 * s});
  for (int s = 0; s <= tt - 1; ++s) dots.insert({3 * tt + 1 - s, 2 * tt - 2 * s});
  return dots;
}

}  // namespace detail

/// A valid placement of exactly nf(n) dots.
///
/// n = 3t+1 uses the two chains directly; n = 3t+2 reuses them unchanged
/// (the extra bottom row stays empty); n = 3t drops the single dot that the
/// (3t+1) placement has in its bottom row.
inline Placement build_placement(TriangleSize size) {
  const auto [t, residue] = residue_param(size.n());
  Placement p{size, {}};
  switch (residue) {
    case 1:
    case 2:
      p.dots = detail::base_chains(t);
      break;
    case 0: {
      p.dots = detail::base_chains(t);
      const int bottom = 3 * static_cast<int>(t) + 1;
      auto erased = std::erase_if(p.dots, [bottom](const Cell& c) { return c.row == bottom; });
      if (erased != 1) throw InvariantError("expected exactly one bottom-row dot to remove");
      break;
    }
  }
  return p;
}

}  // namespace tridots
