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

// The n-triangle: every cell of an n x n square on or below the longest
// southwest-to-northeast diagonal, right angle at the bottom right.
//
// A cell is addressed as (row, pos): row counts from the top (row a holds a
// squares) and pos counts from the right edge of its row. The three lines
// through a cell are identified by their lengths (i, j, k):
//
//   row length       i = row
//   column length    j = n - pos + 1
//   diagonal length  k = n - row + pos
//
// so i + j + k = 2n + 1 for every cell, and the map cell -> (i, j, k) is a
// bijection onto {(i, j, k) : i + j + k = 2n + 1, 1 <= i, j, k <= n}.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tridots/errors.hpp"

namespace tridots {

class TriangleSize {
 public:
  explicit TriangleSize(std::int64_t n) : n_(n) {
    if (n < 1) throw DomainError("triangle size must be >= 1, got " + std::to_string(n));
  }
  int n() const { return static_cast<int>(n_); }
  std::int64_t cell_count() const { return n_ * (n_ + 1) / 2; }
  friend auto operator<=>(const TriangleSize&, const TriangleSize&) = default;

 private:
  std::int64_t n_;
};

struct Cell {
  int row = 0;
  int pos = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.pos) + ")";
}

struct LineIndices {
  int row_len = 0;
  int col_len = 0;
  int diag_len = 0;
  friend auto operator<=>(const LineIndices&, const LineIndices&) = default;
};

enum class LineFamily { kRow, kColumn, kDiagonal };

inline const char* to_string(LineFamily f) {
  switch (f) {
    case LineFamily::kRow: return "row";
    case LineFamily::kColumn: return "column";
    case LineFamily::kDiagonal: return "diagonal";
  }
  return "?";
}

inline bool is_valid_cell(const Cell& c, TriangleSize size) {
  return 1 <= c.pos && c.pos <= c.row && c.row <= size.n();
}

inline void require_cell(const Cell& c, TriangleSize size) {
  if (!is_valid_cell(c, size)) {
    throw DomainError("cell " + to_string(c) + " is not on the triangle of size " +
                      std::to_string(size.n()));
  }
}

/// Row-major, pos ascending within each row.
inline std::vector<Cell> all_cells(TriangleSize size) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(size.cell_count()));
  for (int a = 1; a <= size.n(); ++a) {
    for (int b = 1; b <= a; ++b) cells.push_back({a, b});
  }
  return cells;
}

/// Position of a valid cell in all_cells(size).
inline std::size_t cell_ordinal(const Cell& c) {
  return static_cast<std::size_t>(c.row) * (c.row - 1) / 2 + (c.pos - 1);
}

inline LineIndices line_indices_unchecked(const Cell& c, int n) {
  return {c.row, n - c.pos + 1, n - c.row + c.pos};
}

inline LineIndices line_indices(const Cell& c, TriangleSize size) {
  require_cell(c, size);
  return line_indices_unchecked(c, size.n());
}

/// Inverse of line_indices: the unique cell with the given line lengths.
inline Cell cell_at(const LineIndices& idx, TriangleSize size) {
  const int n = size.n();
  if (idx.row_len < 1 || idx.row_len > n || idx.col_len < 1 || idx.col_len > n ||
      idx.diag_len < 1 || idx.diag_len > n || idx.row_len + idx.col_len + idx.diag_len != 2 * n + 1) {
    throw DomainError("line indices do not name a cell of the triangle");
  }
  return {idx.row_len, n - idx.col_len + 1};
}

namespace detail {
inline void require_line(int index, TriangleSize size, LineFamily family) {
  if (index < 1 || index > size.n()) {
    throw DomainError(std::string(to_string(family)) + " index " + std::to_string(index) +
                      " out of range 1.." + std::to_string(size.n()));
  }
}
}  // namespace detail

/// The i cells of the row of length i.
inline std::vector<Cell> cells_of_row(int i, TriangleSize size) {
  detail::require_line(i, size, LineFamily::kRow);
  std::vector<Cell> out;
  for (int b = 1; b <= i; ++b) out.push_back({i, b});
  return out;
}

/// The j cells of the column of length j (all at pos n - j + 1).
inline std::vector<Cell> cells_of_col(int j, TriangleSize size) {
  detail::require_line(j, size, LineFamily::kColumn);
  const int b = size.n() - j + 1;
  std::vector<Cell> out;
  for (int a = b; a <= size.n(); ++a) out.push_back({a, b});
  return out;
}

/// The k cells of the diagonal of length k (row - pos == n - k).
inline std::vector<Cell> cells_of_diag(int k, TriangleSize size) {
  detail::require_line(k, size, LineFamily::kDiagonal);
  const int offset = size.n() - k;
  std::vector<Cell> out;
  for (int b = 1; b <= k; ++b) out.push_back({offset + b, b});
  return out;
}

inline std::vector<Cell> cells_of_line(LineFamily family, int index, TriangleSize size) {
  switch (family) {
    case LineFamily::kRow: return cells_of_row(index, size);
    case LineFamily::kColumn: return cells_of_col(index, size);
    case LineFamily::kDiagonal: return cells_of_diag(index, size);
  }
  return {};
}

inline int line_index(const LineIndices& idx, LineFamily family) {
  switch (family) {
    case LineFamily::kRow: return idx.row_len;
    case LineFamily::kColumn: return idx.col_len;
    case LineFamily::kDiagonal: return idx.diag_len;
  }
  return 0;
}

}  // namespace tridots
