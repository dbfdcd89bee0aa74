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

#include "tridots/geometry.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace tridots {
namespace {

TEST(GeometryTest, RejectsNonPositiveSize) {
  EXPECT_THROW(TriangleSize(0), DomainError);
  EXPECT_THROW(TriangleSize(-3), DomainError);
}

TEST(GeometryTest, AllCellsSmall) {
  EXPECT_EQ(all_cells(TriangleSize(1)), (std::vector<Cell>{{1, 1}}));
  EXPECT_EQ(all_cells(TriangleSize(6)).size(), 21u);
  EXPECT_EQ(all_cells(TriangleSize(3)), (std::vector<Cell>{{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}}));
}

TEST(GeometryTest, AllCellsMatchesGridEnumeration) {
  for (int n = 1; n <= 40; ++n) {
    const auto cells = all_cells(TriangleSize(n));
    EXPECT_EQ(cells.size(), testing::grid_cells(n).size());
    EXPECT_TRUE(std::is_sorted(cells.begin(), cells.end()));
    EXPECT_EQ(std::set<Cell>(cells.begin(), cells.end()).size(), cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) ASSERT_EQ(cell_ordinal(cells[i]), i);
  }
  EXPECT_EQ(all_cells(TriangleSize(7)).size(), 28u);
}

TEST(GeometryTest, LineIndicesExamples) {
  const TriangleSize six(6);
  EXPECT_EQ(line_indices({1, 1}, six), (LineIndices{1, 6, 6}));
  EXPECT_EQ(line_indices({6, 6}, six), (LineIndices{6, 1, 6}));
  EXPECT_EQ(line_indices({4, 2}, six), (LineIndices{4, 5, 4}));
  EXPECT_EQ(testing::counted_line_lengths(testing::to_grid({4, 2}, 6), 6), (LineIndices{4, 5, 4}));
}

TEST(GeometryTest, LineIndicesRejectsInvalidCell) {
  const TriangleSize six(6);
  EXPECT_THROW(line_indices({2, 3}, six), DomainError);
  EXPECT_THROW(line_indices({7, 1}, six), DomainError);
  EXPECT_THROW(line_indices({3, 0}, six), DomainError);
}

TEST(GeometryTest, LineIndicesMatchCountedLines) {
  for (int n = 1; n <= 25; ++n) {
    for (const Cell& c : all_cells(TriangleSize(n))) {
      ASSERT_EQ(line_indices(c, TriangleSize(n)), testing::counted_line_lengths(testing::to_grid(c, n), n))
          << "n=" << n << " cell " << to_string(c);
    }
  }
}

TEST(GeometryTest, IndexSumIsTwoNPlusOne) {
  for (int n = 1; n <= 200; ++n) {
    for (const Cell& c : all_cells(TriangleSize(n))) {
      const LineIndices idx = line_indices(c, TriangleSize(n));
      ASSERT_EQ(idx.row_len + idx.col_len + idx.diag_len, 2 * n + 1);
    }
  }
}

TEST(GeometryTest, BijectionOntoTriples) {
  for (int n = 1; n <= 60; ++n) {
    std::set<std::tuple<int, int, int>> triples;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const int k = 2 * n + 1 - i - j;
        if (1 <= k && k <= n) triples.insert({i, j, k});
      }
    }
    std::set<std::tuple<int, int, int>> image;
    for (const Cell& c : all_cells(TriangleSize(n))) {
      const LineIndices idx = line_indices(c, TriangleSize(n));
      image.insert({idx.row_len, idx.col_len, idx.diag_len});
      ASSERT_EQ(cell_at(idx, TriangleSize(n)), c);
    }
    ASSERT_EQ(image.size(), all_cells(TriangleSize(n)).size());
    ASSERT_EQ(image, triples);
  }
  EXPECT_THROW(cell_at({1, 1, 1}, TriangleSize(3)), DomainError);
}

TEST(GeometryTest, LineListsExamples) {
  const TriangleSize six(6);
  EXPECT_EQ(cells_of_row(1, six), (std::vector<Cell>{{1, 1}}));
  const auto col6 = cells_of_col(6, six);
  EXPECT_EQ(col6.size(), 6u);
  for (const Cell& c : col6) EXPECT_EQ(c.pos, 1);
  const auto diag6 = cells_of_diag(6, six);
  EXPECT_EQ(diag6.size(), 6u);
  for (const Cell& c : diag6) EXPECT_EQ(c.row, c.pos);
}

TEST(GeometryTest, LineListsRejectOutOfRange) {
  const TriangleSize six(6);
  EXPECT_THROW(cells_of_row(0, six), DomainError);
  EXPECT_THROW(cells_of_col(7, six), DomainError);
  EXPECT_THROW(cells_of_diag(-1, six), DomainError);
}

TEST(GeometryTest, EachFamilyPartitionsTheBoard) {
  for (int n = 1; n <= 50; ++n) {
    const TriangleSize size(n);
    const auto cells = all_cells(size);
    for (LineFamily family : {LineFamily::kRow, LineFamily::kColumn, LineFamily::kDiagonal}) {
      std::vector<Cell> joined;
      for (int index = 1; index <= n; ++index) {
        const auto line = cells_of_line(family, index, size);
        ASSERT_EQ(line.size(), static_cast<std::size_t>(index));
        ASSERT_TRUE(std::is_sorted(line.begin(), line.end()));
        for (const Cell& c : line) ASSERT_EQ(line_index(line_indices(c, size), family), index);
        joined.insert(joined.end(), line.begin(), line.end());
      }
      std::sort(joined.begin(), joined.end());
      ASSERT_EQ(joined, cells) << to_string(family) << " n=" << n;
    }
  }
}

}  // namespace
}  // namespace tridots
