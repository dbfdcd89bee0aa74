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

// Text renderings shared by the command-line tool and its tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tridots/construction.hpp"
#include "tridots/exact_solver.hpp"
#include "tridots/geometry.hpp"
#include "tridots/rational.hpp"
#include "tridots/simplex.hpp"

namespace tridots {

/// Draws the triangle with its right angle at the bottom right: row a is
/// indented so its rightmost cell lines up with the rows above it. `label`
/// gives the text for each cell; all cells are padded to a common width.
inline std::string render_triangle(TriangleSize size, const std::function<std::string(const Cell&)>& label) {
  const int n = size.n();
  std::vector<std::vector<std::string>> text(n + 1);
  std::size_t width = 1;
  for (int a = 1; a <= n; ++a) {
    for (int b = a; b >= 1; --b) {
      text[a].push_back(label({a, b}));
      width = std::max(width, text[a].back().size());
    }
  }
  std::ostringstream out;
  for (int a = 1; a <= n; ++a) {
    out << std::string(static_cast<std::size_t>(n - a) * (width + 1), ' ');
    for (std::size_t i = 0; i < text[a].size(); ++i) {
      if (i) out << ' ';
      out << std::string(width - text[a][i].size(), ' ') << text[a][i];
    }
    out << '\n';
  }
  return out.str();
}

inline std::string render_placement(const Placement& p) {
  return render_triangle(p.size, [&](const Cell& c) { return p.dots.count(c) ? "o" : "."; });
}

struct TableRow {
  int n = 0;
  int max_dots = 0;
  Rational lp;
  Rational gap() const { return lp - Rational(max_dots); }
};

inline TableRow compute_table_row(TriangleSize size, int search_cap = kDefaultSearchCap, int lp_cap = kDefaultLpCap) {
  return {size.n(), max_dots(size, search_cap).count, lp_value(size, lp_cap)};
}

inline std::string render_table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "n,N(n),LP(n),LP(n)-N(n)\n";
  for (const TableRow& r : rows) out << r.n << ',' << r.max_dots << ',' << r.lp.mixed() << ',' << r.gap().mixed() << '\n';
  return out.str();
}

inline std::string render_table_ascii(const std::vector<TableRow>& rows) {
  const std::vector<std::string> header = {"n", "N(n)", "LP(n)", "LP(n) - N(n)"};
  std::vector<std::vector<std::string>> cells;
  for (const TableRow& r : rows) {
    cells.push_back({std::to_string(r.n), std::to_string(r.max_dots), r.lp.mixed(), r.gap().mixed()});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t k = 0; k < header.size(); ++k) {
    width[k] = header[k].size();
    for (const auto& line : cells) width[k] = std::max(width[k], line[k].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (k) out << " | ";
      out << line[k];
      if (k + 1 < line.size()) out << std::string(width[k] - line[k].size(), ' ');
    }
    out << '\n';
  };
  emit(header);
  for (std::size_t k = 0; k < width.size(); ++k) {
    if (k) out << "-+-";
    out << std::string(width[k], '-');
  }
  out << '\n';
  for (const auto& line : cells) emit(line);
  return out.str();
}

inline std::string render_table_json(const std::vector<TableRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const TableRow& r : rows) {
    out.push_back({{"n", r.n}, {"N", r.max_dots}, {"LP", r.lp.str()}, {"gap", r.gap().str()}});
  }
  return out.dump(2) + "\n";
}

}  // namespace tridots
