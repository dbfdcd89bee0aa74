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

// JSON forms of placements and certificates. Rationals travel as "p/q"
// strings so nothing is lost.
//
//   placement:   {"n": 7, "dots": [[3,1], [4,3], ...]}   dots ascending
//   certificate: {"n": 4, "r": ["0","0","1/4","1/2"], "c": [...], "d": [...],
//                 "objective": "3", "feasible": true}

#include <string>
#include <vector>

#include "json.hpp"
#include "tridots/construction.hpp"
#include "tridots/dual_certificate.hpp"
#include "tridots/errors.hpp"
#include "tridots/rational.hpp"

namespace tridots {

inline nlohmann::json placement_to_json(const Placement& p) {
  nlohmann::json dots = nlohmann::json::array();
  for (const Cell& c : p.dots) dots.push_back({c.row, c.pos});
  return {{"n", p.size.n()}, {"dots", std::move(dots)}};
}

inline Placement placement_from_json(const nlohmann::json& j) {
  try {
    Placement p{TriangleSize(j.at("n").get<std::int64_t>()), {}};
    for (const auto& dot : j.at("dots")) {
      if (!dot.is_array() || dot.size() != 2) throw DomainError("placement dot must be [row, pos]");
      p.dots.insert({dot[0].get<int>(), dot[1].get<int>()});
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed placement JSON: ") + e.what());
  }
}

namespace detail {
inline nlohmann::json fractions(const std::vector<Rational>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& x : v) out.push_back(x.str());
  return out;
}
inline std::vector<Rational> parse_fractions(const nlohmann::json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(Rational::Parse(x.get<std::string>()));
  return out;
}
}  // namespace detail

inline nlohmann::json certificate_to_json(const DualCertificate& cert) {
  return {{"n", cert.size.n()},
          {"r", detail::fractions(cert.r)},
          {"c", detail::fractions(cert.c)},
          {"d", detail::fractions(cert.d)},
          {"objective", certificate_objective(cert).str()},
          {"feasible", verify_feasible(cert).ok()}};
}

/// Reads n, r, c and d. "objective" and "feasible" are derived data and
/// are ignored; recompute them from the result.
inline DualCertificate certificate_from_json(const nlohmann::json& j) {
  try {
    return DualCertificate{TriangleSize(j.at("n").get<std::int64_t>()), detail::parse_fractions(j.at("r")),
                           detail::parse_fractions(j.at("c")), detail::parse_fractions(j.at("d"))};
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed certificate JSON: ") + e.what());
  }
}

}  // namespace tridots
