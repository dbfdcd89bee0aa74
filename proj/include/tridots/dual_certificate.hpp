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

// Closed-form dual solutions and the upper bound they prove.
//
// With n = 3t + residue, entries are indexed by line length i = 1..n:
//
//   n = 3t+1:  r_i = c_i = max(0, (i - t - 1) / (3t + 1)),
//              d_i       = max(0, (i - t)     / (3t + 1))
//   n = 3t+2:  r_i = c_i = d_i = max(0, (i - t - 1) / (3t + 2))
//   n = 3t:    r_i = c_i = d_i = max(0, (i - t)     / (3t + 1))
//
// Each is feasible for the dual (r_i + c_j + d_k >= 1 whenever
// i + j + k = 2n + 1) and sums to lpf(n). By weak duality the relaxation,
// and so N(n), is at most lpf(n); N(n) is an integer, so
// N(n) <= floor(lpf(n)) = nf(n).

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "tridots/closed_forms.hpp"
#include "tridots/errors.hpp"
#include "tridots/geometry.hpp"
#include "tridots/rational.hpp"

namespace tridots {

struct DualCertificate {
  TriangleSize size;
  std::vector<Rational> r;  // r[i-1] weights the row of length i
  std::vector<Rational> c;  // by column length
  std::vector<Rational> d;  // by diagonal length

  friend bool operator==(const DualCertificate&, const DualCertificate&) = default;
};

struct NegativeEntry {
  LineFamily family;
  int index;
};

struct CertificateReport {
  bool shape_ok = true;                 // every vector has length n
  std::vector<NegativeEntry> negative;  // entries below zero
  std::vector<Cell> violated;           // cells with r_i + c_j + d_k < 1

  bool ok() const { return shape_ok && negative.empty() && violated.empty(); }
};

inline DualCertificate build_certificate(TriangleSize size) {
  const int n = size.n();
  const auto [t, residue] = residue_param(n);
  auto ramp = [n](std::int64_t shift, std::int64_t den) {
    std::vector<Rational> v;
    v.reserve(n);
    for (std::int64_t i = 1; i <= n; ++i) {
      v.push_back(i > shift ? Rational(BigInt(i - shift), BigInt(den)) : Rational());
    }
    return v;
  };
  DualCertificate cert{size, {}, {}, {}};
  switch (residue) {
    case 1:
      cert.r = ramp(t + 1, 3 * t + 1);
      cert.c = cert.r;
      cert.d = ramp(t, 3 * t + 1);
      break;
    case 2:
      cert.r = ramp(t + 1, 3 * t + 2);
      cert.c = cert.r;
      cert.d = cert.r;
      break;
    default:
      cert.r = ramp(t, 3 * t + 1);
      cert.c = cert.r;
      cert.d = cert.r;
      break;
  }
  return cert;
}

namespace detail {

// Entries over one common denominator, when everything fits in 62 bits.
struct ScaledCertificate {
  std::int64_t denominator;
  std::vector<std::int64_t> r, c, d;
};

inline std::optional<ScaledCertificate> scale_certificate(const DualCertificate& cert) {
  constexpr std::int64_t kLimit = std::int64_t{1} << 61;
  BigInt common = 1;
  for (const auto* vec : {&cert.r, &cert.c, &cert.d}) {
    for (const Rational& x : *vec) {
      if (x.denominator() == 1 || common % x.denominator() == 0) continue;
      common = common / gcd(common, x.denominator()) * x.denominator();
      if (common > kLimit) return std::nullopt;
    }
  }
  ScaledCertificate out{common.convert_to<std::int64_t>(), {}, {}, {}};
  auto scale = [&](const std::vector<Rational>& in, std::vector<std::int64_t>& dst) {
    dst.reserve(in.size());
    for (const Rational& x : in) {
      BigInt v = x.numerator() * (common / x.denominator());
      if (abs(v) > kLimit) return false;
      dst.push_back(v.convert_to<std::int64_t>());
    }
    return true;
  };
  if (!scale(cert.r, out.r) || !scale(cert.c, out.c) || !scale(cert.d, out.d)) return std::nullopt;
  return out;
}

inline void check_cells_scaled(const ScaledCertificate& s, int n, std::vector<Cell>& violated) {
  // Column length j = n - pos + 1, so reversing c makes the inner loop
  // contiguous in pos.
  std::vector<std::int64_t> c_by_pos(n + 1);
  for (int pos = 1; pos <= n; ++pos) c_by_pos[pos] = s.c[n - pos];
  const std::int64_t one = s.denominator;
  for (int row = 1; row <= n; ++row) {
    const std::int64_t ri = s.r[row - 1];
    const std::int64_t* diag = s.d.data() + (n - row);  // diag[pos - 1] = d at length n - row + pos
    int failures = 0;
    for (int pos = 1; pos <= row; ++pos) failures += (ri + c_by_pos[pos] + diag[pos - 1] < one);
    if (failures == 0) continue;
    for (int pos = 1; pos <= row; ++pos) {
      if (ri + c_by_pos[pos] + diag[pos - 1] < one) violated.push_back({row, pos});
    }
  }
}

inline void check_cells_exact(const DualCertificate& cert, std::vector<Cell>& violated) {
  const int n = cert.size.n();
  const Rational one(1);
  for (int row = 1; row <= n; ++row) {
    for (int pos = 1; pos <= row; ++pos) {
      const LineIndices idx = line_indices_unchecked({row, pos}, n);
      if (cert.r[idx.row_len - 1] + cert.c[idx.col_len - 1] + cert.d[idx.diag_len - 1] < one) {
        violated.push_back({row, pos});
      }
    }
  }
}

}  // namespace detail

/// Checks nonnegativity and r_i + c_j + d_k >= 1 for every cell, exactly.
/// Certificates whose entries share a denominator below 2^61 are checked in
/// scaled 64-bit integers; anything else falls back to Rational arithmetic.
inline CertificateReport verify_feasible(const DualCertificate& cert) {
  CertificateReport report;
  const std::size_t n = static_cast<std::size_t>(cert.size.n());
  if (cert.r.size() != n || cert.c.size() != n || cert.d.size() != n) {
    report.shape_ok = false;
    return report;
  }
  constexpr std::pair<LineFamily, std::vector<Rational> DualCertificate::*> kVectors[] = {
      {LineFamily::kRow, &DualCertificate::r},
      {LineFamily::kColumn, &DualCertificate::c},
      {LineFamily::kDiagonal, &DualCertificate::d}};
  for (const auto& [family, member] : kVectors) {
    const auto& vec = cert.*member;
    for (std::size_t i = 0; i < n; ++i) {
      if (vec[i].sign() < 0) report.negative.push_back({family, static_cast<int>(i + 1)});
    }
  }
  if (auto scaled = detail::scale_certificate(cert)) {
    detail::check_cells_scaled(*scaled, cert.size.n(), report.violated);
  } else {
    detail::check_cells_exact(cert, report.violated);
  }
  return report;
}

/// Dual objective: the sum of all 3n entries.
inline Rational certificate_objective(const DualCertificate& cert) {
  if (auto scaled = detail::scale_certificate(cert)) {
    BigInt total = 0;
    for (const auto* vec : {&scaled->r, &scaled->c, &scaled->d}) {
      for (std::int64_t x : *vec) total += x;
    }
    return Rational(std::move(total), BigInt(scaled->denominator));
  }
  Rational total;
  for (const auto* vec : {&cert.r, &cert.c, &cert.d}) {
    for (const Rational& x : *vec) total += x;
  }
  return total;
}

/// Proven bound N(n) <= floor(dual objective). Rebuilds and re-verifies the
/// certificate on every call; an infeasible certificate is an
/// InvariantError.
inline std::int64_t upper_bound(TriangleSize size) {
  const DualCertificate cert = build_certificate(size);
  const CertificateReport report = verify_feasible(cert);
  if (!report.ok()) {
    throw InvariantError("dual certificate for n = " + std::to_string(size.n()) + " is infeasible");
  }
  return certificate_objective(cert).floor().convert_to<std::int64_t>();
}

}  // namespace tridots
