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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "tridots/errors.hpp"

namespace tridots {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction num/den over arbitrary-precision integers.
///
/// Always canonical: gcd(|num|, den) == 1 and den > 0, so zero is 0/1 and
/// structural equality is value equality. Sums and products use the
/// gcd-splitting forms, which keep intermediates small when denominators
/// share factors (the common case inside a simplex tableau).
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DomainError("Rational: zero denominator");
    Normalize();
  }

  /// Parses "p", "-p", "p/q" or "-p/q" (optional sign on either part).
  static Rational Parse(std::string_view text) {
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
      if (s.empty()) throw DomainError("Rational: empty integer in '" + std::string(text) + "'");
      std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (start == s.size()) throw DomainError("Rational: bad integer in '" + std::string(text) + "'");
      for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
          throw DomainError("Rational: bad integer in '" + std::string(text) + "'");
        }
      }
      BigInt v(std::string(s.substr(start)));
      return s[0] == '-' ? BigInt(-v) : v;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  /// Largest integer not above this value.
  BigInt floor() const {
    if (den_ == 1) return num_;
    BigInt q = num_ / den_;  // truncates toward zero
    if (num_.sign() < 0) q -= 1;
    return q;
  }

  double to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

  /// "p" for integers, otherwise "p/q".
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  /// Mixed-number form: "4 2/7", "3", "1/4", "-1 1/2".
  std::string mixed() const {
    if (den_ == 1) return num_.str();
    BigInt mag = abs(num_);
    BigInt whole = mag / den_;
    BigInt rem = mag % den_;
    std::string out = num_.sign() < 0 ? "-" : "";
    if (!whole.is_zero()) out += whole.str() + " ";
    return out + rem.str() + "/" + den_.str();
  }

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return AddScaled(o, false); }
  Rational& operator-=(const Rational& o) { return AddScaled(o, true); }

  Rational& operator*=(const Rational& o) {
    if (num_.is_zero()) return *this;
    if (o.num_.is_zero()) return *this = Rational();
    if (den_ == 1 && o.den_ == 1) {
      num_ *= o.num_;
      return *this;
    }
    BigInt g1 = gcd(abs(num_), o.den_);
    BigInt g2 = gcd(abs(o.num_), den_);
    num_ = (num_ / g1) * (o.num_ / g2);
    den_ = (den_ / g2) * (o.den_ / g1);
    return *this;
  }

  Rational& operator/=(const Rational& o) {
    if (o.num_.is_zero()) throw DomainError("Rational: division by zero");
    Rational inv;
    inv.num_ = o.num_.sign() < 0 ? BigInt(-o.den_) : o.den_;
    inv.den_ = abs(o.num_);
    return *this *= inv;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Compare(a.num_, b.num_);
    return Compare(a.num_ * b.den_, b.num_ * a.den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static std::strong_ordering Compare(const BigInt& x, const BigInt& y) {
    int c = x.compare(y);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  void Normalize() {
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    BigInt g = gcd(abs(num_), den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Rational& AddScaled(const Rational& o, bool subtract) {
    if (o.num_.is_zero()) return *this;
    if (den_ == 1 && o.den_ == 1) {
      if (subtract) num_ -= o.num_; else num_ += o.num_;
      return *this;
    }
    BigInt g = gcd(den_, o.den_);
    if (g == 1) {
      BigInt t = subtract ? BigInt(num_ * o.den_ - o.num_ * den_) : BigInt(num_ * o.den_ + o.num_ * den_);
      num_ = std::move(t);
      den_ *= o.den_;
      if (num_.is_zero()) den_ = 1;
      return *this;
    }
    BigInt b_over_g = den_ / g;
    BigInt t = subtract ? BigInt(num_ * (o.den_ / g) - o.num_ * b_over_g)
                        : BigInt(num_ * (o.den_ / g) + o.num_ * b_over_g);
    if (t.is_zero()) return *this = Rational();
    BigInt g2 = gcd(abs(t), g);
    num_ = t / g2;
    den_ = b_over_g * (o.den_ / g2);
    return *this;
  }

  BigInt num_;
  BigInt den_;
};

/// Exact decimal expansion when the denominator has no prime factors other
/// than 2 and 5; std::nullopt otherwise.
inline std::optional<std::string> ExactDecimal(const Rational& r) {
  BigInt den = r.denominator();
  int twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return std::nullopt;
  if (r.is_integer()) return r.numerator().str();
  int digits = std::max(twos, fives);
  BigInt scale = pow(BigInt(10), static_cast<unsigned>(digits));
  BigInt scaled = abs(r.numerator()) * scale / r.denominator();
  std::string s = scaled.str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits - s.size() + 1, '0');
  s.insert(s.size() - digits, ".");
  return (r.sign() < 0 ? "-" : "") + s;
}

/// Decimal rounded half away from zero to `digits` places after the point.
inline std::string RoundedDecimal(const Rational& r, int digits) {
  BigInt scale = pow(BigInt(10), static_cast<unsigned>(digits));
  BigInt mag = abs(r.numerator()) * scale * 2 + r.denominator();
  BigInt scaled = mag / (r.denominator() * 2);
  std::string s = scaled.str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits - s.size() + 1, '0');
    s.insert(s.size() - digits, ".");
  }
  return (r.sign() < 0 && !scaled.is_zero() ? "-" : "") + s;
}

}  // namespace tridots
