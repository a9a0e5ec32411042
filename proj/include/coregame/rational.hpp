// Copyright 2026 The Coregame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COREGAME_RATIONAL_HPP
#define COREGAME_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <Eigen/Core>

namespace coregame {

/// Exact arbitrary-precision rational number.
///
/// Always stored in lowest terms with a positive denominator; zero is 0/1.
/// Arithmetic never rounds, so equality tests between optimal values are
/// meaningful.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}  // NOLINT: implicit for Eigen's Scalar(0)
  Rational(long value) : value_(value) {}  // NOLINT
  Rational(long long value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(long numerator, long denominator);
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  /// Parses "p/q", "-p/q" or an integer string. Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  std::string to_string() const { return value_.get_str(); }
  std::string numerator_string() const { return value_.get_num().get_str(); }
  std::string denominator_string() const { return value_.get_den().get_str(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  double to_double() const { return value_.get_d(); }
  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& v) { return Rational(mpq_class(-v.value_)); }
  friend Rational operator+(const Rational& v) { return v; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& v) {
    return os << v.to_string();
  }

 private:
  mpq_class value_;
};

inline Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
/// x⁺ = max(x, 0).
inline Rational positive_part(const Rational& v) { return v.sign() > 0 ? v : Rational(0); }

}  // namespace coregame

template <>
struct std::hash<coregame::Rational> {
  std::size_t operator()(const coregame::Rational& v) const noexcept {
    return std::hash<std::string>{}(v.to_string());
  }
};

namespace Eigen {

template <>
struct NumTraits<coregame::Rational> : GenericNumTraits<coregame::Rational> {
  using Real = coregame::Rational;
  using NonInteger = coregame::Rational;
  using Nested = coregame::Rational;
  using Literal = coregame::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };

  // Exact arithmetic: there is no rounding error to tolerate.
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // COREGAME_RATIONAL_HPP
