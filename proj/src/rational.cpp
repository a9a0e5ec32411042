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

#include "coregame/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace coregame {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Accepts "12.5" or "-0.25" and returns the exact decimal value.
bool parse_decimal(std::string_view s, mpq_class* out) {
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) return false;
  std::string_view whole = s.substr(0, dot);
  std::string_view frac = s.substr(dot + 1);
  bool negative = false;
  if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
    negative = whole.front() == '-';
    whole.remove_prefix(1);
  }
  if (whole.empty() && frac.empty()) return false;
  for (char c : whole) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  for (char c : frac) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  mpz_class num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  mpq_class q(negative ? mpz_class(-num) : num, den);
  q.canonicalize();
  *out = q;
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    mpq_class q;
    if (is_integer_literal(text)) {
      std::string s(text);
      if (s.front() == '+') s.erase(0, 1);
      return Rational(mpq_class(mpz_class(s, 10)));
    }
    if (parse_decimal(text, &q)) return Rational(q);
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  std::string ns(num);
  if (ns.front() == '+') ns.erase(0, 1);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(mpq_class(mpz_class(ns, 10), d));
}

}  // namespace coregame
