// Copyright 2026 The partid Authors.
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

#include "partid/rational.hpp"

#include <cctype>

namespace partid {
namespace {

using boost::multiprecision::mpz_int;

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// The string constructor auto-detects the base, so "017" would be octal.
mpz_int Decimal(std::string_view digits) {
  mpz_int z;
  mpz_set_str(z.backend().data(), std::string(digits).c_str(), 10);
  return z;
}

}  // namespace

std::optional<Rational> ParseRational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  mpz_int num;
  mpz_int den = 1;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view n = text.substr(0, slash);
    std::string_view d = text.substr(slash + 1);
    if (!AllDigits(n) || !AllDigits(d)) return std::nullopt;
    num = Decimal(n);
    den = Decimal(d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !AllDigits(whole)) return std::nullopt;
    if (!frac.empty() && !AllDigits(frac)) return std::nullopt;
    num = Decimal(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    den = boost::multiprecision::pow(mpz_int(10),
                                     static_cast<unsigned>(frac.size()));
  } else {
    if (!AllDigits(text)) return std::nullopt;
    num = Decimal(text);
  }
  if (den == 0) return std::nullopt;
  Rational value(num, den);  // canonicalized by the two-integer constructor
  return negative ? Rational(-value) : value;
}

std::string ToString(const Rational& value) { return value.str(); }

std::vector<std::string> ToStrings(const Vector& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(ToString(v));
  return out;
}

double ToDouble(const Rational& value) { return value.convert_to<double>(); }

Rational Sum(const Vector& values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

Rational Dot(const Vector& a, const Vector& b) {
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

bool IsDistribution(const Vector& values) {
  for (const auto& v : values) {
    if (v < 0) return false;
  }
  return Sum(values) == 1;
}

}  // namespace partid
