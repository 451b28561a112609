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

#ifndef PARTID_RATIONAL_HPP_
#define PARTID_RATIONAL_HPP_

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace partid {

// Arbitrary-precision rational. GMP keeps values in lowest terms with a
// positive denominator after every arithmetic operation.
using Rational = boost::multiprecision::mpq_rational;
using Vector = std::vector<Rational>;

// Parses "p/q", "p", or a finite decimal such as "-0.125". Returns nullopt on
// anything else (including a zero denominator).
std::optional<Rational> ParseRational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string ToString(const Rational& value);
std::vector<std::string> ToStrings(const Vector& values);

double ToDouble(const Rational& value);

Rational Sum(const Vector& values);
Rational Dot(const Vector& a, const Vector& b);

// True iff every entry is >= 0 and the entries sum to exactly one.
bool IsDistribution(const Vector& values);

}  // namespace partid

#endif  // PARTID_RATIONAL_HPP_
