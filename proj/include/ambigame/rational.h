// Copyright 2026 The ambigame Authors. All rights reserved.
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

#ifndef AMBIGAME_RATIONAL_H_
#define AMBIGAME_RATIONAL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace ambigame {

// Exact fraction over arbitrary-precision integers. GMP keeps every value in
// lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Dense vector and row-major matrix of exact rationals.
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

// "p/q", or "n" when the denominator is 1.
std::string ToString(const Rational& r);

// Accepts "n", "-n", "p/q", "-p/q" (optional leading '+'). Decimals and
// zero denominators are rejected.
std::optional<Rational> TryParseRational(std::string_view text);
Rational ParseRational(std::string_view text);

// Approximate value, only for display.
double ToDouble(const Rational& r);
// Fixed-precision decimal, e.g. "0.009804".
std::string ToDecimalString(const Rational& r, int digits = 6);

std::string ToString(const Vector& v);  // "(1/4, 3/4, 0)"
std::vector<std::string> ToStrings(const Vector& v);

Rational Dot(const Vector& a, const Vector& b);
Rational Sum(const Vector& v);
Vector Add(const Vector& a, const Vector& b);
Vector Subtract(const Vector& a, const Vector& b);
Vector Scale(const Rational& s, const Vector& v);
// Row-vector times matrix: result[j] = sum_i v[i] * m[i][j].
Vector LeftMultiply(const Vector& v, const Matrix& m);
// Matrix times column vector.
Vector Multiply(const Matrix& m, const Vector& v);

// True iff all entries are >= 0 and they sum to exactly 1.
bool IsProbabilityVector(const Vector& v);

// Unique solution of the square system a x = b, or nullopt if a is singular.
std::optional<Vector> SolveLinearSystem(Matrix a, Vector b);

// Row rank by exact elimination.
int Rank(Matrix a);

}  // namespace ambigame

#endif  // AMBIGAME_RATIONAL_H_
