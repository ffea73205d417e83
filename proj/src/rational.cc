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

#include "ambigame/rational.h"

#include <cstdio>
#include <utility>

#include "ambigame/errors.h"

namespace ambigame {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

void CheckSameSize(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("vector sizes " + std::to_string(a.size()) +
                            " and " + std::to_string(b.size()) + " differ");
  }
}

}  // namespace

std::string ToString(const Rational& r) { return r.str(); }

std::optional<Rational> TryParseRational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!AllDigits(num) || !AllDigits(den)) return std::nullopt;
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) return std::nullopt;
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

Rational ParseRational(std::string_view text) {
  auto r = TryParseRational(text);
  if (!r) {
    throw InvalidArgument("not an exact rational: '" + std::string(text) +
                          "' (expected \"p/q\" or an integer)");
  }
  return *r;
}

double ToDouble(const Rational& r) { return r.convert_to<double>(); }

std::string ToDecimalString(const Rational& r, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, ToDouble(r));
  return buf;
}

std::string ToString(const Vector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += ToString(v[i]);
  }
  return out + ")";
}

std::vector<std::string> ToStrings(const Vector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(ToString(x));
  return out;
}

Rational Dot(const Vector& a, const Vector& b) {
  CheckSameSize(a, b);
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational Sum(const Vector& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

Vector Add(const Vector& a, const Vector& b) {
  CheckSameSize(a, b);
  Vector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector Subtract(const Vector& a, const Vector& b) {
  CheckSameSize(a, b);
  Vector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector Scale(const Rational& s, const Vector& v) {
  Vector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Vector LeftMultiply(const Vector& v, const Matrix& m) {
  if (v.size() != m.size()) {
    throw DimensionMismatch("row vector of size " + std::to_string(v.size()) +
                            " against matrix with " + std::to_string(m.size()) +
                            " rows");
  }
  if (m.empty()) return {};
  Vector out(m.front().size());
  for (size_t i = 0; i < m.size(); ++i) {
    CheckSameSize(m[i], out);
    if (v[i] == 0) continue;
    for (size_t j = 0; j < out.size(); ++j) out[j] += v[i] * m[i][j];
  }
  return out;
}

Vector Multiply(const Matrix& m, const Vector& v) {
  Vector out(m.size());
  for (size_t i = 0; i < m.size(); ++i) out[i] = Dot(m[i], v);
  return out;
}

bool IsProbabilityVector(const Vector& v) {
  if (v.empty()) return false;
  for (const auto& x : v) {
    if (x < 0) return false;
  }
  return Sum(v) == 1;
}

std::optional<Vector> SolveLinearSystem(Matrix a, Vector b) {
  const size_t n = a.size();
  if (b.size() != n) throw DimensionMismatch("right-hand side size mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw DimensionMismatch("system is not square");
  }
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = 1 / a[col][col];
    for (size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  return b;
}

int Rank(Matrix a) {
  if (a.empty()) return 0;
  const size_t cols = a.front().size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < a.size(); ++col) {
    size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[rank][col];
      for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace ambigame
