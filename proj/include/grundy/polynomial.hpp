// Copyright 2026 The grundy-spectral Authors.
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

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

/// Raised when exact 128-bit arithmetic would wrap.
class OverflowError : public LimitError {
 public:
  OverflowError() : LimitError("128-bit integer overflow") {}
};

/// 128-bit signed integer whose arithmetic throws OverflowError instead of
/// wrapping.
class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(long long v) : v_(v) {}  // NOLINT: implicit by design of literals
  static constexpr CheckedInt from_raw(__int128 v) {
    CheckedInt c;
    c.v_ = v;
    return c;
  }

  constexpr __int128 raw() const { return v_; }
  bool fits_int64() const { return v_ >= INT64_MIN && v_ <= INT64_MAX; }
  long double to_long_double() const { return static_cast<long double>(v_); }
  std::string to_string() const;
  mpz_class to_mpz() const;

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    __int128 r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError();
    return from_raw(r);
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    __int128 r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError();
    return from_raw(r);
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    __int128 r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError();
    return from_raw(r);
  }
  CheckedInt operator-() const { return CheckedInt{} - *this; }
  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
  CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }

  friend constexpr bool operator==(CheckedInt, CheckedInt) = default;
  friend constexpr std::strong_ordering operator<=>(CheckedInt a, CheckedInt b) {
    return a.v_ <=> b.v_;
  }

 private:
  __int128 v_ = 0;
};

/// Dense univariate polynomial, constant term first. The zero polynomial has
/// no stored coefficients and degree -1; otherwise the leading coefficient is
/// nonzero.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) {
    trim();
  }

  static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }
  /// value * x^power
  static Polynomial monomial(T value, int power) {
    std::vector<T> c(power + 1, T(0));
    c[power] = std::move(value);
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coefficients() const { return c_; }
  T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  /// Multiplies by x^power.
  Polynomial shifted(int power) const {
    if (is_zero()) return {};
    std::vector<T> c(power, T(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Polynomial(std::move(c));
  }

  Polynomial derivative() const {
    std::vector<T> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * T(static_cast<long>(i)));
    return Polynomial(std::move(c));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == T(0)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Pretty form such as "x^4 - 3x^2 + 1".
  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<CheckedInt>;
using BigPolynomial = Polynomial<mpz_class>;

BigPolynomial to_big(const IntPolynomial& p);
/// Coefficients converted to long double, constant term first.
std::vector<long double> to_long_double(const IntPolynomial& p);

std::string coefficient_string(const CheckedInt& c);
std::string coefficient_string(const mpz_class& c);

template <class T>
std::string Polynomial<T>::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const T& c = c_[i];
    if (c == T(0)) continue;
    const bool negative = c < T(0);
    const T mag = negative ? T(0) - c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == T(1);
    if (!unit || i == 0) out += coefficient_string(mag);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

/// Largest real root of a polynomial with positive leading coefficient whose
/// roots are all real and lie in [lower, upper].
///
/// Bisection on the predicate "every derivative p, p', ..., p^(d) is positive
/// at x", which for a real-rooted polynomial holds exactly when x exceeds the
/// largest root (the derivatives' roots interlace and never pass it). The
/// bracket is then polished by Newton steps from the right, where p is
/// increasing and convex. Accuracy is about 1e-13 for moderate degrees.
long double largest_real_root(const std::vector<long double>& coefficients,
                              long double lower, long double upper);

/// Characteristic polynomial det(xI - A) of a square matrix over any
/// commutative ring, constant term first, by the division-free
/// Samuelson-Berkowitz recurrence. O(n^4) ring operations.
template <class T>
std::vector<T> berkowitz_char_poly(const std::vector<std::vector<T>>& a) {
  const std::size_t n = a.size();
  std::vector<T> p{T(1)};  // highest power first while building
  for (std::size_t r = 0; r < n; ++r) {
    // Leading (r+1)x(r+1) block = [[M, C], [R, a_rr]] with M the r x r block.
    std::vector<T> t;
    t.reserve(r + 2);
    t.push_back(T(1));
    t.push_back(T(0) - a[r][r]);
    std::vector<T> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a[i][r];  // C
    for (std::size_t j = 0; j < r; ++j) {
      T dot(0);
      for (std::size_t i = 0; i < r; ++i) dot += a[r][i] * v[i];  // R M^j C
      t.push_back(T(0) - dot);
      if (j + 1 == r) break;
      std::vector<T> w(r, T(0));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t l = 0; l < r; ++l) w[i] += a[i][l] * v[l];
      }
      v = std::move(w);
    }
    // q = Toeplitz(t) * p, length r + 2.
    std::vector<T> q(r + 2, T(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j <= i && j < p.size(); ++j) {
        if (i - j < t.size()) q[i] += t[i - j] * p[j];
      }
    }
    p = std::move(q);
  }
  std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace grundy
