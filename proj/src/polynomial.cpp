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

#include "grundy/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace grundy {

std::string CheckedInt::to_string() const {
  if (v_ == 0) return "0";
  // Work with the negative magnitude so INT128_MIN is representable.
  __int128 x = v_ > 0 ? -v_ : v_;
  std::string digits;
  while (x != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
    x /= 10;
  }
  if (v_ < 0) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

mpz_class CheckedInt::to_mpz() const { return mpz_class(to_string()); }

std::string coefficient_string(const CheckedInt& c) { return c.to_string(); }
std::string coefficient_string(const mpz_class& c) { return c.get_str(); }

BigPolynomial to_big(const IntPolynomial& p) {
  std::vector<mpz_class> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) {
    c.push_back(x.fits_int64() ? mpz_class(static_cast<long>(x.raw())) : x.to_mpz());
  }
  return BigPolynomial(std::move(c));
}

std::vector<long double> to_long_double(const IntPolynomial& p) {
  std::vector<long double> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.push_back(x.to_long_double());
  return c;
}

namespace {

long double horner(const std::vector<long double>& c, long double x) {
  long double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<long double> differentiate(const std::vector<long double>& c) {
  std::vector<long double> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long double>(i));
  return d;
}

}  // namespace

long double largest_real_root(const std::vector<long double>& coefficients,
                              long double lower, long double upper) {
  std::vector<long double> p = coefficients;
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) throw std::invalid_argument("zero polynomial has no largest root");
  if (p.back() < 0) throw std::invalid_argument("leading coefficient must be positive");
  if (p.size() == 1) throw std::invalid_argument("constant polynomial has no roots");

  std::vector<std::vector<long double>> chain{p};
  while (chain.back().size() > 1) chain.push_back(differentiate(chain.back()));
  auto above_all_roots = [&](long double x) {
    for (const auto& q : chain) {
      if (!(horner(q, x) > 0)) return false;
    }
    return true;
  };

  long double lo = lower;
  long double hi = upper;
  while (!above_all_roots(hi)) hi = hi + (hi - lo) + 1;
  if (above_all_roots(lo)) {
    throw std::invalid_argument("lower bound already exceeds the largest root");
  }
  for (int iter = 0; iter < 200 && hi - lo > 1e-15L * std::max<long double>(1, std::fabs(hi));
       ++iter) {
    const long double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    (above_all_roots(mid) ? hi : lo) = mid;
  }

  const auto& dp = chain[1];
  long double x = hi;
  for (int iter = 0; iter < 50; ++iter) {
    const long double fx = horner(p, x);
    const long double dfx = horner(dp, x);
    if (!(fx > 0) || !(dfx > 0)) break;
    const long double next = x - fx / dfx;
    if (!(next < x) || next < lo) break;
    x = next;
  }
  return x;
}

}  // namespace grundy
