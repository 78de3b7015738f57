// Copyright 2026 The lrep Authors.
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

// S_k(n) = sum of l^k over 1 <= l < n with gcd(l, n) = 1, by three routes:
//   direct      literal loop
//   mobius      sum_{d|n} mu(d) d^k sum_{j=1}^{n/d} j^k   (or to n/d - 1)
//   bernoulli   sum_{d|n} mu(d) d^k/(k+1) sum_{j=0}^{k} C(k+1,j) B_j (n/d)^{k+1-j}

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lrep/arith.hpp"

namespace lrep {

enum class PowerSumRoute { kDirect, kMobiusPower, kMobiusBernoulli };

inline const char* to_string(PowerSumRoute r) {
  switch (r) {
    case PowerSumRoute::kDirect: return "direct";
    case PowerSumRoute::kMobiusPower: return "mobius_power";
    case PowerSumRoute::kMobiusBernoulli: return "mobius_bernoulli";
  }
  return "?";
}

struct PowerSumResult {
  std::uint64_t n;
  unsigned k;
  BigInt value;
  PowerSumRoute route;
};

// Upper limit of the inner sum in the Moebius route. Both give the same total
// for n > 1 because the j = n/d terms contribute n^k sum_{d|n} mu(d) = 0.
enum class InnerBound { kThroughQuotient, kBeforeQuotient };

namespace detail {

inline void check_power_sum_args(std::uint64_t n, unsigned k, const char* who) {
  if (n < 2) throw std::invalid_argument(std::string(who) + ": n must be >= 2");
  if (k < 1) throw std::invalid_argument(std::string(who) + ": k must be >= 1");
}

// sum_{j=0}^{m-1} j^k by Faulhaber with B_1 = -1/2.
inline Rational faulhaber_below(std::uint64_t m, unsigned k) {
  Rational acc = 0;
  const BigInt mm = m;
  for (unsigned j = 0; j <= k; ++j) {
    const Rational b = bernoulli(j);
    if (b == 0) continue;
    acc += Rational(binomial(k + 1, j)) * b * Rational(ipow(mm, k + 1 - j));
  }
  return acc / Rational(k + 1);
}

}  // namespace detail

inline PowerSumResult coprime_power_sum_direct(std::uint64_t n, unsigned k) {
  detail::check_power_sum_args(n, k, "coprime_power_sum_direct");
  BigInt total = 0;
  for (std::uint64_t l = 1; l < n; ++l) {
    if (std::gcd(l, n) == 1) total += ipow(l, k);
  }
  return {n, k, total, PowerSumRoute::kDirect};
}

inline PowerSumResult coprime_power_sum_mobius(std::uint64_t n, unsigned k,
                                               InnerBound bound = InnerBound::kThroughQuotient) {
  detail::check_power_sum_args(n, k, "coprime_power_sum_mobius");
  const auto f = factorize(n);
  BigInt total = 0;
  for (std::uint64_t d : divisors(f)) {
    const int mu = moebius_mu(factorize(d));
    if (mu == 0) continue;
    const std::uint64_t q = n / d;
    const std::uint64_t last = bound == InnerBound::kThroughQuotient ? q : q - 1;
    BigInt inner = 0;
    for (std::uint64_t j = 1; j <= last; ++j) inner += ipow(j, k);
    const BigInt term = ipow(d, k) * inner;
    if (mu > 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return {n, k, total, PowerSumRoute::kMobiusPower};
}

inline PowerSumResult coprime_power_sum_bernoulli(std::uint64_t n, unsigned k) {
  detail::check_power_sum_args(n, k, "coprime_power_sum_bernoulli");
  const auto f = factorize(n);
  Rational total = 0;
  for (std::uint64_t d : divisors(f)) {
    const int mu = moebius_mu(factorize(d));
    if (mu == 0) continue;
    total += Rational(mu) * Rational(ipow(d, k)) * detail::faulhaber_below(n / d, k);
  }
  BigInt value = require_integer(
      total, "coprime_power_sum_bernoulli(" + std::to_string(n) + ", " + std::to_string(k) + ")");
  return {n, k, std::move(value), PowerSumRoute::kMobiusBernoulli};
}

}  // namespace lrep
