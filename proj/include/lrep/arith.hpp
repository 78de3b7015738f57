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

// Exact integer/rational arithmetic and the classical multiplicative
// functions (phi, mu, sigma_m) evaluated from a prime factorization.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lrep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when a rational that must be integral is not. Always a bug in the
// evaluation path, never a user error.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

struct IntegralityCounters {
  std::atomic<std::uint64_t> checked{0};
  std::atomic<std::uint64_t> violated{0};
};

inline IntegralityCounters& integrality_counters() {
  static IntegralityCounters counters;
  return counters;
}

}  // namespace detail

struct IntegralityStats {
  std::uint64_t checked = 0;
  std::uint64_t violated = 0;
};

/// Process-wide tally of every `require_integer` call.
inline IntegralityStats integrality_stats() {
  auto& c = detail::integrality_counters();
  return {c.checked.load(), c.violated.load()};
}

/// Returns the numerator of `value` after asserting its denominator is 1.
inline BigInt require_integer(const Rational& value, const std::string& context) {
  auto& c = detail::integrality_counters();
  c.checked.fetch_add(1, std::memory_order_relaxed);
  if (boost::multiprecision::denominator(value) != 1) {
    c.violated.fetch_add(1, std::memory_order_relaxed);
    throw IntegralityError(context + ": expected an integer, got " + value.str());
  }
  return boost::multiprecision::numerator(value);
}

inline BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline BigInt ipow(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization of a positive integer: primes strictly
/// increasing, exponents >= 1, empty for n = 1.
class PrimeFactorization {
 public:
  PrimeFactorization() = default;

  std::uint64_t n() const { return n_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  /// Factorization of n^e, formed by scaling exponents.
  PrimeFactorization power(unsigned e) const {
    if (e == 0) return PrimeFactorization{};
    PrimeFactorization out;
    out.n_ = 1;
    for (const auto& [p, k] : factors_) {
      for (unsigned i = 0; i < k * e; ++i) {
        if (out.n_ > std::numeric_limits<std::uint64_t>::max() / p) {
          throw std::overflow_error("PrimeFactorization::power: n^e exceeds 64 bits");
        }
        out.n_ *= p;
      }
      out.factors_.push_back({p, k * e});
    }
    return out;
  }

  friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;

 private:
  friend PrimeFactorization factorize(std::uint64_t n);

  std::uint64_t n_ = 1;
  std::vector<PrimePower> factors_;
};

/// Trial division up to sqrt(n).
inline PrimeFactorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  PrimeFactorization f;
  f.n_ = n;
  std::uint64_t m = n;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) f.factors_.push_back({p, e});
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel
  for (std::uint64_t p = 5; p <= m / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (m > 1) f.factors_.push_back({m, 1});
  return f;
}

inline std::uint64_t euler_phi(const PrimeFactorization& f) {
  std::uint64_t phi = 1;
  for (const auto& [p, e] : f.factors()) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

inline int moebius_mu(const PrimeFactorization& f) {
  int mu = 1;
  for (const auto& pe : f.factors()) {
    if (pe.exponent >= 2) return 0;
    mu = -mu;
  }
  return mu;
}

/// Every positive divisor, ascending.
inline std::vector<std::uint64_t> divisors(const PrimeFactorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : f.factors()) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// sigma_m(n) = sum of d^m over d | n, as a product of geometric series.
inline BigInt sigma_m(const PrimeFactorization& f, unsigned m) {
  BigInt total = 1;
  for (const auto& [p, e] : f.factors()) {
    const BigInt pm = ipow(p, m);
    BigInt term = 1;
    BigInt acc = 1;
    for (unsigned i = 1; i <= e; ++i) {
      term *= pm;
      acc += term;
    }
    total *= acc;
  }
  return total;
}

/// prod_{p | n} (1 - p^s), which equals sum_{d | n} mu(d) d^s. Rational for s < 0.
inline Rational mobius_power_product(const PrimeFactorization& f, int s) {
  if (s == 0) throw std::invalid_argument("mobius_power_product: s must be nonzero");
  Rational out = 1;
  const unsigned mag = static_cast<unsigned>(s < 0 ? -s : s);
  for (const auto& pe : f.factors()) {
    const BigInt ps = ipow(pe.prime, mag);
    if (s > 0) {
      out *= Rational(1 - ps);
    } else {
      out *= Rational(ps - 1, ps);
    }
  }
  return out;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

namespace detail {

// Grown on demand; readers share the lock, growth takes it exclusively.
class BernoulliTable {
 public:
  Rational get(unsigned j) {
    {
      std::shared_lock lock(mutex_);
      if (j < values_.size()) return values_[j];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= j) {
      const unsigned m = static_cast<unsigned>(values_.size());
      // sum_{i=0}^{m} C(m+1, i) B_i = 0
      Rational acc = 0;
      for (unsigned i = 0; i < m; ++i) acc += Rational(binomial(m + 1, i)) * values_[i];
      values_.push_back(-acc / Rational(m + 1));
    }
    return values_[j];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<Rational> values_{Rational(1)};
};

inline BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

}  // namespace detail

/// B_j with B_1 = -1/2.
inline Rational bernoulli(unsigned j) { return detail::bernoulli_table().get(j); }

}  // namespace lrep
