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

// Closed forms for the counting functions, evaluated in exact rationals.
// Every product over primes dividing n goes through mobius_power_product.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "lrep/arith.hpp"
#include "lrep/enumeration.hpp"
#include "lrep/power_sums.hpp"

namespace lrep {

// Which printed form of the J'/K'/L' formula to evaluate. kCorrected is the
// one consistent with the O'(n) Liouville sum (half of kPaper).
enum class FormulaVariant { kNone, kPaper, kCorrected };

inline const char* to_string(FormulaVariant v) {
  switch (v) {
    case FormulaVariant::kNone: return "none";
    case FormulaVariant::kPaper: return "paper";
    case FormulaVariant::kCorrected: return "corrected";
  }
  return "?";
}

struct ClosedFormResult {
  CountFamily family;
  std::uint64_t n;
  BigInt value;
  FormulaVariant variant = FormulaVariant::kNone;
};

namespace detail {

inline void require_n_above_one(std::uint64_t n, const char* who) {
  if (n < 2) throw std::invalid_argument(std::string(who) + ": n must be >= 2");
}

inline void require_even(std::uint64_t n, const char* who) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument(std::string(who) + ": n must be even and >= 2, got " +
                                std::to_string(n));
  }
}

}  // namespace detail

/// G'(n) = H'(n) = I'(n)
///   = (7n^5 - 10n)/80 prod(1 - 1/p) + n^3/24 prod(1 - p) - n/240 prod(1 - p^3)
inline ClosedFormResult theorem_22a(std::uint64_t n) {
  detail::require_n_above_one(n, "theorem_22a");
  const auto f = factorize(n);
  const BigInt N = n;
  const Rational value =
      Rational(7 * ipow(N, 5) - 10 * N, 80) * mobius_power_product(f, -1) +
      Rational(ipow(N, 3), 24) * mobius_power_product(f, 1) -
      Rational(N, 240) * mobius_power_product(f, 3);
  return {CountFamily::kGp, n, require_integer(value, "theorem_22a(" + std::to_string(n) + ")")};
}

/// J'(n) = K'(n) = L'(n) = n^5/8 prod(1 - 1/p) as printed, n^5/16 prod(1 - 1/p)
/// corrected.
inline ClosedFormResult theorem_22b(std::uint64_t n, FormulaVariant variant) {
  detail::require_even(n, "theorem_22b");
  if (variant == FormulaVariant::kNone) {
    throw std::invalid_argument("theorem_22b: variant must be paper or corrected");
  }
  const auto f = factorize(n);
  const int denom = variant == FormulaVariant::kPaper ? 8 : 16;
  const Rational value = Rational(ipow(BigInt(n), 5), denom) * mobius_power_product(f, -1);
  return {CountFamily::kJp, n,
          require_integer(value, std::string("theorem_22b(") + std::to_string(n) + ", " +
                                     to_string(variant) + ")"),
          variant};
}

/// G(n) = H(n) = I(n) = 7/80 sigma_5(n) + (1/24 - n/8) sigma_3(n) - 1/240 sigma(n)
inline ClosedFormResult theorem_31(std::uint64_t n) {
  detail::require_n_above_one(n, "theorem_31");
  const auto f = factorize(n);
  const Rational value = Rational(7, 80) * Rational(sigma_m(f, 5)) +
                         (Rational(1, 24) - Rational(BigInt(n), 8)) * Rational(sigma_m(f, 3)) -
                         Rational(sigma_m(f, 1), 240);
  return {CountFamily::kG, n, require_integer(value, "theorem_31(" + std::to_string(n) + ")")};
}

/// ((n^{2k} - 2)/2) phi(n) + S_{2k}(n), with S from the Bernoulli route.
inline Rational lemma_21a_rhs(std::uint64_t n, unsigned k) {
  detail::require_n_above_one(n, "lemma_21a_rhs");
  if (k < 1) throw std::invalid_argument("lemma_21a_rhs: k must be >= 1");
  const auto f = factorize(n);
  const Rational value =
      Rational(ipow(BigInt(n), 2 * k) - 2, 2) * Rational(euler_phi(f)) +
      Rational(coprime_power_sum_bernoulli(n, 2 * k).value);
  require_integer(value, "lemma_21a_rhs(" + std::to_string(n) + ", " + std::to_string(k) + ")");
  return value;
}

/// Closed form for any family; `variant` only matters for Jp/Kp/Lp.
inline ClosedFormResult closed_form(CountFamily family, std::uint64_t n,
                                    FormulaVariant variant = FormulaVariant::kCorrected) {
  check_family_args(n, family);
  ClosedFormResult r;
  switch (underlying_set(family)) {
    case SetKind::kBprime: r = theorem_22a(n); break;
    case SetKind::kOprime: r = theorem_22b(n, variant); break;
    default: r = theorem_31(n); break;
  }
  r.family = family;
  return r;
}

}  // namespace lrep
