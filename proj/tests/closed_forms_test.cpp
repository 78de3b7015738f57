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

#include "lrep/closed_forms.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "lrep/identities.hpp"
#include "oracles.hpp"

namespace lrep {
namespace {

TEST(Theorem22a, Examples) {
  EXPECT_EQ(theorem_22a(2).value, 1);
  EXPECT_EQ(theorem_22a(3).value, 12);
  EXPECT_EQ(theorem_22a(4).value, 42);  // sum of a^3 b over B'(4)
  EXPECT_EQ(theorem_22a(4).value, weighted_sum(4, SetKind::kBprime, monomial_weight(3, 1)));
  EXPECT_THROW(theorem_22a(1), std::invalid_argument);
}

TEST(Theorem22a, MatchesReducedSum) {
  for (std::uint64_t n = 2; n <= 300; ++n) {
    ASSERT_EQ(theorem_22a(n).value, count_reduced(n, CountFamily::kGp)) << n;
  }
}

TEST(Theorem22a, PrimesAgainstDefinitionalOracle) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; primes.size() < 20; ++p) {
    if (oracle::divisors(p).size() == 2) primes.push_back(p);
  }
  for (std::uint64_t p : primes) {
    ASSERT_EQ(theorem_22a(p).value, count_definitional(p, CountFamily::kGp)) << p;
  }
}

TEST(Theorem22b, Variants) {
  EXPECT_EQ(theorem_22b(2, FormulaVariant::kPaper).value, 2);
  EXPECT_EQ(theorem_22b(2, FormulaVariant::kCorrected).value, 1);
  EXPECT_EQ(theorem_22b(4, FormulaVariant::kPaper).value, 64);
  EXPECT_EQ(theorem_22b(4, FormulaVariant::kCorrected).value, 32);
  EXPECT_EQ(theorem_22b(6, FormulaVariant::kCorrected).value, 162);
  EXPECT_EQ(count_definitional(6, CountFamily::kJp), 162);
  EXPECT_EQ(theorem_22b(4, FormulaVariant::kCorrected).variant, FormulaVariant::kCorrected);
  EXPECT_THROW(theorem_22b(3, FormulaVariant::kPaper), std::invalid_argument);
  EXPECT_THROW(theorem_22b(4, FormulaVariant::kNone), std::invalid_argument);
}

TEST(Theorem22b, PaperIsTwiceCorrected) {
  for (std::uint64_t n = 2; n <= 300; n += 2) {
    const BigInt corrected = theorem_22b(n, FormulaVariant::kCorrected).value;
    ASSERT_EQ(theorem_22b(n, FormulaVariant::kPaper).value, 2 * corrected);
    ASSERT_EQ(corrected, count_reduced(n, CountFamily::kJp)) << n;
    // n^4 phi(n) / 16
    ASSERT_EQ(16 * corrected, ipow(n, 4) * oracle::phi(n));
  }
}

TEST(Theorem31, Examples) {
  EXPECT_EQ(theorem_31(2).value, 1);
  EXPECT_EQ(theorem_31(3).value, 12);
  EXPECT_EQ(theorem_31(4).value, 59);
  EXPECT_THROW(theorem_31(1), std::invalid_argument);
}

TEST(Theorem31, MatchesConvolutionAndReduced) {
  for (std::uint64_t n = 2; n <= 150; ++n) {
    const BigInt v = theorem_31(n).value;
    ASSERT_EQ(v, convolution_sigma3_sigma(n)) << n;
    ASSERT_EQ(v, count_reduced(n, CountFamily::kG)) << n;
  }
}

TEST(Lemma21aRhs, Examples) {
  EXPECT_EQ(lemma_21a_rhs(2, 2), Rational(8));
  EXPECT_EQ(lemma_21a_rhs(3, 1), Rational(2 * weighted_sum(3, SetKind::kBprime, monomial_weight(1, 1))));
  EXPECT_EQ(lemma_21a_rhs(4, 3), Rational(4824));  // enumerated LHS at k = 3
  EXPECT_THROW(lemma_21a_rhs(1, 1), std::invalid_argument);
}

TEST(ClosedForm, Dispatch) {
  EXPECT_EQ(closed_form(CountFamily::kIp, 5).value, theorem_22a(5).value);
  EXPECT_EQ(closed_form(CountFamily::kIp, 5).family, CountFamily::kIp);
  EXPECT_EQ(closed_form(CountFamily::kLp, 8, FormulaVariant::kPaper).value,
            theorem_22b(8, FormulaVariant::kPaper).value);
  EXPECT_EQ(closed_form(CountFamily::kH, 9).value, theorem_31(9).value);
  EXPECT_THROW(closed_form(CountFamily::kKp, 9), std::invalid_argument);
}

TEST(ClosedForm, DefinitionalOracleSmallN) {
  for (std::uint64_t n = 2; n <= 24; ++n) {
    for (CountFamily f : kAllFamilies) {
      if (requires_even_n(f) && n % 2) continue;
      ASSERT_EQ(closed_form(f, n).value, count_definitional(n, f)) << n << ' ' << to_string(f);
    }
  }
}

TEST(ClosedForm, EveryEvaluationIsIntegral) {
  const auto before = integrality_stats();
  for (std::uint64_t n = 2; n <= 500; ++n) {
    theorem_22a(n);
    theorem_31(n);
    if (n % 2 == 0) {
      theorem_22b(n, FormulaVariant::kPaper);
      theorem_22b(n, FormulaVariant::kCorrected);
    }
  }
  const auto after = integrality_stats();
  EXPECT_EQ(after.violated, before.violated);
  EXPECT_EQ(after.checked - before.checked, 499u * 2 + 250u * 2);
}

}  // namespace
}  // namespace lrep
