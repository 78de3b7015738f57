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

// Acceptance suite: one PASS/FAIL line per criterion, each with its wall
// clock budget. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "lrep/closed_forms.hpp"
#include "lrep/enumeration.hpp"
#include "lrep/identities.hpp"
#include "lrep/power_sums.hpp"
#include "lrep/report.hpp"
#include "lrep/verify.hpp"

namespace {

using namespace lrep;

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string s(const BigInt& v) { return v.str(); }

VerificationReport sweep(const std::string& identity, NRange range) {
  VerifyOptions opt;
  opt.identity = identity;
  opt.range = range;
  return run_verification(opt);
}

void expect_clean(Outcome& o, const VerificationReport& r, std::uint64_t min_checks) {
  o.expect(r.consistent(), r.identity + ": summary inconsistent");
  o.expect(r.summary.checked >= min_checks,
           r.identity + ": only " + std::to_string(r.summary.checked) + " checks");
  for (const auto& rec : r.records) {
    o.expect(rec.match, r.identity + " mismatch at n=" + std::to_string(rec.n) + " " + rec.check +
                            ": lhs=" + rec.lhs + " rhs=" + rec.rhs);
  }
  if (o.pass) o.detail = std::to_string(r.summary.checked) + " checks";
}

Outcome eq12_routes() {
  Outcome o;
  std::uint64_t checks = 0;
  for (std::uint64_t n = 2; n <= 300; ++n) {
    for (unsigned k = 1; k <= 8; ++k) {
      const BigInt direct = coprime_power_sum_direct(n, k).value;
      const BigInt through = coprime_power_sum_mobius(n, k, InnerBound::kThroughQuotient).value;
      const BigInt before = coprime_power_sum_mobius(n, k, InnerBound::kBeforeQuotient).value;
      const BigInt bern = coprime_power_sum_bernoulli(n, k).value;
      o.expect(direct == through && direct == before && direct == bern,
               "n=" + std::to_string(n) + " k=" + std::to_string(k));
      ++checks;
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " (n, k) pairs, 4 evaluations each";
  return o;
}

Outcome theorem_1a_sweep() {
  Outcome o;
  const auto r = sweep("thm11a", {2, 200});
  // 199 n x 3 monomials + 59 n x 50 random tables
  expect_clean(o, r, 199 * 3 + 59 * 50);
  return o;
}

Outcome theorem_1b_sweep() {
  Outcome o;
  const auto r = sweep("thm11b", {2, 200});
  expect_clean(o, r, 100 * 3 + 30 * 50);
  return o;
}

Outcome williams_sweep() {
  Outcome o;
  const auto r = sweep("williams-t11", {1, 120});
  expect_clean(o, r, 120 * 3 + 60 * 50);
  return o;
}

Outcome lemma_21a_sweep() {
  Outcome o;
  const auto r = sweep("lemma21a", {2, 120});
  expect_clean(o, r, 119 * 4);
  return o;
}

Outcome lemma_21b_sweep() {
  Outcome o;
  const auto r = sweep("lemma21b", {2, 120});
  expect_clean(o, r, 60 * 3);
  for (const auto& rec : r.records) {
    o.expect(rec.note.rfind("paper mismatch, corrected match", 0) == 0,
             "n=" + std::to_string(rec.n) + " not flagged: " + rec.note);
  }
  for (std::uint64_t n = 2; n <= 120; n += 2) {
    for (unsigned k = 1; k <= 3; ++k) {
      const auto l = lemma_21b(n, k);
      const BigInt expected = ipow(n, 2 * k) * euler_phi(factorize(n));
      o.expect(2 * l.lhs == expected && 2 * l.lhs == l.paper_rhs,
               "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  const auto spot = lemma_21b(2, 2);
  o.expect(spot.lhs == 8 && spot.paper_rhs == 16, "n=2 k=2: lhs=" + s(spot.lhs) +
                                                      " paper=" + s(spot.paper_rhs));
  if (o.pass) o.detail += "; n=2,k=2 lhs=8 paper=16";
  return o;
}

Outcome theorem_22a_sweep() {
  Outcome o;
  for (std::uint64_t n = 2; n <= 300; ++n) {
    o.expect(theorem_22a(n).value == weighted_sum(n, SetKind::kBprime, monomial_weight(3, 1)),
             "weighted sum n=" + std::to_string(n));
  }
  for (std::uint64_t n = 2; n <= 60; ++n) {
    const BigInt closed = theorem_22a(n).value;
    for (CountFamily f : {CountFamily::kGp, CountFamily::kHp, CountFamily::kIp}) {
      o.expect(count_definitional(n, f) == closed,
               std::string(to_string(f)) + " n=" + std::to_string(n));
    }
  }
  o.expect(count_definitional(2, CountFamily::kGp) == 1, "G'(2) != 1");
  o.expect(count_definitional(3, CountFamily::kGp) == 12, "G'(3) != 12");
  if (o.pass) o.detail = "n<=300 vs weighted sum, n<=60 vs G',H',I' oracles";
  return o;
}

Outcome theorem_22b_sweep() {
  Outcome o;
  for (std::uint64_t n = 2; n <= 60; n += 2) {
    const BigInt corrected = theorem_22b(n, FormulaVariant::kCorrected).value;
    const BigInt paper = theorem_22b(n, FormulaVariant::kPaper).value;
    o.expect(paper == 2 * corrected, "paper != 2x corrected at n=" + std::to_string(n));
    o.expect(count_reduced(n, CountFamily::kJp) == corrected, "reduced n=" + std::to_string(n));
    for (CountFamily f : {CountFamily::kJp, CountFamily::kKp, CountFamily::kLp}) {
      o.expect(count_definitional(n, f) == corrected,
               std::string(to_string(f)) + " n=" + std::to_string(n));
    }
  }
  o.expect(count_definitional(2, CountFamily::kJp) == 1, "J'(2) != 1");
  o.expect(count_definitional(4, CountFamily::kJp) == 32, "J'(4) != 32");
  if (o.pass) o.detail = "even n<=60 across J',K',L'; J'(2)=1 J'(4)=32";
  return o;
}

Outcome theorem_31_sweep() {
  Outcome o;
  for (std::uint64_t n = 2; n <= 50; ++n) {
    const BigInt closed = theorem_31(n).value;
    o.expect(convolution_sigma3_sigma(n) == closed, "convolution n=" + std::to_string(n));
    for (CountFamily f : {CountFamily::kG, CountFamily::kH, CountFamily::kI}) {
      o.expect(count_definitional(n, f) == closed,
               std::string(to_string(f)) + " n=" + std::to_string(n));
    }
  }
  o.expect(count_definitional(2, CountFamily::kG) == 1, "G(2) != 1");
  o.expect(count_definitional(4, CountFamily::kG) == 59, "G(4) != 59");
  if (o.pass) o.detail = "n<=50 vs convolution and G,H,I oracles";
  return o;
}

Outcome integrality() {
  Outcome o;
  // Closed forms over the ranges of all sweeps, on top of those already run.
  for (std::uint64_t n = 2; n <= 300; ++n) {
    theorem_22a(n);
    theorem_31(n);
    if (n % 2 == 0) {
      theorem_22b(n, FormulaVariant::kPaper);
      theorem_22b(n, FormulaVariant::kCorrected);
    }
    if (n <= 120) {
      for (unsigned k = 1; k <= 4; ++k) lemma_21a_rhs(n, k);
    }
  }
  const auto stats = integrality_stats();
  o.expect(stats.violated == 0, std::to_string(stats.violated) + " violations");
  o.expect(stats.checked > 0, "no evaluations recorded");
  if (o.pass) o.detail = std::to_string(stats.checked) + " exact evaluations, 0 violations";
  return o;
}

Outcome cli_contract() {
  using testing_support::run_cli;
  Outcome o;
  o.expect(run_cli("verify thm22a 2..40 --oracle-depth 10").exit_code == 0, "thm22a exit != 0");
  o.expect(run_cli("verify thm22b 2..20 --variant paper").exit_code == 1,
           "paper variant did not exit 1");
  o.expect(run_cli("verify thm22b 2..20").exit_code == 0, "thm22b exit != 0");
  o.expect(run_cli("verify nope 2..5").exit_code == 2, "unknown identity exit != 2");
  o.expect(run_cli("verify thm22a 0..5").exit_code == 2, "bad range exit != 2");
  o.expect(run_cli("compute Jp 3").exit_code == 2, "odd Jp exit != 2");
  for (const char* args : {"verify thm11a 2..30 --seed 5 --random-f 5 --format json",
                           "verify thm11a 2..30 --seed 5 --random-f 5 --format csv",
                           "table 2..40 --format csv", "table 2..40 --format json"}) {
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    o.expect(a.exit_code == 0 && !a.out.empty() && a.out == b.out,
             std::string("non-deterministic: ") + args);
  }
  const auto serial = run_cli("verify williams-t11 1..30 --format csv");
  const auto parallel = run_cli("verify williams-t11 1..30 --format csv --jobs 4");
  o.expect(serial.out == parallel.out, "--jobs changed output");
  const auto json = run_cli("verify lemma21b 2..20 --format json");
  const auto parsed = parse_report(json.out);
  o.expect(parsed.consistent() && render(parsed, OutputFormat::kJson) == json.out,
           "JSON report does not round-trip");
  if (o.pass) o.detail = "exit codes 0/1/2, byte-identical CSV/JSON, JSON round-trip";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "coprime power sums: three routes agree, n<=300, k<=8", 10, eq12_routes},
      {2, "Liouville sum over B'(n): n<=200, x^2,x^4,x^6 + 50 random f (n<=60)", 60,
       theorem_1a_sweep},
      {3, "Liouville sum over O'(n): even n<=200", 30, theorem_1b_sweep},
      {4, "Liouville sum over B(n): n<=120", 30, williams_sweep},
      {5, "binomial power sums over B'(n): n<=120, k<=4", 30, lemma_21a_sweep},
      {6, "binomial power sums over O'(n): corrected rhs, printed rhs 2x", 20, lemma_21b_sweep},
      {7, "G'=H'=I' closed form", 120, theorem_22a_sweep},
      {8, "J'=K'=L' corrected closed form, printed form 2x", 60, theorem_22b_sweep},
      {9, "G=H=I closed form = sigma_3 * sigma convolution", 60, theorem_31_sweep},
      {10, "integrality of every closed-form evaluation", 60, integrality},
      {11, "CLI exit codes and deterministic output", 120, cli_contract},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.budget_seconds) {
      if (outcome.pass) outcome.detail = "over time budget";
      outcome.pass = false;
    }
    if (!outcome.pass) ++failed;
    std::printf("[%s] %2d. %s  (%.2fs / %.0fs)  %s\n", outcome.pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), elapsed, c.budget_seconds, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
