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

// Verification sweeps: each identity suite produces records for one n, and
// the driver spreads the n-range over worker threads and merges by n.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "lrep/closed_forms.hpp"
#include "lrep/enumeration.hpp"
#include "lrep/identities.hpp"
#include "lrep/power_sums.hpp"
#include "lrep/report.hpp"
#include "lrep/tables.hpp"

namespace lrep {

inline constexpr std::array<std::string_view, 10> kIdentityNames = {
    "eq12",     "thm11a", "thm11b", "williams-t11", "lemma21a",
    "lemma21b", "thm22a", "thm22b", "thm31",        "definitional"};

struct VerifyOptions {
  std::string identity;
  NRange range{2, 2};
  std::optional<unsigned> k;         // restricts the k / f = x^{2k} family
  std::uint64_t oracle_depth = 60;   // definitional oracle only for n <= this
  std::uint64_t random_depth = 60;   // random table functions only for n <= this
  unsigned random_functions = 50;    // random table functions per n
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  bool timing = false;               // elapsed_ms stays 0 unless set
  // lemma21b / thm22b: which right-hand side counts as a match. kPaper checks
  // the printed formula; kCorrected and kBoth check the halved one.
  VariantChoice variant = VariantChoice::kBoth;
};

namespace detail {

inline std::string str(const BigInt& v) { return v.str(); }
inline std::string str(const Rational& v) { return v.str(); }

struct SuiteSpec {
  std::uint64_t min_n;
  bool even_only;
};

inline SuiteSpec suite_spec(std::string_view identity) {
  if (identity == "williams-t11") return {1, false};
  if (identity == "thm11b" || identity == "lemma21b" || identity == "thm22b") return {2, true};
  return {2, false};
}

inline std::vector<unsigned> k_values(const VerifyOptions& opt, unsigned last) {
  if (opt.k) return {*opt.k};
  std::vector<unsigned> ks;
  for (unsigned k = 1; k <= last; ++k) ks.push_back(k);
  return ks;
}

inline std::vector<EvenFunction> test_functions(const VerifyOptions& opt, std::uint64_t n) {
  std::vector<EvenFunction> fs;
  for (unsigned k : k_values(opt, 3)) fs.push_back(EvenFunction::monomial(k));
  if (n <= opt.random_depth) {
    for (unsigned i = 0; i < opt.random_functions; ++i) {
      fs.push_back(random_even_table(n, derive_seed(opt.seed, n, i)));
    }
  }
  return fs;
}

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  std::uint64_t ms() const {
    if (!enabled_) return 0;
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                          std::chrono::steady_clock::now() - start_)
                                          .count());
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

inline VerificationRecord from_side(const IdentitySide& side, std::uint64_t ms) {
  return {side.n, side.parameters, str(side.lhs), str(side.rhs), side.match(), ms, ""};
}

inline std::vector<VerificationRecord> suite_eq12(const VerifyOptions& opt, std::uint64_t n) {
  std::vector<VerificationRecord> out;
  for (unsigned k : k_values(opt, 8)) {
    Stopwatch sw(opt.timing);
    const BigInt direct = coprime_power_sum_direct(n, k).value;
    const BigInt through = coprime_power_sum_mobius(n, k, InnerBound::kThroughQuotient).value;
    const BigInt before = coprime_power_sum_mobius(n, k, InnerBound::kBeforeQuotient).value;
    const BigInt bern = coprime_power_sum_bernoulli(n, k).value;
    std::string note;
    if (through != direct) note += "mobius(n/d)=" + str(through) + " ";
    if (before != direct) note += "mobius(n/d-1)=" + str(before) + " ";
    const bool match = note.empty() && bern == direct;
    if (!note.empty()) note.pop_back();
    out.push_back({n, "k=" + std::to_string(k), str(direct), str(bern), match, sw.ms(), note});
  }
  return out;
}

template <typename Identity>
std::vector<VerificationRecord> suite_even_function(const VerifyOptions& opt, std::uint64_t n,
                                                    Identity&& identity) {
  std::vector<VerificationRecord> out;
  for (const auto& f : test_functions(opt, n)) {
    Stopwatch sw(opt.timing);
    const IdentitySide side = identity(n, f);
    out.push_back(from_side(side, sw.ms()));
  }
  return out;
}

inline std::vector<VerificationRecord> suite_lemma21a(const VerifyOptions& opt, std::uint64_t n) {
  std::vector<VerificationRecord> out;
  for (unsigned k : k_values(opt, 4)) {
    Stopwatch sw(opt.timing);
    out.push_back(from_side(lemma_21a(n, k), sw.ms()));
  }
  return out;
}

inline std::vector<VerificationRecord> suite_lemma21b(const VerifyOptions& opt, std::uint64_t n) {
  std::vector<VerificationRecord> out;
  for (unsigned k : k_values(opt, 3)) {
    Stopwatch sw(opt.timing);
    const Lemma21bReport r = lemma_21b(n, k);
    const bool paper = opt.variant == VariantChoice::kPaper;
    std::string note = r.verdict() + "; " + (paper ? "corrected rhs=" + str(r.corrected_rhs)
                                                   : "paper rhs=" + str(r.paper_rhs));
    if (r.paper_rhs == 2 * r.lhs) note += " (paper 2x lhs)";
    out.push_back({n, "k=" + std::to_string(k), str(r.lhs),
                   str(paper ? r.paper_rhs : r.corrected_rhs),
                   paper ? r.matches_paper() : r.matches_corrected(), sw.ms(), note});
  }
  return out;
}

// Compares `closed` against each labelled oracle value; match iff all agree.
struct OracleCheck {
  std::string label;
  BigInt value;
};

inline VerificationRecord compare_all(std::uint64_t n, const BigInt& closed,
                                      const std::vector<OracleCheck>& oracles, std::string note,
                                      std::uint64_t ms) {
  std::string check;
  bool match = true;
  for (const auto& o : oracles) {
    if (!check.empty()) check += ',';
    check += o.label;
    if (o.value != closed) {
      match = false;
      if (!note.empty()) note += "; ";
      note += o.label + "=" + str(o.value);
    }
  }
  return {n, check, str(closed), str(oracles.front().value), match, ms, note};
}

inline std::vector<VerificationRecord> suite_thm22a(const VerifyOptions& opt, std::uint64_t n) {
  Stopwatch sw(opt.timing);
  const BigInt closed = theorem_22a(n).value;
  std::vector<OracleCheck> oracles{{"reduced", count_reduced(n, CountFamily::kGp)}};
  if (n <= opt.oracle_depth) {
    for (CountFamily f : {CountFamily::kGp, CountFamily::kHp, CountFamily::kIp}) {
      oracles.push_back({std::string("def:") + to_string(f), count_definitional(n, f)});
    }
  }
  return {compare_all(n, closed, oracles, "", sw.ms())};
}

inline std::vector<VerificationRecord> suite_thm22b(const VerifyOptions& opt, std::uint64_t n) {
  Stopwatch sw(opt.timing);
  const BigInt corrected = theorem_22b(n, FormulaVariant::kCorrected).value;
  const BigInt paper = theorem_22b(n, FormulaVariant::kPaper).value;
  std::vector<OracleCheck> oracles{{"reduced", count_reduced(n, CountFamily::kJp)}};
  if (n <= opt.oracle_depth) {
    for (CountFamily f : {CountFamily::kJp, CountFamily::kKp, CountFamily::kLp}) {
      oracles.push_back({std::string("def:") + to_string(f), count_definitional(n, f)});
    }
  }
  const bool doubled = paper == 2 * corrected;
  const bool check_paper = opt.variant == VariantChoice::kPaper;
  std::string note = check_paper ? "corrected=" + str(corrected) : "paper=" + str(paper);
  note += doubled ? " (paper 2x corrected)" : " (paper NOT 2x corrected)";
  auto rec = compare_all(n, check_paper ? paper : corrected, oracles, note, sw.ms());
  rec.match = rec.match && doubled;
  return {rec};
}

inline std::vector<VerificationRecord> suite_thm31(const VerifyOptions& opt, std::uint64_t n) {
  Stopwatch sw(opt.timing);
  const BigInt closed = theorem_31(n).value;
  std::vector<OracleCheck> oracles{{"convolution", convolution_sigma3_sigma(n)},
                                   {"reduced", count_reduced(n, CountFamily::kG)}};
  if (n <= opt.oracle_depth) {
    for (CountFamily f : {CountFamily::kG, CountFamily::kH, CountFamily::kI}) {
      oracles.push_back({std::string("def:") + to_string(f), count_definitional(n, f)});
    }
  }
  return {compare_all(n, closed, oracles, "", sw.ms())};
}

inline std::vector<VerificationRecord> suite_definitional(const VerifyOptions& opt,
                                                          std::uint64_t n) {
  std::vector<VerificationRecord> out;
  if (n > opt.oracle_depth) return out;
  for (CountFamily f : kAllFamilies) {
    if (requires_even_n(f) && n % 2 != 0) continue;
    Stopwatch sw(opt.timing);
    const BigInt def = count_definitional(n, f);
    const BigInt red = count_reduced(n, f);
    const BigInt closed = closed_form(f, n, FormulaVariant::kCorrected).value;
    std::string note;
    if (red != def) note = "reduced=" + str(red);
    out.push_back({n, to_string(f), str(def), str(closed), def == red && def == closed, sw.ms(),
                   note});
  }
  return out;
}

using Suite = std::function<std::vector<VerificationRecord>(const VerifyOptions&, std::uint64_t)>;

inline Suite suite_for(std::string_view identity) {
  if (identity == "eq12") return suite_eq12;
  if (identity == "thm11a") {
    return [](const VerifyOptions& o, std::uint64_t n) {
      return suite_even_function(o, n, [](std::uint64_t m, const EvenFunction& f) { return theorem_1a(m, f); });
    };
  }
  if (identity == "thm11b") {
    return [](const VerifyOptions& o, std::uint64_t n) {
      return suite_even_function(o, n, [](std::uint64_t m, const EvenFunction& f) { return theorem_1b(m, f); });
    };
  }
  if (identity == "williams-t11") {
    return [](const VerifyOptions& o, std::uint64_t n) {
      return suite_even_function(o, n, [](std::uint64_t m, const EvenFunction& f) { return williams_t11(m, f); });
    };
  }
  if (identity == "lemma21a") return suite_lemma21a;
  if (identity == "lemma21b") return suite_lemma21b;
  if (identity == "thm22a") return suite_thm22a;
  if (identity == "thm22b") return suite_thm22b;
  if (identity == "thm31") return suite_thm31;
  if (identity == "definitional") return suite_definitional;
  return {};
}

}  // namespace detail

inline bool is_known_identity(std::string_view name) {
  return std::find(kIdentityNames.begin(), kIdentityNames.end(), name) != kIdentityNames.end();
}

/// Runs one identity suite over the range. Throws std::invalid_argument for
/// unknown identities, n below the identity's minimum, or bad parameters.
inline VerificationReport run_verification(const VerifyOptions& opt) {
  if (!is_known_identity(opt.identity)) {
    throw std::invalid_argument("unknown identity '" + opt.identity + "'");
  }
  const auto spec = detail::suite_spec(opt.identity);
  if (opt.range.first < spec.min_n) {
    throw std::invalid_argument(opt.identity + " requires n >= " + std::to_string(spec.min_n));
  }
  if (opt.k && *opt.k == 0) throw std::invalid_argument("--k must be >= 1");
  if (opt.jobs == 0) throw std::invalid_argument("--jobs must be >= 1");

  std::vector<std::uint64_t> ns;
  for (std::uint64_t n = opt.range.first; n <= opt.range.last; ++n) {
    if (!spec.even_only || n % 2 == 0) ns.push_back(n);
  }

  const auto suite = detail::suite_for(opt.identity);
  std::vector<std::vector<VerificationRecord>> slots(ns.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < ns.size(); i = next++) {
      try {
        slots[i] = suite(opt, ns[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned workers = std::min<std::size_t>(opt.jobs, std::max<std::size_t>(ns.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  VerificationReport report;
  report.identity = opt.identity;
  report.range = opt.range;
  report.seed = opt.seed;
  for (auto& slot : slots) {
    for (auto& r : slot) report.records.push_back(std::move(r));
  }
  report.tally();
  return report;
}

}  // namespace lrep
