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

// lrep: compute counting functions, print value tables, run verification
// sweeps.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "lrep/closed_forms.hpp"
#include "lrep/report.hpp"
#include "lrep/tables.hpp"
#include "lrep/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

lrep::OutputFormat format_or_throw(const std::string& s) {
  const auto f = lrep::parse_format(s);
  if (!f) throw std::invalid_argument("unknown format '" + s + "' (expected csv, json or plain)");
  return *f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representation counts via Liouville-type sums: closed forms and brute-force oracles"};
  app.require_subcommand(1);

  std::string format = "plain";
  std::string range_text;

  auto* compute = app.add_subcommand("compute", "Closed-form value of a counting function");
  std::string family_name;
  std::string variant_name = "both";
  compute->add_option("family", family_name, "Gp Hp Ip Jp Kp Lp G H I")->required();
  compute->add_option("range", range_text, "N or A..B")->required();
  compute->add_option("--variant", variant_name, "paper, corrected or both (Jp/Kp/Lp)");
  compute->add_option("--format", format, "plain, csv or json");

  auto* verify = app.add_subcommand("verify", "Check an identity over a range of n");
  lrep::VerifyOptions vopt;
  std::optional<unsigned> k;
  verify->add_option("identity", vopt.identity,
                     "eq12 thm11a thm11b williams-t11 lemma21a lemma21b thm22a thm22b thm31 "
                     "definitional")
      ->required();
  verify->add_option("range", range_text, "N or A..B")->required();
  verify->add_option("--k", k, "Single k (power 2k for f = x^{2k})");
  verify->add_option("--oracle-depth", vopt.oracle_depth, "Run definitional oracles for n <= D")
      ->capture_default_str();
  verify->add_option("--random-f", vopt.random_functions, "Random table functions per n")
      ->capture_default_str();
  verify->add_option("--random-depth", vopt.random_depth, "Random table functions for n <= D")
      ->capture_default_str();
  verify->add_option("--jobs", vopt.jobs, "Worker threads")->capture_default_str();
  verify->add_option("--seed", vopt.seed, "Seed for random table functions")->capture_default_str();
  verify->add_flag("--timing", vopt.timing, "Record elapsed milliseconds per check");
  verify->add_option("--variant", variant_name,
                     "lemma21b/thm22b: match against paper or corrected (default both = corrected)");
  verify->add_option("--format", format, "plain, csv or json");

  auto* table = app.add_subcommand("table", "Value table: n Gp Jp G phi sigma1 sigma3 sigma5");
  table->add_option("range", range_text, "N or A..B")->required();
  table->add_option("--format", format, "plain, csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const lrep::OutputFormat out_format = format_or_throw(format);
    const lrep::NRange range = lrep::parse_range(range_text);

    if (*compute) {
      const auto family = lrep::parse_family(family_name);
      if (!family) throw std::invalid_argument("unknown family '" + family_name + "'");
      const auto variant = lrep::parse_variant(variant_name);
      if (!variant) throw std::invalid_argument("unknown variant '" + variant_name + "'");
      std::cout << lrep::compute_table(*family, range, *variant).render(out_format);
      return kExitOk;
    }
    if (*table) {
      std::cout << lrep::summary_table(range).render(out_format);
      return kExitOk;
    }
    vopt.range = range;
    vopt.k = k;
    const auto variant = lrep::parse_variant(variant_name);
    if (!variant) throw std::invalid_argument("unknown variant '" + variant_name + "'");
    vopt.variant = *variant;
    const lrep::VerificationReport report = lrep::run_verification(vopt);
    std::cout << lrep::render(report, out_format);
    return report.ok() ? kExitOk : kExitFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "lrep: " << e.what() << '\n';
    return kExitUsage;
  } catch (const lrep::IntegralityError& e) {
    std::cerr << "lrep: internal error: " << e.what() << '\n';
    return kExitFailed;
  }
}
