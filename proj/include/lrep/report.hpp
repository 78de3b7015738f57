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

// Verification reports and their CSV / JSON / plain renderings. Exact values
// are carried as decimal strings; JSON keys are emitted in a fixed order so
// identical reports serialize to identical bytes.

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace lrep {

enum class OutputFormat { kPlain, kCsv, kJson };

inline std::optional<OutputFormat> parse_format(std::string_view s) {
  if (s == "plain") return OutputFormat::kPlain;
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  return std::nullopt;
}

/// Inclusive range of n.
struct NRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;

  std::uint64_t size() const { return last - first + 1; }
  friend bool operator==(const NRange&, const NRange&) = default;
};

/// Accepts "N" or "A..B" with A <= B.
inline NRange parse_range(std::string_view text) {
  auto parse_number = [&](std::string_view s) -> std::uint64_t {
    if (s.empty() || s.size() > 18) throw std::invalid_argument("bad range '" + std::string(text) + "'");
    std::uint64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad range '" + std::string(text) + "'");
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
  };
  const auto dots = text.find("..");
  NRange r;
  if (dots == std::string_view::npos) {
    r.first = r.last = parse_number(text);
  } else {
    r.first = parse_number(text.substr(0, dots));
    r.last = parse_number(text.substr(dots + 2));
  }
  if (r.first > r.last) throw std::invalid_argument("bad range '" + std::string(text) + "': start exceeds end");
  return r;
}

struct VerificationRecord {
  std::uint64_t n = 0;
  std::string check;
  std::string lhs;
  std::string rhs;
  bool match = false;
  std::uint64_t elapsed_ms = 0;
  std::string note;

  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

struct VerificationSummary {
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;

  friend bool operator==(const VerificationSummary&, const VerificationSummary&) = default;
};

struct VerificationReport {
  std::string identity;
  NRange range;
  std::uint64_t seed = 0;
  std::vector<VerificationRecord> records;
  VerificationSummary summary;

  /// Recomputes `summary` from the records.
  void tally() {
    summary = {};
    for (const auto& r : records) {
      ++summary.checked;
      if (r.match) {
        ++summary.passed;
      } else {
        ++summary.failed;
      }
    }
  }

  bool consistent() const {
    VerificationReport copy = *this;
    copy.tally();
    return copy.summary == summary;
  }

  bool ok() const { return summary.failed == 0; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

using Json = nlohmann::ordered_json;

inline Json to_json(const VerificationReport& report) {
  Json records = Json::array();
  for (const auto& r : report.records) {
    records.push_back(Json{{"n", r.n},
                           {"check", r.check},
                           {"lhs", r.lhs},
                           {"rhs", r.rhs},
                           {"match", r.match},
                           {"elapsed_ms", r.elapsed_ms},
                           {"note", r.note}});
  }
  return Json{{"identity", report.identity},
              {"range", Json{{"first", report.range.first}, {"last", report.range.last}}},
              {"seed", report.seed},
              {"records", std::move(records)},
              {"summary", Json{{"checked", report.summary.checked},
                               {"passed", report.summary.passed},
                               {"failed", report.summary.failed}}}};
}

inline VerificationReport report_from_json(const Json& j) {
  VerificationReport report;
  report.identity = j.at("identity").get<std::string>();
  report.range.first = j.at("range").at("first").get<std::uint64_t>();
  report.range.last = j.at("range").at("last").get<std::uint64_t>();
  report.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& r : j.at("records")) {
    VerificationRecord rec;
    rec.n = r.at("n").get<std::uint64_t>();
    rec.check = r.at("check").get<std::string>();
    rec.lhs = r.at("lhs").get<std::string>();
    rec.rhs = r.at("rhs").get<std::string>();
    rec.match = r.at("match").get<bool>();
    rec.elapsed_ms = r.at("elapsed_ms").get<std::uint64_t>();
    rec.note = r.at("note").get<std::string>();
    report.records.push_back(std::move(rec));
  }
  const auto& s = j.at("summary");
  report.summary.checked = s.at("checked").get<std::uint64_t>();
  report.summary.passed = s.at("passed").get<std::uint64_t>();
  report.summary.failed = s.at("failed").get<std::uint64_t>();
  return report;
}

inline VerificationReport parse_report(std::string_view text) {
  return report_from_json(Json::parse(text));
}

namespace detail {

// Fields are integers, rationals, labels, or notes; only notes may contain
// commas or quotes.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

inline std::string render(const VerificationReport& report, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::kJson:
      out << to_json(report).dump(2) << '\n';
      break;
    case OutputFormat::kCsv:
      out << "n,check,lhs,rhs,match,elapsed_ms,note\n";
      for (const auto& r : report.records) {
        out << r.n << ',' << detail::csv_field(r.check) << ',' << r.lhs << ',' << r.rhs << ','
            << (r.match ? "true" : "false") << ',' << r.elapsed_ms << ','
            << detail::csv_field(r.note) << '\n';
      }
      break;
    case OutputFormat::kPlain:
      out << "verify " << report.identity << " n=" << report.range.first << ".."
          << report.range.last << " seed=" << report.seed << '\n';
      for (const auto& r : report.records) {
        out << (r.match ? "  ok   " : "  FAIL ") << "n=" << r.n << ' ' << r.check
            << " lhs=" << r.lhs << " rhs=" << r.rhs;
        if (r.elapsed_ms) out << " (" << r.elapsed_ms << " ms)";
        if (!r.note.empty()) out << "  [" << r.note << ']';
        out << '\n';
      }
      out << report.summary.checked << " checks, " << report.summary.passed << " passed, "
          << report.summary.failed << " failed\n";
      break;
  }
  return out.str();
}

}  // namespace lrep
