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

// Value tables behind the `compute` and `table` subcommands.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lrep/arith.hpp"
#include "lrep/closed_forms.hpp"
#include "lrep/enumeration.hpp"
#include "lrep/report.hpp"

namespace lrep {

enum class VariantChoice { kPaper, kCorrected, kBoth };

inline std::optional<VariantChoice> parse_variant(std::string_view s) {
  if (s == "paper") return VariantChoice::kPaper;
  if (s == "corrected") return VariantChoice::kCorrected;
  if (s == "both") return VariantChoice::kBoth;
  return std::nullopt;
}

/// Columns of decimal strings; an empty cell marks a value excluded by parity.
struct ValueTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string render(OutputFormat format) const {
    std::ostringstream out;
    switch (format) {
      case OutputFormat::kCsv:
        write_row(out, columns, ",");
        for (const auto& row : rows) write_row(out, row, ",");
        break;
      case OutputFormat::kJson: {
        Json jrows = Json::array();
        for (const auto& row : rows) {
          Json obj = Json::object();
          for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c] == "n") {
              obj[columns[c]] = std::stoull(row[c]);
            } else if (row[c].empty()) {
              obj[columns[c]] = nullptr;
            } else {
              obj[columns[c]] = row[c];
            }
          }
          jrows.push_back(std::move(obj));
        }
        out << Json{{"title", title}, {"columns", columns}, {"rows", std::move(jrows)}}.dump(2)
            << '\n';
        break;
      }
      case OutputFormat::kPlain: {
        std::vector<std::size_t> width(columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
          width[c] = columns[c].size();
          for (const auto& row : rows) width[c] = std::max(width[c], std::max<std::size_t>(row[c].size(), 1));
        }
        auto line = [&](const std::vector<std::string>& cells) {
          for (std::size_t c = 0; c < cells.size(); ++c) {
            const std::string cell = cells[c].empty() ? "-" : cells[c];
            if (c) out << "  ";
            out << std::string(width[c] - cell.size(), ' ') << cell;
          }
          out << '\n';
        };
        line(columns);
        for (const auto& row : rows) line(row);
        break;
      }
    }
    return out.str();
  }

 private:
  static void write_row(std::ostringstream& out, const std::vector<std::string>& cells,
                        const char* sep) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out << sep;
      out << cells[c];
    }
    out << '\n';
  }
};

/// Closed-form values of one family over a range. Jp/Kp/Lp skip odd n inside
/// a range; a range holding no admissible n is rejected.
inline ValueTable compute_table(CountFamily family, NRange range, VariantChoice variant) {
  if (range.first < 2) throw std::invalid_argument("compute: n must be >= 2");
  const bool even_only = requires_even_n(family);
  const std::string name = to_string(family);
  ValueTable t;
  t.title = name;
  t.columns.push_back("n");
  if (even_only) {
    if (variant != VariantChoice::kCorrected) t.columns.push_back(name + "_paper");
    if (variant != VariantChoice::kPaper) t.columns.push_back(name + "_corrected");
  } else {
    t.columns.push_back(name);
  }
  for (std::uint64_t n = range.first; n <= range.last; ++n) {
    if (even_only && n % 2 != 0) continue;
    std::vector<std::string> row{std::to_string(n)};
    if (even_only) {
      if (variant != VariantChoice::kCorrected) {
        row.push_back(closed_form(family, n, FormulaVariant::kPaper).value.str());
      }
      if (variant != VariantChoice::kPaper) {
        row.push_back(closed_form(family, n, FormulaVariant::kCorrected).value.str());
      }
    } else {
      row.push_back(closed_form(family, n).value.str());
    }
    t.rows.push_back(std::move(row));
  }
  if (t.rows.empty()) {
    throw std::invalid_argument(name + " requires even n; range " + std::to_string(range.first) +
                                ".." + std::to_string(range.last) + " has none");
  }
  return t;
}

/// n, Gp, Jp_corrected, Jp_paper, G, phi, sigma1, sigma3, sigma5.
inline ValueTable summary_table(NRange range) {
  if (range.first < 2) throw std::invalid_argument("table: range start must be >= 2");
  ValueTable t;
  t.title = "table";
  t.columns = {"n", "Gp", "Jp_corrected", "Jp_paper", "G", "phi", "sigma1", "sigma3", "sigma5"};
  for (std::uint64_t n = range.first; n <= range.last; ++n) {
    const auto f = factorize(n);
    const bool even = n % 2 == 0;
    t.rows.push_back({std::to_string(n), theorem_22a(n).value.str(),
                      even ? theorem_22b(n, FormulaVariant::kCorrected).value.str() : "",
                      even ? theorem_22b(n, FormulaVariant::kPaper).value.str() : "",
                      theorem_31(n).value.str(), std::to_string(euler_phi(f)),
                      sigma_m(f, 1).str(), sigma_m(f, 3).str(), sigma_m(f, 5).str()});
  }
  return t;
}

}  // namespace lrep
