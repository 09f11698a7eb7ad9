// Copyright 2026 The lapsep Authors
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

#ifndef LAPSEP_SCAN_HPP_
#define LAPSEP_SCAN_HPP_

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "lapsep/classifier.hpp"
#include "lapsep/graph.hpp"

namespace lapsep {

struct ScanOptions {
  ClassifyOptions classify;
  int jobs = 1;
};

struct ScanRow {
  std::size_t line = 0;  // 1-based line number in the input
  std::string graph6;
  std::optional<GraphClassReport> report;
  std::string error;
};

/// Classifies every graph6 line of `in` (blank lines skipped). Malformed
/// lines become error rows; rows come back in input order whatever the
/// number of workers.
inline std::vector<ScanRow> Scan(std::istream& in, const TensorShape& shape,
                                 const ScanOptions& options = {}) {
  std::vector<ScanRow> rows;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    while (!text.empty() && (text.back() == '\r' || text.back() == ' ' ||
                             text.back() == '\t')) {
      text.pop_back();
    }
    if (text.empty()) continue;
    rows.push_back(ScanRow{line, text, std::nullopt, ""});
  }

  auto work = [&](ScanRow& row) {
    try {
      row.report = Classify(ParseGraph6(row.graph6), shape, options.classify);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, rows.size()));
  if (jobs <= 1) {
    for (auto& row : rows) work(row);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < rows.size(); i = next++) work(rows[i]);
    });
  }
  pool.clear();
  return rows;
}

inline constexpr const char* kTsvHeader =
    "graph6\tn\tshape\tclass\tn_separable\tn_entangled\tn_unknown\t"
    "witness_sep\twitness_ent\telapsed_ms";

inline std::string FormatTsvRow(const ScanRow& row, bool timing = true) {
  std::ostringstream out;
  if (!row.report) {
    out << row.graph6 << "\t-\t-\tERROR\t-\t-\t-\t-\t-\t-";
    return out.str();
  }
  const GraphClassReport& r = *row.report;
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_ms);
  out << row.graph6 << '\t' << r.graph.order() << '\t' << r.shape.ToString()
      << '\t' << ToString(r.graph_class) << '\t' << r.separable << '\t'
      << r.entangled << '\t' << r.unknown << '\t'
      << (r.separable_witness ? r.separable_witness->ToString() : "-") << '\t'
      << (r.entangled_witness ? r.entangled_witness->ToString() : "-") << '\t'
      << (timing ? elapsed : "-");
  return out.str();
}

inline nlohmann::json ToJson(const ScanRow& row, bool timing = true) {
  nlohmann::json j;
  j["graph6"] = row.graph6;
  j["line"] = row.line;
  if (!row.report) {
    j["error"] = row.error;
    return j;
  }
  const GraphClassReport& r = *row.report;
  j["n"] = r.graph.order();
  j["shape"] = r.shape.ToString();
  j["class"] = ToString(r.graph_class);
  j["n_separable"] = r.separable;
  j["n_entangled"] = r.entangled;
  j["n_unknown"] = r.unknown;
  j["witness_sep"] = r.separable_witness
                         ? nlohmann::json(r.separable_witness->ToString())
                         : nlohmann::json(nullptr);
  j["witness_ent"] = r.entangled_witness
                         ? nlohmann::json(r.entangled_witness->ToString())
                         : nlohmann::json(nullptr);
  j["complete"] = r.complete;
  j["elapsed_ms"] = timing ? nlohmann::json(r.elapsed_ms) : nlohmann::json(nullptr);
  return j;
}

}  // namespace lapsep

#endif  // LAPSEP_SCAN_HPP_
