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

// Command-line front end. Kept in a header so tests can drive it with
// in-memory streams.

#ifndef LAPSEP_TOOLS_LAPSEP_CLI_HPP_
#define LAPSEP_TOOLS_LAPSEP_CLI_HPP_

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "lapsep/classifier.hpp"
#include "lapsep/density.hpp"
#include "lapsep/entangler.hpp"
#include "lapsep/graph.hpp"
#include "lapsep/labeling.hpp"
#include "lapsep/pt_graph.hpp"
#include "lapsep/scan.hpp"

namespace lapsep::cli {

enum ExitCode { kOk = 0, kInputError = 1, kIncomplete = 2 };

struct Config {
  std::string shape;
  double tolerance = 1e-9;
  bool reduced = true;
  std::int64_t budget = 1'000'000;
  int jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  std::uint64_t seed = 1;
  std::string format = "tsv";
  bool timing = true;
};

namespace detail {

inline std::string Join(const std::vector<int>& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

inline TensorShape RequireShape(const Config& config) {
  if (config.shape.empty()) {
    throw std::invalid_argument("--shape is required (e.g. --shape 2x3)");
  }
  return TensorShape::Parse(config.shape);
}

inline Graph ReadGraph(const std::string& graph6, const TensorShape& shape) {
  Graph g = ParseGraph6(graph6);
  if (g.order() != shape.size()) {
    throw std::invalid_argument("graph has " + std::to_string(g.order()) +
                                " vertices but shape " + shape.ToString() +
                                " has " + std::to_string(shape.size()));
  }
  return g;
}

inline PptOptions MakePptOptions(const Config& config) {
  PptOptions o;
  o.tolerance = config.tolerance;
  return o;
}

inline ClassifyOptions MakeClassifyOptions(const Config& config) {
  ClassifyOptions o;
  o.reduction = config.reduced ? Reduction::kFull : Reduction::kNone;
  o.budget = config.budget;
  o.verdict.ppt = MakePptOptions(config);
  return o;
}

inline std::string FormatWitness(const PptResult& ppt) {
  if (ppt.witness.empty()) return "-";
  std::ostringstream out;
  for (std::size_t i = 0; i < ppt.witness.size(); ++i) {
    if (i > 0) out << ' ';
    out << ppt.witness[i];
  }
  return out.str();
}

inline int Check(const Config& config, const std::string& graph6,
                 const std::string& labeling, bool dump, std::ostream& out) {
  const TensorShape shape = RequireShape(config);
  const Graph g = ReadGraph(graph6, shape);
  const VertexLabeling lab = VertexLabeling::Parse(labeling, shape);
  VerdictOptions options;
  options.ppt = MakePptOptions(config);
  const LabelingVerdict v = ClassifyLabeling(g, lab, shape, options);
  out << "graph6: " << graph6 << "\nshape: " << shape.ToString()
      << "\nlabeling: " << lab.ToString() << '\n';
  for (const auto& cut : v.cuts) {
    out << "cut " << cut.split.ToString() << ": degree condition "
        << (cut.degree_condition() ? "PASS" : "FAIL");
    if (!cut.degree_condition()) out << " (vertex " << cut.degree_violation << ")";
    if (cut.ppt) {
      out << ", " << (cut.ppt->ppt ? "PPT" : "NPT") << ", min eigenvalue "
          << std::setprecision(12) << cut.ppt->min_eigenvalue
          << ", witness " << FormatWitness(*cut.ppt);
    }
    out << '\n';
  }
  out << "verdict: " << ToString(v.verdict);
  if (v.verdict == Verdict::kSeparable) out << " (" << ToString(v.reason) << ")";
  out << '\n';
  if (dump) {
    const DensityMatrix rho = NormalizedLaplacian(g, lab);
    out << "rho:\n" << rho.Dump();
    for (const auto& cut : v.cuts) {
      out << "rho^pT " << cut.split.ToString() << ":\n"
          << PartialTranspose(rho, cut.split).Dump();
    }
  }
  return kOk;
}

inline int PtGraph(const Config& config, const std::string& graph6,
                   const std::string& labeling, int cut_factor,
                   std::ostream& out) {
  const TensorShape shape = RequireShape(config);
  const Graph g = ReadGraph(graph6, shape);
  const VertexLabeling lab = VertexLabeling::Parse(labeling, shape);
  if (cut_factor < 0 || cut_factor >= shape.rank()) {
    throw std::invalid_argument("--cut must name a factor index");
  }
  const BipartiteSplit split = BipartiteSplit::SingleFactor(shape, cut_factor);
  const Graph pt = PartialTransposeGraph(g, lab, split);
  out << ToGraph6(pt) << '\n';
  out << "vertex\tdegree\tpt_degree\n";
  for (int v = 0; v < g.order(); ++v) {
    out << v << '\t' << g.degree(v) << '\t' << pt.degree(v) << '\n';
  }
  out << (DegreeCondition(g, lab, split) ? "PASS" : "FAIL") << '\n';
  return kOk;
}

inline int Entangle(const Config& config, const std::string& graph6,
                    std::ostream& out) {
  const TensorShape shape = RequireShape(config);
  const Graph g = ReadGraph(graph6, shape);
  FallbackOptions options;
  options.budget = config.budget;
  options.seed = config.seed;
  const SearchOutcome outcome = FindEntanglingLabeling(g, shape, options);
  if (!outcome.certificate) {
    out << "no entangling labeling found (" << outcome.tested
        << " labelings tested, "
        << (outcome.exhaustive ? "exhaustive" : "budget exhausted")
        << ", seed " << outcome.seed << ")\n";
    return outcome.exhaustive ? kOk : kIncomplete;
  }
  const EntanglingCertificate& c = *outcome.certificate;
  const PptResult ppt = IsPpt(NormalizedLaplacian(g, c.labeling), c.split,
                              MakePptOptions(config));
  out << "case: " << ToString(c.proof_case) << '\n'
      << "split: " << c.split.ToString() << " p=" << c.split.p()
      << " q=" << c.split.q() << '\n'
      << "x: " << c.pivot << '\n'
      << "U: " << (c.u_set.empty() ? "-" : Join(c.u_set)) << '\n'
      << "W: " << (c.w_set.empty() ? "-" : Join(c.w_set)) << '\n'
      << "labeling: " << c.labeling.ToString() << '\n'
      << "d: " << c.min_degree << '\n'
      << "deg_pT(x): " << c.pivot_pt_degree << '\n';
  if (c.proof_case != ProofCase::kFallbackSearch) {
    out << "k t r s: " << c.arithmetic.k << ' ' << c.arithmetic.t << ' '
        << c.arithmetic.r << ' ' << c.arithmetic.s << '\n';
  } else {
    out << "tested: " << outcome.tested << '\n';
  }
  out << "npt min eigenvalue: " << std::setprecision(12) << ppt.min_eigenvalue
      << '\n';
  return kOk;
}

inline void WriteRows(const Config& config, const std::vector<ScanRow>& rows,
                      std::ostream& out) {
  if (config.format == "json") {
    for (const auto& row : rows) out << ToJson(row, config.timing).dump() << '\n';
    return;
  }
  out << kTsvHeader << '\n';
  for (const auto& row : rows) out << FormatTsvRow(row, config.timing) << '\n';
}

/// Reports error rows on `err`; any error wins over an incomplete row.
inline int ExitFor(const std::vector<ScanRow>& rows, std::ostream& err) {
  bool failed = false, incomplete = false;
  for (const auto& row : rows) {
    if (!row.report) {
      err << "line " << row.line << ": " << row.error << '\n';
      failed = true;
      continue;
    }
    incomplete = incomplete || !row.report->complete;
  }
  if (failed) return kInputError;
  return incomplete ? kIncomplete : kOk;
}

inline int ClassifyOne(const Config& config, const std::string& graph6,
                       std::ostream& out, std::ostream& err) {
  const TensorShape shape = RequireShape(config);
  ReadGraph(graph6, shape);
  std::istringstream in(graph6);
  ScanOptions options;
  options.classify = MakeClassifyOptions(config);
  const auto rows = Scan(in, shape, options);
  WriteRows(config, rows, out);
  return ExitFor(rows, err);
}

inline int ScanStream(const Config& config, const std::string& path,
                      std::istream& in, std::ostream& out, std::ostream& err) {
  const TensorShape shape = RequireShape(config);
  ScanOptions options;
  options.classify = MakeClassifyOptions(config);
  options.jobs = config.jobs;
  std::vector<ScanRow> rows;
  if (path.empty() || path == "-") {
    rows = Scan(in, shape, options);
  } else {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open " + path);
    rows = Scan(file, shape, options);
  }
  WriteRows(config, rows, out);
  return ExitFor(rows, err);
}

}  // namespace detail

/// Runs the tool; returns the process exit code.
inline int Run(int argc, const char* const* argv, std::istream& in,
               std::ostream& out, std::ostream& err) {
  CLI::App app{"Separability of graph Laplacian density matrices", "lapsep"};
  app.fallthrough();
  app.require_subcommand(1);
  Config config;
  app.add_option("--shape", config.shape, "Tensor shape, e.g. 2x3")
      ->envname("LAPSEP_SHAPE");
  app.add_option("--tol", config.tolerance,
                 "Floating eigenvalue tolerance band")
      ->envname("LAPSEP_TOL")
      ->check(CLI::PositiveNumber);
  app.add_flag("--reduced,!--full", config.reduced,
               "Enumerate orbit representatives (default) or all labelings");
  app.add_option("--budget", config.budget, "Labeling budget for searches and classification")
      ->envname("LAPSEP_BUDGET")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 62));
  app.add_option("--jobs", config.jobs, "Worker threads for scan")
      ->envname("LAPSEP_JOBS")
      ->check(CLI::Range(1, 1024));
  app.add_option("--seed", config.seed, "Seed for randomized search")
      ->envname("LAPSEP_SEED");
  app.add_option("--format", config.format, "Output format")
      ->envname("LAPSEP_FORMAT")
      ->check(CLI::IsMember({"tsv", "json"}));
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Print '-' instead of elapsed times");

  std::string graph6;
  std::string labeling;
  std::string path;
  bool dump = false;
  int cut = 0;

  auto* check = app.add_subcommand("check", "Verdict for one labeling");
  check->add_option("graph6", graph6)->required();
  check->add_option("--labeling", labeling, "Permutation line")->required();
  check->add_flag("--dump", dump, "Print rho and its partial transposes");

  auto* pt = app.add_subcommand("pt-graph", "Partial transpose graph");
  pt->add_option("graph6", graph6)->required();
  pt->add_option("--labeling", labeling, "Permutation line")->required();
  pt->add_option("--cut", cut, "Factor transposed against the rest");

  auto* entangle = app.add_subcommand("entangle", "Find an entangling labeling");
  entangle->add_option("graph6", graph6)->required();

  auto* classify = app.add_subcommand("classify", "Class S / SE / E of a graph");
  classify->add_option("graph6", graph6)->required();

  auto* scan = app.add_subcommand("scan", "Classify graph6 lines");
  scan->add_option("file", path, "Input file ('-' or omitted: stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  config.timing = !no_timing;

  try {
    if (*check) return detail::Check(config, graph6, labeling, dump, out);
    if (*pt) return detail::PtGraph(config, graph6, labeling, cut, out);
    if (*entangle) return detail::Entangle(config, graph6, out);
    if (*classify) return detail::ClassifyOne(config, graph6, out, err);
    if (*scan) return detail::ScanStream(config, path, in, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace lapsep::cli

#endif  // LAPSEP_TOOLS_LAPSEP_CLI_HPP_
