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

#ifndef LAPSEP_GRAPH_HPP_
#define LAPSEP_GRAPH_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lapsep {

/// Raised when an operation needs at least one edge: the Laplacian of an
/// edgeless graph is the zero matrix and cannot be normalized.
class EmptyGraphError : public std::domain_error {
 public:
  EmptyGraphError() : std::domain_error("graph has no edges") {}
};

/// Malformed graph6 input. `offset()` is the index of the offending byte.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Simple undirected graph on vertices 0..n-1, stored as one 64-bit
/// adjacency mask per vertex.
class Graph {
 public:
  using Mask = std::uint64_t;
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  /// Edgeless graph on `n` vertices.
  explicit Graph(int n) : rows_(CheckOrder(n), 0) {}

  static Graph FromEdges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.AddEdge(u, v);
    return g;
  }

  int order() const { return static_cast<int>(rows_.size()); }

  bool adjacent(int u, int v) const {
    return (rows_[CheckVertex(u)] >> CheckVertex(v)) & 1U;
  }

  Mask neighbors(int v) const { return rows_[CheckVertex(v)]; }

  int degree(int v) const { return std::popcount(neighbors(v)); }

  int edge_count() const {
    int sum = 0;
    for (Mask row : rows_) sum += std::popcount(row);
    return sum / 2;
  }

  bool empty() const { return edge_count() == 0; }

  int min_degree() const {
    int d = order();
    for (int v = 0; v < order(); ++v) d = std::min(d, degree(v));
    return d;
  }

  bool is_complete() const {
    for (int v = 0; v < order(); ++v) {
      if (degree(v) != order() - 1) return false;
    }
    return true;
  }

  std::vector<int> degrees() const {
    std::vector<int> out(order());
    for (int v = 0; v < order(); ++v) out[v] = degree(v);
    return out;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u) {
      for (int v = u + 1; v < order(); ++v) {
        if (adjacent(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }

  void AddEdge(int u, int v) {
    CheckVertex(u);
    CheckVertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    rows_[u] |= Mask{1} << v;
    rows_[v] |= Mask{1} << u;
  }

  void RemoveEdge(int u, int v) {
    CheckVertex(u);
    CheckVertex(v);
    rows_[u] &= ~(Mask{1} << v);
    rows_[v] &= ~(Mask{1} << u);
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static std::size_t CheckOrder(int n) {
    if (n < 0 || n > kMaxVertices) {
      throw std::invalid_argument("vertex count out of range: " +
                                  std::to_string(n));
    }
    return static_cast<std::size_t>(n);
  }

  int CheckVertex(int v) const {
    if (v < 0 || v >= order()) {
      throw std::out_of_range("vertex out of range: " + std::to_string(v));
    }
    return v;
  }

  std::vector<Mask> rows_;
};

inline Graph CompleteGraph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.AddEdge(u, v);
  }
  return g;
}

/// K_{r,s} with parts {0..r-1} and {r..r+s-1}.
inline Graph CompleteBipartite(int r, int s) {
  if (r < 1 || s < 1) {
    throw std::invalid_argument("complete bipartite graph needs r, s >= 1");
  }
  Graph g(r + s);
  for (int u = 0; u < r; ++u) {
    for (int v = r; v < r + s; ++v) g.AddEdge(u, v);
  }
  return g;
}

inline Graph CycleGraph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.AddEdge(v, (v + 1) % n);
  return g;
}

inline Graph PathGraph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.AddEdge(v, v + 1);
  return g;
}

inline Graph Complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.AddEdge(u, v);
    }
  }
  return out;
}

/// Number of edges with one endpoint in `a` and the other in `b`. The two
/// vertex sets must be disjoint.
inline int EdgesBetween(const Graph& g, std::span<const int> a,
                        std::span<const int> b) {
  Graph::Mask mask_a = 0;
  Graph::Mask mask_b = 0;
  for (int v : a) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("bad vertex");
    mask_a |= Graph::Mask{1} << v;
  }
  for (int v : b) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("bad vertex");
    mask_b |= Graph::Mask{1} << v;
  }
  if (mask_a & mask_b) {
    throw std::invalid_argument("edges_between needs disjoint vertex sets");
  }
  int count = 0;
  for (int v = 0; v < g.order(); ++v) {
    if ((mask_a >> v) & 1U) count += std::popcount(g.neighbors(v) & mask_b);
  }
  return count;
}

// graph6: one size byte (n + 63) followed by the upper triangle packed six
// bits per byte, column by column: (0,1), (0,2), (1,2), (0,3), ...

inline constexpr int kGraph6MaxOrder = 62;

inline Graph ParseGraph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t base = 0;
  if (text.starts_with(kHeader)) base = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.size() <= base) throw Graph6Error("missing size byte", base);
  for (std::size_t i = base; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw Graph6Error("byte outside 63..126", i);
  }
  const int n = static_cast<unsigned char>(text[base]) - 63;
  if (n > kGraph6MaxOrder) {
    throw Graph6Error("orders above 62 are not supported", base);
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  const std::size_t body = text.size() - base - 1;
  if (body < expected) {
    throw Graph6Error("truncated bit stream", text.size());
  }
  if (body > expected) {
    throw Graph6Error("trailing bytes", base + 1 + expected);
  }

  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = static_cast<unsigned char>(text[base + 1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) g.AddEdge(u, v);
    }
  }
  if (k % 6 != 0) {
    const int last = static_cast<unsigned char>(text[base + expected]) - 63;
    if (last & ((1 << (6 - k % 6)) - 1)) {
      throw Graph6Error("nonzero padding bits", base + expected);
    }
  }
  return g;
}

inline std::string ToGraph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw std::invalid_argument("graph6 output limited to 62 vertices");
  }
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace lapsep

#endif  // LAPSEP_GRAPH_HPP_
