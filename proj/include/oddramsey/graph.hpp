#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oddramsey/error.hpp"
#include "oddramsey/parity.hpp"

namespace oddramsey {

using Vertex = int;
using VertexPair = std::pair<Vertex, Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Colour c = 1;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Largest vertex count any constructor or reader will accept.
/// Overridable with ODDRAMSEY_VERTEX_LIMIT.
inline int vertex_limit() {
  if (const char* env = std::getenv("ODDRAMSEY_VERTEX_LIMIT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 4096;
}

/// Anything that can report the colour of a vertex pair (0 for a non-edge)
/// and the size of its palette.
template <class V>
concept ColourView = requires(const V& view, Vertex a, Vertex b) {
  { view.colour(a, b) } -> std::convertible_to<Colour>;
  { view.r() } -> std::convertible_to<int>;
  { view.n() } -> std::convertible_to<int>;
};

/// An n-vertex simple graph with edges coloured from 1..r.
///
/// Holds the edge list exactly as supplied (so that validate() can report
/// loops, duplicates and out-of-range colours) plus a dense colour matrix and
/// adjacency bitsets for O(1) lookups. Immutable after construction.
class ColouredGraph {
 public:
  ColouredGraph() = default;

  ColouredGraph(int n, int r, std::vector<Edge> edges, bool complete_flag = false)
      : n_(n), r_(r), complete_(complete_flag), edges_(std::move(edges)) {
    if (n < 0) throw ParameterError("vertex count must be nonnegative");
    if (n > vertex_limit())
      throw ParameterError("vertex count " + std::to_string(n) + " exceeds the vertex limit " +
                           std::to_string(vertex_limit()));
    if (r < 1) throw ParameterError("colour count must be at least 1");
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    matrix_.assign(static_cast<std::size_t>(n) * n, 0);
    adjacency_.assign(static_cast<std::size_t>(n) * words_, 0);
    degree_.assign(static_cast<std::size_t>(n), 0);
    for (const Edge& e : edges_) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) continue;
      if (e.c < 1 || e.c > 0xFFFF) continue;
      auto& slot = matrix_[idx(e.u, e.v)];
      if (slot != 0) continue;
      slot = static_cast<std::uint16_t>(e.c);
      matrix_[idx(e.v, e.u)] = slot;
      adjacency_[e.u * words_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
      adjacency_[e.v * words_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
      ++degree_[e.u];
      ++degree_[e.v];
      ++simple_edges_;
    }
  }

  /// Complete graph on n vertices coloured by `colour_of(u, v)` (u < v).
  template <class F>
  static ColouredGraph complete(int n, int r, F&& colour_of) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, static_cast<Colour>(colour_of(u, v))});
    return ColouredGraph(n, r, std::move(edges), true);
  }

  int n() const { return n_; }
  int r() const { return r_; }
  bool complete_flag() const { return complete_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return simple_edges_; }

  /// Colour of {u, v}, or 0 when the pair is not an edge.
  Colour colour(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return 0;
    return matrix_[idx(u, v)];
  }

  bool adjacent(Vertex u, Vertex v) const { return colour(u, v) != 0; }

  int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }

  int min_degree() const {
    if (n_ == 0) return 0;
    return *std::min_element(degree_.begin(), degree_.end());
  }

  /// Whether every pair is an edge (regardless of the flag).
  bool is_complete() const {
    return simple_edges_ == static_cast<std::size_t>(n_) * (n_ > 0 ? n_ - 1 : 0) / 2;
  }

  std::span<const std::uint64_t> neighbour_bits(Vertex v) const {
    return {adjacency_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  std::vector<Vertex> neighbours(Vertex v) const {
    std::vector<Vertex> out;
    auto bits = neighbour_bits(v);
    for (std::size_t w = 0; w < bits.size(); ++w) {
      auto word = bits[w];
      while (word != 0) {
        out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(word)));
        word &= word - 1;
      }
    }
    return out;
  }

  /// Colours that appear on at least one edge.
  std::vector<Colour> used_colours() const {
    std::vector<bool> seen(static_cast<std::size_t>(r_) + 1, false);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v) {
        Colour c = colour(u, v);
        if (c >= 1 && c <= r_) seen[c] = true;
      }
    std::vector<Colour> out;
    for (Colour c = 1; c <= r_; ++c)
      if (seen[c]) out.push_back(c);
    return out;
  }

 private:
  std::size_t idx(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  int r_ = 1;
  bool complete_ = false;
  std::vector<Edge> edges_;
  std::vector<std::uint16_t> matrix_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adjacency_;
  std::vector<int> degree_;
  std::size_t simple_edges_ = 0;
};

enum class ViolationKind { VertexRange, SelfLoop, ParallelEdge, ColourRange, Completeness };

struct Violation {
  ViolationKind kind;
  std::size_t edge_index;  // position in edges(); edges().size() for graph-level issues
  std::string message;
};

/// Every invariant violation of `g`, in edge order followed by graph-level
/// checks. An empty result means the graph is valid.
inline std::vector<Violation> validate(const ColouredGraph& g) {
  std::vector<Violation> out;
  const auto& edges = g.edges();
  std::vector<VertexPair> seen;
  seen.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    std::string where = "edge #" + std::to_string(i) + " {" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + "}";
    if (e.u < 0 || e.v < 0 || e.u >= g.n() || e.v >= g.n()) {
      out.push_back({ViolationKind::VertexRange, i, where + ": endpoint outside 0.." + std::to_string(g.n() - 1)});
      continue;
    }
    if (e.u == e.v) {
      out.push_back({ViolationKind::SelfLoop, i, where + ": self-loop"});
      continue;
    }
    if (e.c < 1 || e.c > g.r())
      out.push_back({ViolationKind::ColourRange, i,
                     where + ": colour " + std::to_string(e.c) + " outside 1.." + std::to_string(g.r())});
    seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  // Parallel edges: report each repeat after the first occurrence.
  std::vector<std::pair<VertexPair, std::size_t>> keyed;
  for (std::size_t i = 0, k = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 0 || e.v < 0 || e.u >= g.n() || e.v >= g.n() || e.u == e.v) continue;
    keyed.emplace_back(seen[k++], i);
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < keyed.size(); ++i)
    if (keyed[i].first == keyed[i - 1].first)
      out.push_back({ViolationKind::ParallelEdge, keyed[i].second,
                     "edge #" + std::to_string(keyed[i].second) + " {" + std::to_string(keyed[i].first.first) +
                         "," + std::to_string(keyed[i].first.second) + "}: parallel edge"});
  if (g.complete_flag() && !g.is_complete())
    out.push_back({ViolationKind::Completeness, edges.size(),
                   "complete flag set but graph has " + std::to_string(g.edge_count()) + " of " +
                       std::to_string(static_cast<std::size_t>(g.n()) * (g.n() > 0 ? g.n() - 1 : 0) / 2) +
                       " edges"});
  return out;
}

inline void require_valid(const ColouredGraph& g) {
  auto violations = validate(g);
  if (violations.empty()) return;
  std::string msg = "invalid colouring:";
  for (const auto& v : violations) msg += "\n  " + v.message;
  throw InvalidGraphError(msg);
}

/// Parity of the colours on `edges`. Throws MissingEdgeError for a non-edge.
template <ColourView V>
ParityVector parity_vector(const V& g, std::span<const VertexPair> edges) {
  ParityVector p(g.r());
  for (auto [a, b] : edges) {
    Colour c = g.colour(a, b);
    if (c == 0) throw MissingEdgeError(a, b);
    p.flip(c);
  }
  return p;
}

template <ColourView V>
ParityVector parity_vector(const V& g, std::initializer_list<VertexPair> edges) {
  return parity_vector(g, std::span<const VertexPair>(edges.begin(), edges.size()));
}

}  // namespace oddramsey
