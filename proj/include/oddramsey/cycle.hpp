#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "oddramsey/graph.hpp"

namespace oddramsey {

/// An ordered vertex sequence, read as a path or (when closed) a cycle.
struct CyclePath {
  std::vector<Vertex> vertices;
  bool closed = true;

  std::size_t size() const { return vertices.size(); }

  /// Edge count: |V| for a cycle, |V|-1 for a path.
  std::size_t length() const {
    if (vertices.empty()) return 0;
    return closed ? vertices.size() : vertices.size() - 1;
  }

  std::vector<VertexPair> edges() const {
    std::vector<VertexPair> out;
    const std::size_t k = vertices.size();
    if (k < 2) return out;
    for (std::size_t i = 0; i + 1 < k; ++i) out.emplace_back(vertices[i], vertices[i + 1]);
    if (closed) out.emplace_back(vertices[k - 1], vertices[0]);
    return out;
  }

  friend bool operator==(const CyclePath&, const CyclePath&) = default;
};

/// Throws InvalidCycleError unless `c` is a path/cycle of g: distinct
/// in-range vertices, consecutive pairs adjacent. Cycles need >= 3 vertices.
template <ColourView V>
void check_cycle(const V& g, const CyclePath& c) {
  if (c.closed && c.size() < 3) throw InvalidCycleError("a cycle needs at least 3 vertices");
  std::vector<bool> seen(static_cast<std::size_t>(g.n()), false);
  for (Vertex v : c.vertices) {
    if (v < 0 || v >= g.n()) throw InvalidCycleError("vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw InvalidCycleError("vertex " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
  for (auto [a, b] : c.edges())
    if (g.colour(a, b) == 0)
      throw InvalidCycleError("consecutive vertices " + std::to_string(a) + " and " + std::to_string(b) +
                              " are not adjacent");
}

template <ColourView V>
bool is_valid_cycle(const V& g, const CyclePath& c) {
  try {
    check_cycle(g, c);
    return true;
  } catch (const InvalidCycleError&) {
    return false;
  }
}

template <ColourView V>
bool is_hamilton_cycle(const V& g, const CyclePath& c) {
  return c.closed && static_cast<int>(c.size()) == g.n() && is_valid_cycle(g, c);
}

template <ColourView V>
ParityVector cycle_parity(const V& g, const CyclePath& c) {
  auto edges = c.edges();
  return parity_vector(g, std::span<const VertexPair>(edges));
}

/// Colours appearing an odd number of times on the closed cycle `c`.
template <ColourView V>
std::vector<Colour> odd_colour_classes(const V& g, const CyclePath& c) {
  if (!c.closed) throw InvalidCycleError("odd_colour_classes expects a closed cycle");
  check_cycle(g, c);
  return cycle_parity(g, c).set_colours();
}

template <ColourView V>
bool is_even_coloured(const V& g, const CyclePath& c) {
  return odd_colour_classes(g, c).empty();
}

/// Equality of closed cycles up to rotation and reflection.
inline bool same_cycle(const CyclePath& a, const CyclePath& b) {
  if (a.size() != b.size()) return false;
  if (a.vertices.empty()) return true;
  const auto& x = a.vertices;
  const auto& y = b.vertices;
  const std::size_t k = x.size();
  auto start = std::find(y.begin(), y.end(), x[0]);
  if (start == y.end()) return false;
  const std::size_t off = static_cast<std::size_t>(start - y.begin());
  bool forward = true, backward = true;
  for (std::size_t i = 0; i < k && (forward || backward); ++i) {
    if (y[(off + i) % k] != x[i]) forward = false;
    if (y[(off + k - i) % k] != x[i]) backward = false;
  }
  return forward || backward;
}

/// Rotates/reflects a closed cycle to start at its smallest vertex and
/// continue towards the smaller of its two neighbours.
inline CyclePath canonical_cycle(const CyclePath& c) {
  if (!c.closed || c.size() < 3) return c;
  const auto& x = c.vertices;
  const std::size_t k = x.size();
  std::size_t m = static_cast<std::size_t>(std::min_element(x.begin(), x.end()) - x.begin());
  bool fwd = x[(m + 1) % k] < x[(m + k - 1) % k];
  CyclePath out;
  out.vertices.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.vertices.push_back(fwd ? x[(m + i) % k] : x[(m + k - i) % k]);
  return out;
}

inline std::string format_cycle(const CyclePath& c) {
  std::string out;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c.vertices[i]);
  }
  return out;
}

inline CyclePath parse_cycle(const std::string& line, bool closed = true) {
  std::istringstream in(line);
  CyclePath c;
  c.closed = closed;
  long long v;
  while (in >> v) c.vertices.push_back(static_cast<Vertex>(v));
  if (!in.eof()) throw FormatError("malformed cycle line: " + line);
  return c;
}

}  // namespace oddramsey
