// Naive reference implementations used to cross-check the library.
#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <vector>

#include "oddramsey/graph.hpp"

namespace ref {

using oddramsey::Colour;
using oddramsey::ColouredGraph;
using oddramsey::Vertex;

/// All Hamilton cycles as vertex orders starting at 0, each undirected
/// cycle listed once, by permuting 1..n-1.
inline std::vector<std::vector<Vertex>> hamilton_cycles(const ColouredGraph& g) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.n();
  if (n < 3) return out;
  std::vector<Vertex> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  do {
    if (rest.front() > rest.back()) continue;
    bool ok = g.adjacent(0, rest.front()) && g.adjacent(rest.back(), 0);
    for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g.adjacent(rest[i], rest[i + 1]);
    if (!ok) continue;
    std::vector<Vertex> c{0};
    c.insert(c.end(), rest.begin(), rest.end());
    out.push_back(std::move(c));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

inline std::vector<int> colour_counts(const ColouredGraph& g, const std::vector<Vertex>& cyc) {
  std::vector<int> count(static_cast<std::size_t>(g.r()) + 1, 0);
  for (std::size_t i = 0; i < cyc.size(); ++i) ++count[g.colour(cyc[i], cyc[(i + 1) % cyc.size()])];
  return count;
}

inline int odd_classes(const ColouredGraph& g, const std::vector<Vertex>& cyc) {
  auto count = colour_counts(g, cyc);
  return static_cast<int>(std::count_if(count.begin() + 1, count.end(), [](int c) { return c % 2 == 1; }));
}

inline bool has_even_hc(const ColouredGraph& g) {
  for (const auto& c : hamilton_cycles(g))
    if (odd_classes(g, c) == 0) return true;
  return false;
}

/// Is u-v-x-y-u a four-cycle with exactly two odd colours?
inline bool is_switch(const ColouredGraph& g, Vertex u, Vertex v, Vertex x, Vertex y) {
  std::array<Colour, 4> cs{g.colour(u, v), g.colour(v, x), g.colour(x, y), g.colour(y, u)};
  for (Colour c : cs)
    if (c == 0) return false;
  std::sort(cs.begin(), cs.end());
  int odd = 0;
  for (std::size_t i = 0; i < 4;) {
    std::size_t j = i;
    while (j < 4 && cs[j] == cs[i]) ++j;
    odd += (j - i) % 2;
    i = j;
  }
  return odd == 2;
}

/// Any switch among all 4-subsets and their three cyclic orders.
inline bool any_switch(const ColouredGraph& g) {
  const int n = g.n();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d)
          if (is_switch(g, a, b, c, d) || is_switch(g, a, b, d, c) || is_switch(g, a, c, b, d)) return true;
  return false;
}

/// Least r such that some r-colouring of K_n (edge colours enumerated
/// naively, no symmetry reduction) has no even Hamilton cycle. Only for n <= 4
/// and small r.
inline int naive_odd_ramsey_complete(int n, int max_r) {
  if (n % 2 == 1) return 1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  const int m = static_cast<int>(edges.size());
  for (int r = 1; r <= max_r; ++r) {
    std::vector<int> digits(static_cast<std::size_t>(m), 0);
    for (;;) {
      std::vector<oddramsey::Edge> es;
      for (int i = 0; i < m; ++i) es.push_back({edges[i].first, edges[i].second, digits[i] + 1});
      ColouredGraph g(n, r, es);
      if (!has_even_hc(g)) return r;
      int i = 0;
      while (i < m && ++digits[i] == r) digits[i++] = 0;
      if (i == m) break;
    }
  }
  return -1;
}

}  // namespace ref
