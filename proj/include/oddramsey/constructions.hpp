#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "oddramsey/graph.hpp"
#include "oddramsey/random.hpp"

namespace oddramsey {

/// A vertex of the field construction: a vector of F_2^t (bits of `vec`)
/// paired with an index in 1..m.
struct FieldPoint {
  std::uint32_t vec = 0;
  int index = 1;
  friend bool operator==(const FieldPoint&, const FieldPoint&) = default;
};

/// Fixed bijection and colour labels for the construction on F_2^t x [m].
///
/// Vertex ids are index-major: id = (index - 1) * 2^t + vec, so the special
/// vertex (0, m) is id (m - 1) * 2^t and deleting the largest ids never
/// removes it. Colours: the vector w is colour w + 1 (vectors in increasing
/// integer order), then the index x in 2..m is colour 2^t + x - 1.
class FieldLayout {
 public:
  FieldLayout(int m, int t) : m_(m), t_(t) {
    if (m < 1) throw ParameterError("m must be at least 1");
    if (t < 0 || t > 24) throw ParameterError("t must lie in 0..24");
  }

  int m() const { return m_; }
  int t() const { return t_; }
  int block() const { return 1 << t_; }
  long long order() const { return static_cast<long long>(m_) << t_; }
  int palette() const { return block() + m_ - 1; }

  Vertex id(FieldPoint p) const { return (p.index - 1) * block() + static_cast<Vertex>(p.vec); }
  FieldPoint point(Vertex id) const {
    return {static_cast<std::uint32_t>(id % block()), id / block() + 1};
  }
  Vertex special() const { return id({0, m_}); }

  Colour vector_colour(std::uint32_t w) const { return static_cast<Colour>(w) + 1; }
  Colour index_colour(int x) const { return x == 1 ? vector_colour(0) : block() + x - 1; }

  /// Colour of the edge {a, b} in the complete construction.
  Colour colour(Vertex a, Vertex b) const {
    const Vertex s = special();
    if (a == s || b == s) return index_colour(point(a == s ? b : a).index);
    return vector_colour(point(a).vec ^ point(b).vec);
  }

 private:
  int m_, t_;
};

/// Complete colouring of K_{m 2^t} with 2^t + m - 1 colours in which every
/// Hamilton cycle has an odd colour class.
inline ColouredGraph build_field_colouring(int m, int t) {
  FieldLayout layout(m, t);
  if (layout.order() > vertex_limit())
    throw ParameterError("m * 2^t = " + std::to_string(layout.order()) + " exceeds the vertex limit " +
                         std::to_string(vertex_limit()));
  const int n = static_cast<int>(layout.order());
  return ColouredGraph::complete(n, layout.palette(), [&](Vertex a, Vertex b) { return layout.colour(a, b); });
}

struct FieldParameters {
  int t = 0;
  int m = 1;
};

/// t is the integer closest to log2(n)/2, ties going to the smaller t;
/// m = ceil(n / 2^t).
inline FieldParameters general_parameters(int n) {
  if (n < 1) throw ParameterError("n must be positive");
  const int log2n = std::bit_width(static_cast<unsigned>(n)) - 1;
  int t = log2n / 2;
  // log2(n)/2 is closer to t+1 than to t exactly when n > 2^(2t+1).
  if (static_cast<long long>(n) > (1ll << (2 * t + 1))) ++t;
  const int block = 1 << t;
  return {t, (n + block - 1) / block};
}

/// The field colouring induced on the first n vertex ids (which always
/// include the special vertex). n must be even and at least 4.
inline ColouredGraph build_general_n(int n) {
  if (n < 4 || n % 2 != 0) throw ParameterError("build_general_n needs an even n >= 4, got " + std::to_string(n));
  if (n > vertex_limit()) throw ParameterError("n exceeds the vertex limit");
  auto [t, m] = general_parameters(n);
  FieldLayout layout(m, t);
  return ColouredGraph::complete(n, layout.palette(), [&](Vertex a, Vertex b) { return layout.colour(a, b); });
}

/// Cliques A, B of order n/2 - k and hubs C = {c_1..c_2k} joined to every
/// vertex. Edges c_i-B get colour i, everything else colour 1.
/// Vertex ids: A = [0, a), B = [a, 2a), c_i = 2a + i - 1, with a = n/2 - k.
inline ColouredGraph build_three_block(int n, int k) {
  if (n < 4 || n % 2 != 0) throw ParameterError("build_three_block needs an even n >= 4");
  if (k < 1 || k > n / 2) throw ParameterError("k must lie in 1..n/2");
  const int a = n / 2 - k;
  if (a < 1) throw ParameterError("n/2 - k must be at least 1 (blocks A and B would be empty)");
  if (n > vertex_limit()) throw ParameterError("n exceeds the vertex limit");
  auto block_of = [a](Vertex v) { return v < a ? 0 : (v < 2 * a ? 1 : 2); };
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      int bu = block_of(u), bv = block_of(v);
      if (bu + bv == 1) continue;  // no A-B edges
      Colour c = 1;
      if (bu == 1 && bv == 2) c = v - 2 * a + 1;
      edges.push_back({u, v, c});
    }
  return ColouredGraph(n, 2 * k, std::move(edges));
}

namespace detail {
inline int ceil_scaled(double c, int x) { return static_cast<int>(std::ceil(c * x - 1e-9)); }
}  // namespace detail

/// The vector set S of the sparse construction: 0 plus the first
/// ceil(c 2^t) - 1 nonzero vectors of a seeded shuffle, returned ascending.
inline std::vector<std::uint32_t> sparse_cayley_set(int t, double c, std::uint64_t seed) {
  const int block = 1 << t;
  const int size = std::clamp(detail::ceil_scaled(c, block), 1, block);
  std::vector<std::uint32_t> rest;
  for (std::uint32_t w = 1; w < static_cast<std::uint32_t>(block); ++w) rest.push_back(w);
  CounterRng rng(seed, 3);
  rng.shuffle(rest);
  std::vector<std::uint32_t> s{0};
  s.insert(s.end(), rest.begin(), rest.begin() + (size - 1));
  std::sort(s.begin(), s.end());
  return s;
}

/// Sparse subgraph of the field construction with minimum degree about c n.
/// The special vertex (0, m) keeps its edges to indices <= ceil(c m); other
/// pairs are adjacent iff their vectors sum into S. Colours are those of the
/// field colouring restricted to S and 2..ceil(c m), relabelled in the same
/// order (S ascending, then indices) onto 1..|S| + ceil(c m) - 1.
inline ColouredGraph build_sparse_cayley(int n, double c, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw ParameterError("build_sparse_cayley needs an even n >= 4");
  if (!(c >= 0.5 && c <= 1.0)) throw ParameterError("density c must lie in [1/2, 1]");
  if (n > vertex_limit()) throw ParameterError("n exceeds the vertex limit");
  auto [t, m] = general_parameters(n);
  FieldLayout layout(m, t);
  const int index_cap = std::clamp(detail::ceil_scaled(c, m), 1, m);
  const auto set = sparse_cayley_set(t, c, seed);
  std::vector<bool> in_set(static_cast<std::size_t>(layout.block()), false);
  for (auto w : set) in_set[w] = true;

  // Relabel: original field colour -> compact colour.
  std::vector<Colour> relabel(static_cast<std::size_t>(layout.palette()) + 1, 0);
  Colour next = 1;
  for (auto w : set) relabel[layout.vector_colour(w)] = next++;
  for (int x = 2; x <= index_cap; ++x) relabel[layout.index_colour(x)] = next++;
  const int palette = next - 1;

  const Vertex special = layout.special();
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      bool present;
      if (a == special || b == special) {
        present = layout.point(a == special ? b : a).index <= index_cap;
      } else {
        present = in_set[layout.point(a).vec ^ layout.point(b).vec];
      }
      if (present) edges.push_back({a, b, relabel[layout.colour(a, b)]});
    }
  const bool complete = edges.size() == static_cast<std::size_t>(n) * (n - 1) / 2;
  return ColouredGraph(n, palette, std::move(edges), complete);
}

}  // namespace oddramsey
