#pragma once

#include <algorithm>
#include <optional>
#include <variant>
#include <vector>

#include "oddramsey/switch.hpp"

namespace oddramsey {

/// Dense snapshot of any colour view; cheap lookups for hot loops.
class ColourTable {
 public:
  ColourTable() = default;
  template <ColourView V>
  explicit ColourTable(const V& view) : n_(view.n()), r_(view.r()), cells_(static_cast<std::size_t>(n_) * n_, 0) {
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b = a + 1; b < n_; ++b) {
        auto c = static_cast<std::uint16_t>(view.colour(a, b));
        cells_[a * n_ + b] = cells_[b * n_ + a] = c;
      }
  }
  int n() const { return n_; }
  int r() const { return r_; }
  Colour colour(Vertex a, Vertex b) const { return cells_[static_cast<std::size_t>(a) * n_ + b]; }

 private:
  int n_ = 0, r_ = 0;
  std::vector<std::uint16_t> cells_;
};

/// Partition of a switch-free complete colouring minus v0: parts[c-1] holds
/// the vertices w with colour(v0, w) = c.
struct LeftoverStructure {
  Vertex v0 = -1;
  std::vector<std::vector<Vertex>> parts;
  Colour internal_colour = 0;  // 0 when every part has fewer than two vertices
  std::vector<std::vector<Colour>> cross_colours;  // [i][j] for parts i != j, both nonempty; else 0

  std::size_t part_count() const { return parts.size(); }
};

using StructureOrSwitch = std::variant<LeftoverStructure, Switch>;

/// Either the partition of `vertices` - v0 into monochromatic cliques of one
/// colour with monochromatic bipartite graphs between them, or a switch
/// certifying that no such partition exists. The induced graph on `vertices`
/// must be complete. O(|vertices|^2).
template <ColourView V>
StructureOrSwitch structure_or_switch(const V& g, const std::vector<Vertex>& vertices, Vertex v0) {
  if (std::find(vertices.begin(), vertices.end(), v0) == vertices.end())
    throw ParameterError("v0 is not among the given vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.colour(vertices[i], vertices[j]) == 0)
        throw InvalidGraphError("structure_or_switch needs a complete graph on the given vertices");

  const int r = g.r();
  LeftoverStructure st;
  st.v0 = v0;
  st.parts.assign(static_cast<std::size_t>(r), {});
  std::vector<int> part_of(static_cast<std::size_t>(g.n()), -1);
  for (Vertex w : vertices) {
    if (w == v0) continue;
    Colour c = g.colour(v0, w);
    st.parts[c - 1].push_back(w);
    part_of[w] = c - 1;
  }
  for (auto& p : st.parts) std::sort(p.begin(), p.end());

  auto certified = [&](Vertex a, Vertex b, Vertex c, Vertex d) -> Switch {
    auto s = make_switch(g, a, b, c, d);
    if (!s) throw InternalError("structure check produced a four-cycle that is not a switch");
    return *s;
  };

  // Every vertex must see every part (itself excluded) in a single colour.
  std::vector<Colour> seen(static_cast<std::size_t>(r), 0);
  for (std::size_t zi = 0; zi < vertices.size(); ++zi) {
    const Vertex z = vertices[zi];
    if (z == v0) continue;
    for (int j = 0; j < r; ++j) {
      Vertex first = -1;
      for (Vertex w : st.parts[j]) {
        if (w == z) continue;
        if (first < 0) {
          first = w;
          continue;
        }
        if (g.colour(z, w) != g.colour(z, first)) return certified(v0, first, z, w);
      }
    }
  }

  // Cliques of size >= 2 must share a colour.
  int ref = -1;
  for (int i = 0; i < r; ++i) {
    if (st.parts[i].size() < 2) continue;
    Colour c = g.colour(st.parts[i][0], st.parts[i][1]);
    if (ref < 0) {
      ref = i;
      st.internal_colour = c;
      continue;
    }
    if (c != st.internal_colour) {
      const auto& a = st.parts[ref];
      const auto& b = st.parts[i];
      return certified(a[0], b[0], b[1], a[1]);
    }
  }

  st.cross_colours.assign(static_cast<std::size_t>(r), std::vector<Colour>(static_cast<std::size_t>(r), 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j && !st.parts[i].empty() && !st.parts[j].empty())
        st.cross_colours[i][j] = g.colour(st.parts[i][0], st.parts[j][0]);
  return st;
}

/// Exhaustive check of every claim a LeftoverStructure makes. Returns an
/// empty string when valid, else a description of the first failure.
template <ColourView V>
std::string check_structure(const V& g, const std::vector<Vertex>& vertices, const LeftoverStructure& st) {
  std::vector<int> part_of(static_cast<std::size_t>(g.n()), -1);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < st.parts.size(); ++i)
    for (Vertex w : st.parts[i]) {
      if (part_of[w] >= 0) return "vertex " + std::to_string(w) + " in two parts";
      part_of[w] = static_cast<int>(i);
      ++covered;
      if (g.colour(st.v0, w) != static_cast<Colour>(i + 1)) return "part index disagrees with colour at v0";
    }
  for (Vertex w : vertices)
    if (w != st.v0 && part_of[w] < 0) return "vertex " + std::to_string(w) + " missing from the partition";
  if (covered + 1 != vertices.size()) return "partition does not match the vertex set";
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      Vertex a = vertices[i], b = vertices[j];
      if (a == st.v0 || b == st.v0) continue;
      int pa = part_of[a], pb = part_of[b];
      Colour c = g.colour(a, b);
      Colour want = pa == pb ? st.internal_colour : st.cross_colours[pa][pb];
      if (c != want)
        return "edge " + std::to_string(a) + "-" + std::to_string(b) + " has colour " + std::to_string(c) +
               ", expected " + std::to_string(want);
    }
  return {};
}

/// First switch inside `vertices` (induced graph complete), scanning
/// diagonals {u, x} in order and pairing middle vertices v, y whose
/// cherries u-v-x and u-y-x differ in parity by exactly two colours.
/// O(k^3) for k vertices.
template <ColourView V>
std::optional<Switch> find_switch_among(const V& g, const std::vector<Vertex>& vertices) {
  const std::size_t k = vertices.size();
  struct Kind {
    Colour a, b;  // 0,0 for an even cherry
    Vertex first;
  };
  std::vector<Kind> kinds;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex u = vertices[i];
    for (std::size_t l = i + 1; l < k; ++l) {
      const Vertex x = vertices[l];
      kinds.clear();
      for (std::size_t m = 0; m < k; ++m) {
        const Vertex y = vertices[m];
        if (y == u || y == x) continue;
        Colour c1 = g.colour(u, y), c2 = g.colour(y, x);
        if (c1 == 0 || c2 == 0) continue;
        Kind kind{0, 0, y};
        if (c1 != c2) kind = {std::min(c1, c2), std::max(c1, c2), y};
        bool known = false;
        for (const Kind& seen : kinds) {
          if (seen.a == kind.a && seen.b == kind.b) {
            known = true;
            break;
          }
          // Symmetric difference of {a,b} and {a',b'} (empty sets for even
          // cherries) must have exactly two elements.
          int common = 0, size1 = seen.a ? 2 : 0, size2 = kind.a ? 2 : 0;
          if (seen.a && kind.a) common = (seen.a == kind.a || seen.a == kind.b) + (seen.b == kind.a || seen.b == kind.b);
          if (size1 + size2 - 2 * common == 2) {
            if (auto s = make_switch(g, u, seen.first, x, y)) return s;
            throw InternalError("diagonal scan produced a four-cycle that is not a switch");
          }
        }
        if (!known) kinds.push_back(kind);
      }
    }
  }
  return std::nullopt;
}

/// Greedy maximal family of vertex-disjoint switches inside `vertices`,
/// stopping early once `limit` switches are found.
template <ColourView V>
std::vector<Switch> pack_switches(const V& g, std::vector<Vertex> vertices, std::size_t limit) {
  std::vector<Switch> out;
  while (out.size() < limit) {
    auto s = find_switch_among(g, vertices);
    if (!s) break;
    out.push_back(*s);
    auto used = s->vertices();
    std::erase_if(vertices, [&](Vertex w) { return std::find(used.begin(), used.end(), w) != used.end(); });
  }
  return out;
}

}  // namespace oddramsey
