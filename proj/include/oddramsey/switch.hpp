#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <vector>

#include "oddramsey/cycle.hpp"

namespace oddramsey {

/// A four-cycle u-v-x-y-u on which exactly two colours c1 < c2 occur an odd
/// number of times. Base matching {uv, xy}; flipped matching {uy, vx}.
struct Switch {
  Vertex u = 0, v = 0, x = 0, y = 0;
  Colour c1 = 0, c2 = 0;

  std::array<Vertex, 4> vertices() const { return {u, v, x, y}; }
  std::array<VertexPair, 4> edges() const { return {{{u, v}, {v, x}, {x, y}, {y, u}}}; }
  std::array<VertexPair, 2> base_matching() const { return {{{u, v}, {x, y}}}; }
  std::array<VertexPair, 2> flipped_matching() const { return {{{u, y}, {v, x}}}; }
  CyclePath four_cycle() const { return {{u, v, x, y}, true}; }

  /// The same four-cycle relabelled so that its flipped matching is the base.
  Switch flipped() const { return {u, y, x, v, c1, c2}; }

  friend bool operator==(const Switch&, const Switch&) = default;
};

/// Switch on the four-cycle u-v-x-y-u if its parity has exactly two bits set.
template <ColourView V>
std::optional<Switch> make_switch(const V& g, Vertex u, Vertex v, Vertex x, Vertex y) {
  if (u == v || u == x || u == y || v == x || v == y || x == y) return std::nullopt;
  Colour cs[4] = {g.colour(u, v), g.colour(v, x), g.colour(x, y), g.colour(y, u)};
  for (Colour c : cs)
    if (c == 0) return std::nullopt;
  // Odd colours of a four-element multiset, without allocating.
  Colour odd[4];
  int k = 0;
  for (int i = 0; i < 4; ++i) {
    int count = 0;
    bool first = true;
    for (int j = 0; j < 4; ++j) {
      if (cs[j] == cs[i]) {
        ++count;
        if (j < i) first = false;
      }
    }
    if (first && count % 2 == 1) odd[k++] = cs[i];
  }
  if (k != 2) return std::nullopt;
  return Switch{u, v, x, y, std::min(odd[0], odd[1]), std::max(odd[0], odd[1])};
}

template <ColourView V>
bool is_valid_switch(const V& g, const Switch& s) {
  auto made = make_switch(g, s.u, s.v, s.x, s.y);
  return made && made->c1 == s.c1 && made->c2 == s.c2;
}

/// Replaces the base matching of `s` on the Hamilton cycle `h` by its flipped
/// matching: u v P y x Q u  becomes  u y P' v x Q u.
///
/// Throws SwitchNotTraversedError if uv or xy is not an edge of h, or if h
/// meets them as u v P x y Q (flipping would split the cycle).
inline CyclePath flip_switch_in_cycle(const CyclePath& h, const Switch& s) {
  if (!h.closed) throw SwitchNotTraversedError("flip needs a closed cycle");
  const auto& seq = h.vertices;
  const std::size_t k = seq.size();
  if (k < 4) throw SwitchNotTraversedError("cycle too short to contain a switch");
  auto where = [&](Vertex w) -> std::size_t {
    for (std::size_t i = 0; i < k; ++i)
      if (seq[i] == w) return i;
    throw SwitchNotTraversedError("switch vertex " + std::to_string(w) + " not on the cycle");
  };
  const std::size_t iu = where(s.u);
  int dir;
  if (seq[(iu + 1) % k] == s.v) {
    dir = 1;
  } else if (seq[(iu + k - 1) % k] == s.v) {
    dir = -1;
  } else {
    throw SwitchNotTraversedError("base matching edge uv is not on the cycle");
  }
  // Walk from u towards v.
  std::vector<Vertex> walk(k);
  for (std::size_t i = 0; i < k; ++i)
    walk[i] = seq[(iu + (dir > 0 ? i : k - i)) % k];
  std::size_t py = 0, px = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (walk[i] == s.y) py = i;
    if (walk[i] == s.x) px = i;
  }
  if (px == py + 1) {
    CyclePath out;
    out.vertices.reserve(k);
    out.vertices.push_back(walk[0]);
    for (std::size_t i = py + 1; i-- > 1;) out.vertices.push_back(walk[i]);
    for (std::size_t i = px; i < k; ++i) out.vertices.push_back(walk[i]);
    return out;
  }
  if (py == px + 1)
    throw SwitchNotTraversedError("cycle meets the base matching as u v P x y; flipping would split it");
  throw SwitchNotTraversedError("base matching edge xy is not on the cycle");
}

/// Union-find style colour relabelling: merging c' into c recolours every
/// c'-edge with c. Roots are always the smallest colour of their class.
class ColourMap {
 public:
  ColourMap() = default;
  explicit ColourMap(int r) : parent_(static_cast<std::size_t>(r) + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int r() const { return static_cast<int>(parent_.size()) - 1; }

  Colour find(Colour c) const {
    while (parent_[c] != c) c = parent_[c];
    return c;
  }

  bool is_root(Colour c) const { return parent_[c] == c; }

  /// Merges the classes of a and b. Returns {kept, merged} roots with
  /// kept < merged, or nullopt if they were already one class.
  std::optional<std::pair<Colour, Colour>> merge(Colour a, Colour b) {
    Colour ra = find(a), rb = find(b);
    if (ra == rb) return std::nullopt;
    if (ra > rb) std::swap(ra, rb);
    parent_[rb] = ra;
    return std::pair{ra, rb};
  }

  int live() const {
    int count = 0;
    for (std::size_t c = 1; c < parent_.size(); ++c)
      if (parent_[c] == static_cast<Colour>(c)) ++count;
    return count;
  }

  std::vector<Colour> roots() const {
    std::vector<Colour> out;
    for (std::size_t c = 1; c < parent_.size(); ++c)
      if (parent_[c] == static_cast<Colour>(c)) out.push_back(static_cast<Colour>(c));
    return out;
  }

 private:
  std::vector<Colour> parent_;
};

/// A graph seen through a colour merge. Palette size is unchanged; merged
/// colours simply never occur.
template <ColourView G>
class MergedView {
 public:
  MergedView(const G& g, const ColourMap& map) : g_(&g), map_(&map) {}
  int n() const { return g_->n(); }
  int r() const { return g_->r(); }
  Colour colour(Vertex a, Vertex b) const {
    Colour c = g_->colour(a, b);
    return c == 0 ? 0 : map_->find(c);
  }

 private:
  const G* g_;
  const ColourMap* map_;
};

/// Ordered log of colour merges, each justified by a switch that is odd in
/// exactly the two merged classes at the time of merging.
struct MergeRegister {
  struct Entry {
    Colour kept = 0;
    Colour merged = 0;
    Switch sw;
  };
  std::vector<Entry> entries;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
};

}  // namespace oddramsey
