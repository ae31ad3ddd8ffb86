#pragma once

#include <optional>
#include <vector>

#include "oddramsey/cycle.hpp"

namespace oddramsey {

/// How the common neighbours of a vertex pair {x, y} see it in a
/// 2-colouring: all send equal colours to x and y (Agree), all send opposite
/// colours (Disagree), or both kinds occur (Mixed, which closes an
/// odd-coloured four-cycle). Vacuous when there is no common neighbour.
enum class Relation { Agree, Disagree, Mixed, Vacuous };

struct PairRelation {
  Relation kind = Relation::Vacuous;
  Vertex same_witness = -1;      // smallest common neighbour with equal colours
  Vertex opposite_witness = -1;  // smallest common neighbour with opposite colours
};

class AgreeMatrix {
 public:
  AgreeMatrix() = default;
  explicit AgreeMatrix(int n) : n_(n), rel_(static_cast<std::size_t>(n) * n) {}
  int n() const { return n_; }
  const PairRelation& at(Vertex x, Vertex y) const { return rel_[static_cast<std::size_t>(x) * n_ + y]; }
  PairRelation& at(Vertex x, Vertex y) { return rel_[static_cast<std::size_t>(x) * n_ + y]; }

 private:
  int n_ = 0;
  std::vector<PairRelation> rel_;
};

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline std::size_t lowest_bit(const Bits& b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(b[i]));
  return static_cast<std::size_t>(-1);
}

/// Lowest set bit of a & b & mask not in `exclude`, or -1.
inline Vertex lowest_common(const Bits& a, const Bits& b, const Bits& mask, std::initializer_list<Vertex> exclude) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t w = a[i] & b[i] & mask[i];
    for (Vertex e : exclude)
      if (e >= 0 && static_cast<std::size_t>(e) / 64 == i) w &= ~(std::uint64_t{1} << (e % 64));
    if (w) return static_cast<Vertex>(i * 64 + std::countr_zero(w));
  }
  return -1;
}

}  // namespace detail

/// Agree/disagree structure of a 2-coloured graph restricted to the vertices
/// not in `forbidden`, with the first odd-coloured C4 or C6 it exposes.
struct AgreementReport {
  AgreeMatrix matrix;
  std::optional<CyclePath> odd_c4;  // x u y v from the first Mixed pair
  std::optional<CyclePath> odd_c6;  // x u y v z w from the first inconsistent triple
  /// True when no odd C4 exists and the Agree relation is an equivalence
  /// with at most two classes, consistent with every Disagree pair.
  bool consistent = false;
  std::vector<int> class_of;  // 0/1 labels relative to the first allowed vertex; -1 if forbidden
};

inline AgreementReport classify_agreement(const ColouredGraph& g, const std::vector<bool>& forbidden = {}) {
  if (g.r() != 2) throw ParameterError("the agreement relation needs a 2-coloured graph");
  const int n = g.n();
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  auto is_forbidden = [&](Vertex v) { return !forbidden.empty() && forbidden[v]; };
  detail::Bits allowed(words, 0);
  for (Vertex v = 0; v < n; ++v)
    if (!is_forbidden(v)) allowed[v / 64] |= std::uint64_t{1} << (v % 64);
  std::vector<detail::Bits> by_colour[2];
  by_colour[0].assign(n, detail::Bits(words, 0));
  by_colour[1].assign(n, detail::Bits(words, 0));
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      if (Colour c = g.colour(x, y); c == 1 || c == 2) by_colour[c - 1][x][y / 64] |= std::uint64_t{1} << (y % 64);

  AgreementReport report;
  report.matrix = AgreeMatrix(n);
  for (Vertex x = 0; x < n; ++x) {
    if (is_forbidden(x)) continue;
    for (Vertex y = x + 1; y < n; ++y) {
      if (is_forbidden(y)) continue;
      auto& rx = by_colour[0][x];
      auto& bx = by_colour[1][x];
      auto& ry = by_colour[0][y];
      auto& by = by_colour[1][y];
      Vertex same_r = detail::lowest_common(rx, ry, allowed, {x, y});
      Vertex same_b = detail::lowest_common(bx, by, allowed, {x, y});
      Vertex opp_1 = detail::lowest_common(rx, by, allowed, {x, y});
      Vertex opp_2 = detail::lowest_common(bx, ry, allowed, {x, y});
      auto pick = [](Vertex a, Vertex b) { return a < 0 ? b : (b < 0 ? a : std::min(a, b)); };
      PairRelation rel;
      rel.same_witness = pick(same_r, same_b);
      rel.opposite_witness = pick(opp_1, opp_2);
      if (rel.same_witness >= 0 && rel.opposite_witness >= 0)
        rel.kind = Relation::Mixed;
      else if (rel.same_witness >= 0)
        rel.kind = Relation::Agree;
      else if (rel.opposite_witness >= 0)
        rel.kind = Relation::Disagree;
      report.matrix.at(x, y) = rel;
      report.matrix.at(y, x) = rel;
      if (rel.kind == Relation::Mixed && !report.odd_c4)
        report.odd_c4 = CyclePath{{x, rel.opposite_witness, y, rel.same_witness}, true};
    }
  }
  report.class_of.assign(static_cast<std::size_t>(n), -1);
  if (report.odd_c4) return report;

  Vertex root = -1;
  for (Vertex v = 0; v < n && root < 0; ++v)
    if (!is_forbidden(v)) root = v;
  if (root < 0) {
    report.consistent = true;
    return report;
  }
  auto agrees = [&](Vertex a, Vertex b) { return report.matrix.at(a, b).kind != Relation::Disagree; };
  report.class_of[root] = 0;
  for (Vertex v = 0; v < n; ++v)
    if (v != root && !is_forbidden(v)) report.class_of[v] = agrees(root, v) ? 0 : 1;

  // Any pair inconsistent with the labels gives a triple (x, y, z) with an
  // odd number of disagreeing pairs among xy, yz, zx.
  auto close_c6 = [&](Vertex x, Vertex y, Vertex z) -> std::optional<CyclePath> {
    auto nx = [&](Vertex a) {
      detail::Bits b(words);
      for (std::size_t i = 0; i < words; ++i) b[i] = by_colour[0][a][i] | by_colour[1][a][i];
      return b;
    };
    auto bx = nx(x), by = nx(y), bz = nx(z);
    Vertex u = detail::lowest_common(bx, by, allowed, {x, y, z});
    if (u < 0) return std::nullopt;
    Vertex v = detail::lowest_common(by, bz, allowed, {x, y, z, u});
    if (v < 0) return std::nullopt;
    Vertex w = detail::lowest_common(bx, bz, allowed, {x, y, z, u, v});
    if (w < 0) return std::nullopt;
    return CyclePath{{x, u, y, v, z, w}, true};
  };
  bool consistent = true;
  for (Vertex x = 0; x < n && !report.odd_c6; ++x) {
    if (is_forbidden(x)) continue;
    for (Vertex y = x + 1; y < n && !report.odd_c6; ++y) {
      if (is_forbidden(y)) continue;
      if (report.matrix.at(x, y).kind == Relation::Vacuous) continue;
      bool same_label = report.class_of[x] == report.class_of[y];
      if (same_label == agrees(x, y)) continue;
      consistent = false;
      if (x == root || y == root) continue;  // cannot happen: labels come from root
      report.odd_c6 = close_c6(x, root, y);
    }
  }
  report.consistent = consistent;
  return report;
}

}  // namespace oddramsey
