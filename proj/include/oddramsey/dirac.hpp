#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "oddramsey/agreement.hpp"
#include "oddramsey/cycle.hpp"

namespace oddramsey {

namespace detail {

inline void require_distinct_outside(const ColouredGraph& g, Vertex a, Vertex b, const std::vector<Vertex>& avoid) {
  const int n = g.n();
  if (a < 0 || a >= n || b < 0 || b >= n) throw ParameterError("path endpoint out of range");
  if (a == b) throw ParameterError("path endpoints must differ");
  for (Vertex v : avoid) {
    if (v < 0 || v >= n) throw ParameterError("avoided vertex out of range");
    if (v == a || v == b) throw ParameterError("path endpoints must not be avoided");
  }
}

/// Removes gaps from `order` by crossing reversals. With `fixed_ends` the
/// first and last entries stay in place and the order is read as a path;
/// otherwise it is read cyclically. Succeeds whenever every non-adjacent
/// pair has degree sum >= k + 1 (paths) or >= k (cycles) in the induced graph.
inline bool close_gaps(const ColouredGraph& g, std::vector<Vertex>& order, bool fixed_ends) {
  const int k = static_cast<int>(order.size());
  const int pairs = fixed_ends ? k - 1 : k;
  auto at = [&](int i) { return order[(i % k + k) % k]; };
  for (int guard = 0; guard <= k; ++guard) {
    int gap = -1;
    for (int i = 0; i < pairs && gap < 0; ++i)
      if (!g.adjacent(at(i), at(i + 1))) gap = i;
    if (gap < 0) return true;
    const Vertex p = at(gap), q = at(gap + 1);
    bool fixed = false;
    if (fixed_ends) {
      for (int i = 0; i <= k - 2 && !fixed; ++i) {
        if (i == gap || !g.adjacent(p, order[i]) || !g.adjacent(q, order[i + 1])) continue;
        if (i > gap) std::reverse(order.begin() + gap + 1, order.begin() + i + 1);
        else std::reverse(order.begin() + i + 1, order.begin() + gap + 1);
        fixed = true;
      }
    } else {
      // Rotate so the gap sits at the end, then treat it like a path whose
      // reversals stay inside [0, k-1].
      std::rotate(order.begin(), order.begin() + (gap + 1) % k, order.end());
      const Vertex last = order[k - 1], first = order[0];
      for (int i = 0; i + 1 < k - 1 && !fixed; ++i) {
        if (!g.adjacent(last, order[i]) || !g.adjacent(first, order[i + 1])) continue;
        std::reverse(order.begin(), order.begin() + i + 1);
        fixed = true;
      }
    }
    if (!fixed) return false;
  }
  return false;
}

inline std::vector<Vertex> remaining_vertices(int n, Vertex a, Vertex b, const std::vector<Vertex>& avoid) {
  std::vector<bool> out(static_cast<std::size_t>(n), false);
  for (Vertex v : avoid) out[v] = true;
  out[a] = out[b] = true;
  std::vector<Vertex> mid;
  for (Vertex v = 0; v < n; ++v)
    if (!out[v]) mid.push_back(v);
  return mid;
}

}  // namespace detail

/// Path from a to b through exactly V(g) - avoid, for hosts with
/// minimum degree >= (n + t + 1)/2 where |avoid| <= t (t defaults to |avoid|).
inline CyclePath hamilton_path_avoiding(const ColouredGraph& g, Vertex a, Vertex b, const std::vector<Vertex>& avoid,
                                        std::optional<int> t = std::nullopt) {
  detail::require_distinct_outside(g, a, b, avoid);
  const int tt = t.value_or(static_cast<int>(avoid.size()));
  if (static_cast<int>(avoid.size()) > tt) throw ParameterError("more avoided vertices than t");
  if (2 * g.min_degree() < g.n() + tt + 1)
    throw DegreeConditionError("minimum degree " + std::to_string(g.min_degree()) + " below (n + t + 1)/2 with n = " +
                               std::to_string(g.n()) + ", t = " + std::to_string(tt));
  std::vector<Vertex> order{a};
  for (Vertex v : detail::remaining_vertices(g.n(), a, b, avoid)) order.push_back(v);
  order.push_back(b);
  if (!detail::close_gaps(g, order, true)) throw SearchFailure("crossing reversal left a gap in the Hamilton path");
  CyclePath path{std::move(order), false};
  check_cycle(g, path);
  return path;
}

/// The edge ab, or a cherry a-w-b with w outside `avoid` (smallest such w),
/// for hosts with minimum degree >= (n + t - 1)/2 where |avoid| <= t.
inline CyclePath short_path_avoiding(const ColouredGraph& g, Vertex a, Vertex b, const std::vector<Vertex>& avoid,
                                     std::optional<int> t = std::nullopt) {
  detail::require_distinct_outside(g, a, b, avoid);
  const int tt = t.value_or(static_cast<int>(avoid.size()));
  if (static_cast<int>(avoid.size()) > tt) throw ParameterError("more avoided vertices than t");
  if (2 * g.min_degree() < g.n() + tt - 1)
    throw DegreeConditionError("minimum degree " + std::to_string(g.min_degree()) + " below (n + t - 1)/2");
  if (g.adjacent(a, b)) return {{a, b}, false};
  for (Vertex w = 0; w < g.n(); ++w) {
    if (w == a || w == b || std::find(avoid.begin(), avoid.end(), w) != avoid.end()) continue;
    if (g.adjacent(a, w) && g.adjacent(w, b)) return {{a, w, b}, false};
  }
  throw SearchFailure("no short path despite the degree condition");
}

/// A Hamilton cycle of a graph with minimum degree >= n/2 (n >= 3).
inline CyclePath hamilton_cycle(const ColouredGraph& g) {
  const int n = g.n();
  if (n < 3) throw ParameterError("a Hamilton cycle needs at least 3 vertices");
  if (2 * g.min_degree() < n) throw DegreeConditionError("minimum degree below n/2");
  std::vector<Vertex> order;
  for (Vertex v = 0; v < n; ++v) order.push_back(v);
  if (!detail::close_gaps(g, order, false)) throw SearchFailure("crossing reversal left a gap in the Hamilton cycle");
  CyclePath c{std::move(order), true};
  check_cycle(g, c);
  return c;
}

/// The two Hamilton cycles through an odd-coloured 4- or 6-cycle whose edge
/// sets differ exactly in that cycle.
struct OddCycleEmbedding {
  CyclePath first;   // traverses the matching that starts with the edge c[0]c[1]
  CyclePath second;  // the complementary matching
  CyclePath even;    // whichever of the two is even-coloured
};

namespace detail {

inline bool two_coloured_odd(const ColouredGraph& g, const CyclePath& c) {
  int ones = 0;
  for (auto [a, b] : c.edges()) ones += g.colour(a, b) == 1;
  return ones % 2 == 1;
}

inline std::vector<Vertex> concat(std::initializer_list<std::vector<Vertex>> parts) {
  std::vector<Vertex> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

/// Interior vertices of a path, in order.
inline std::vector<Vertex> inner(const CyclePath& p) {
  if (p.size() <= 2) return {};
  return {p.vertices.begin() + 1, p.vertices.end() - 1};
}

inline std::vector<Vertex> reversed(std::vector<Vertex> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace detail

inline OddCycleEmbedding embed_odd_cycle(const ColouredGraph& g, const CyclePath& c) {
  if (g.r() != 2) throw ParameterError("odd-cycle embedding needs a 2-coloured graph");
  const int n = g.n();
  if (n % 2 != 0) throw ParameterError("odd-cycle embedding needs an even number of vertices");
  if (!c.closed || (c.size() != 4 && c.size() != 6)) throw ParameterError("expected a closed 4- or 6-cycle");
  check_cycle(g, c);
  if (!detail::two_coloured_odd(g, c)) throw ParameterError("the given cycle is not odd-coloured");
  const auto& cv = c.vertices;
  OddCycleEmbedding out;
  if (c.size() == 4) {
    if (2 * g.min_degree() < n + 4) throw DegreeConditionError("a 4-cycle embedding needs minimum degree >= n/2 + 2");
    const Vertex u = cv[0], v = cv[1], x = cv[2], y = cv[3];
    auto q = short_path_avoiding(g, v, y, {u, x});
    auto p = hamilton_path_avoiding(g, x, u, q.vertices);
    auto q_in = detail::inner(q), p_in = detail::inner(p);
    out.first = {detail::concat({{u, v}, q_in, {y, x}, p_in}), true};
    out.second = {detail::concat({{u, y}, detail::reversed(q_in), {v, x}, p_in}), true};
  } else {
    if (2 * g.min_degree() < n + 8) throw DegreeConditionError("a 6-cycle embedding needs minimum degree >= n/2 + 4");
    const Vertex u = cv[0], v = cv[1], w = cv[2], x = cv[3], y = cv[4], z = cv[5];
    auto q1 = short_path_avoiding(g, v, z, {u, w, x, y});
    std::vector<Vertex> avoid2{u, x};
    avoid2.insert(avoid2.end(), q1.vertices.begin(), q1.vertices.end());
    auto q2 = short_path_avoiding(g, y, w, avoid2);
    std::vector<Vertex> avoid3 = q1.vertices;
    avoid3.insert(avoid3.end(), q2.vertices.begin(), q2.vertices.end());
    auto p = hamilton_path_avoiding(g, x, u, avoid3);
    auto q1_in = detail::inner(q1), q2_in = detail::inner(q2), p_in = detail::inner(p);
    out.first = {detail::concat({{u, v}, q1_in, {z, y}, q2_in, {w, x}, p_in}), true};
    out.second = {detail::concat({{u, z}, detail::reversed(q1_in), {v, w}, detail::reversed(q2_in), {y, x}, p_in}),
                  true};
  }
  if (!is_hamilton_cycle(g, out.first) || !is_hamilton_cycle(g, out.second))
    throw InternalError("odd-cycle embedding produced a non-Hamilton cycle");
  const bool e1 = is_even_coloured(g, out.first), e2 = is_even_coloured(g, out.second);
  if (e1 == e2) throw InternalError("exactly one of the two embeddings should be even-coloured");
  out.even = e1 ? out.first : out.second;
  return out;
}

/// Even-coloured Hamilton cycle through an odd-coloured 4-cycle (minimum
/// degree >= n/2 + 2) or 6-cycle (minimum degree >= n/2 + 4); n even.
inline CyclePath even_hc_from_odd_cycle(const ColouredGraph& g, const CyclePath& c) {
  return embed_odd_cycle(g, c).even;
}

enum class DiracBranch { OddC4, OddC6, TwoClasses };

struct DiracResult {
  CyclePath cycle;
  DiracBranch branch = DiracBranch::TwoClasses;
  std::optional<CyclePath> odd_cycle;
};

/// Even-coloured Hamilton cycle of a 2-coloured graph with n even and
/// minimum degree >= n/2 + 4.
inline DiracResult even_hc_super_dirac_report(const ColouredGraph& g) {
  require_valid(g);
  if (g.r() != 2) throw ParameterError("needs a 2-coloured graph");
  const int n = g.n();
  if (n < 4 || n % 2 != 0) throw ParameterError("needs an even number of vertices, at least 4");
  if (2 * g.min_degree() < n + 8)
    throw DegreeConditionError("minimum degree " + std::to_string(g.min_degree()) + " below n/2 + 4 = " +
                               std::to_string(n / 2 + 4));
  DiracResult res;
  auto report = classify_agreement(g);
  if (report.odd_c4) {
    res.branch = DiracBranch::OddC4;
    res.odd_cycle = report.odd_c4;
    res.cycle = even_hc_from_odd_cycle(g, *report.odd_c4);
  } else if (!report.consistent) {
    if (!report.odd_c6) throw InternalError("inconsistent agreement classes without a 6-cycle witness");
    res.branch = DiracBranch::OddC6;
    res.odd_cycle = report.odd_c6;
    res.cycle = even_hc_from_odd_cycle(g, *report.odd_c6);
  } else {
    res.branch = DiracBranch::TwoClasses;
    res.cycle = hamilton_cycle(g);
    if (!is_even_coloured(g, res.cycle)) throw InternalError("two agreement classes but an odd Hamilton cycle");
  }
  if (!is_hamilton_cycle(g, res.cycle) || !is_even_coloured(g, res.cycle))
    throw InternalError("super-Dirac pipeline returned an invalid cycle");
  return res;
}

inline CyclePath even_hc_super_dirac(const ColouredGraph& g) { return even_hc_super_dirac_report(g).cycle; }

}  // namespace oddramsey
