#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "oddramsey/agreement.hpp"
#include "oddramsey/constructions.hpp"
#include "oddramsey/cycle.hpp"
#include "oddramsey/switch.hpp"

namespace oddramsey {

struct SearchBudget {
  std::uint64_t max_cycles = std::numeric_limits<std::uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
  int parallel_width = 1;
};

enum class SearchStatus { Witness, None, BudgetExhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::None;
  std::optional<CyclePath> witness;
  std::uint64_t cycles_examined = 0;  // Hamilton cycles fully checked
};

namespace detail {

// Depth-first Hamilton cycle search over 64-bit adjacency masks (n <= 64).
// The start vertex is 0 and each undirected cycle is visited once, in the
// direction where the second vertex is smaller than the last. Pruning is by
// adjacency only: any partial parity can still be repaired by the suffix.
template <int W>
class EvenCycleSearch {
 public:
  using Parity = std::array<std::uint64_t, W>;

  EvenCycleSearch(const ColouredGraph& g, const SearchBudget& budget)
      : n_(g.n()), budget_(budget), start_(std::chrono::steady_clock::now()) {
    for (Vertex u = 0; u < n_; ++u) {
      std::uint64_t mask = 0;
      for (Vertex v = 0; v < n_; ++v)
        if (g.adjacent(u, v)) mask |= std::uint64_t{1} << v;
      adj_[u] = mask;
    }
    colour_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v)
        if (Colour c = g.colour(u, v)) colour_[u * n_ + v] = static_cast<std::uint16_t>(c - 1);
  }

  SearchResult run() {
    SearchResult result;
    if (n_ < 3) return result;
    for (Vertex v1 = 1; v1 < n_; ++v1) {
      if (!(adj_[0] >> v1 & 1)) continue;
      for (Vertex v2 = 1; v2 < n_; ++v2)
        if (v2 != v1 && (adj_[v1] >> v2 & 1)) tasks_.push_back({v1, v2});
    }
    const int width = std::max(1, budget_.parallel_width);
    if (width == 1 || tasks_.size() < 2) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int i = 0; i < width; ++i) pool.emplace_back([this] { worker(); });
    }
    result.cycles_examined = examined_.load();
    if (best_task_.load() != kNoTask) {
      result.status = SearchStatus::Witness;
      result.witness = witness_;
    } else if (exhausted_.load()) {
      result.status = SearchStatus::BudgetExhausted;
    }
    return result;
  }

 private:
  static constexpr std::size_t kNoTask = std::numeric_limits<std::size_t>::max();

  struct Task {
    Vertex v1, v2;
  };

  // Per-thread state.
  struct Walk {
    std::array<Vertex, 64> path{};
    std::uint64_t closers = 0;
    Vertex second = 0;
    std::size_t task = 0;
    std::uint64_t local_cycles = 0;
    std::uint64_t nodes = 0;
    bool abort = false;
  };

  void toggle(Parity& p, Vertex a, Vertex b) const {
    const unsigned bit = colour_[a * n_ + b];
    p[bit >> 6] ^= std::uint64_t{1} << (bit & 63);
  }

  static bool is_zero(const Parity& p) {
    for (auto w : p)
      if (w) return false;
    return true;
  }

  void worker() {
    Walk walk;
    for (;;) {
      const std::size_t t = next_task_.fetch_add(1);
      if (t >= tasks_.size() || exhausted_.load(std::memory_order_relaxed)) break;
      if (t > best_task_.load(std::memory_order_relaxed)) break;
      const Task& task = tasks_[t];
      walk.task = t;
      walk.second = task.v1;
      walk.abort = false;
      // Vertices that may close the cycle back to 0.
      walk.closers = adj_[0] & ~((std::uint64_t{2} << task.v1) - 1);
      walk.path[0] = 0;
      walk.path[1] = task.v1;
      walk.path[2] = task.v2;
      Parity p{};
      toggle(p, 0, task.v1);
      toggle(p, task.v1, task.v2);
      const std::uint64_t visited = 1u | (std::uint64_t{1} << task.v1) | (std::uint64_t{1} << task.v2);
      if (dfs(walk, task.v2, visited, 3, p)) publish(walk);
      flush(walk);
      if (walk.abort && exhausted_.load()) break;
    }
    flush(walk);
  }

  bool dfs(Walk& walk, Vertex cur, std::uint64_t visited, int depth, Parity& p) {
    if (depth == n_) {
      if (!(walk.closers >> cur & 1)) return false;
      toggle(p, cur, 0);
      const bool even = is_zero(p);
      toggle(p, cur, 0);
      if (++walk.local_cycles >= 1024) flush(walk);
      return even;
    }
    if (((++walk.nodes) & 0xFFFF) == 0 && should_stop(walk)) {
      walk.abort = true;
      return false;
    }
    if ((walk.closers & ~visited) == 0) return false;
    std::uint64_t next = adj_[cur] & ~visited;
    while (next) {
      const Vertex v = std::countr_zero(next);
      next &= next - 1;
      walk.path[depth] = v;
      toggle(p, cur, v);
      const bool found = dfs(walk, v, visited | (std::uint64_t{1} << v), depth + 1, p);
      toggle(p, cur, v);
      if (found) return true;
      if (walk.abort) return false;
    }
    return false;
  }

  bool should_stop(Walk& walk) {
    flush(walk);
    if (walk.task > best_task_.load(std::memory_order_relaxed)) return true;
    if (exhausted_.load(std::memory_order_relaxed)) return true;
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (elapsed > budget_.max_seconds) exhausted_.store(true);
    return exhausted_.load();
  }

  void flush(Walk& walk) {
    if (walk.local_cycles == 0) return;
    const auto total = examined_.fetch_add(walk.local_cycles) + walk.local_cycles;
    walk.local_cycles = 0;
    if (total >= budget_.max_cycles) exhausted_.store(true);
  }

  void publish(const Walk& walk) {
    std::lock_guard lock(mutex_);
    if (walk.task < best_task_.load()) {
      best_task_.store(walk.task);
      witness_ = CyclePath{std::vector<Vertex>(walk.path.begin(), walk.path.begin() + n_), true};
    }
  }

  int n_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::array<std::uint64_t, 64> adj_{};
  std::vector<std::uint16_t> colour_;
  std::vector<Task> tasks_;
  std::atomic<std::size_t> next_task_{0};
  std::atomic<std::size_t> best_task_{kNoTask};
  std::atomic<bool> exhausted_{false};
  std::atomic<std::uint64_t> examined_{0};
  std::mutex mutex_;
  CyclePath witness_;
};

}  // namespace detail

/// Exhaustive search for a Hamilton cycle in which every colour occurs an
/// even number of times. "None" is a certificate: enumeration finished.
/// With several workers the returned witness is still the one a single
/// worker would find first.
inline SearchResult find_even_coloured_hc(const ColouredGraph& g, const SearchBudget& budget = {}) {
  if (g.n() > 64) throw ParameterError("exhaustive Hamilton cycle search supports at most 64 vertices");
  if (budget.max_cycles == 0 || !(budget.max_seconds > 0) || budget.parallel_width < 1)
    throw ParameterError("search budget limits must be positive");
  SearchResult result;
  if (g.r() <= 64) {
    result = detail::EvenCycleSearch<1>(g, budget).run();
  } else if (g.r() <= 256) {
    result = detail::EvenCycleSearch<4>(g, budget).run();
  } else if (g.r() <= 1024) {
    result = detail::EvenCycleSearch<16>(g, budget).run();
  } else {
    throw ParameterError("exhaustive search supports at most 1024 colours");
  }
  if (result.witness && !(is_hamilton_cycle(g, *result.witness) && is_even_coloured(g, *result.witness)))
    throw InternalError("Hamilton cycle search produced an invalid witness");
  return result;
}

/// Calls `visit(cycle)` for every Hamilton cycle of g (each undirected cycle
/// once, starting at 0 with second vertex < last). Stops when visit returns
/// false. Sequential; meant for small graphs.
template <class F>
void for_each_hamilton_cycle(const ColouredGraph& g, F&& visit) {
  const int n = g.n();
  if (n < 3) return;
  std::vector<Vertex> path{0};
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  used[0] = true;
  bool stop = false;
  std::function<void()> rec = [&] {
    if (stop) return;
    const Vertex cur = path.back();
    if (static_cast<int>(path.size()) == n) {
      if (g.adjacent(cur, 0) && path[1] < cur) stop = !visit(CyclePath{path, true});
      return;
    }
    for (Vertex v = 1; v < n && !stop; ++v) {
      if (used[v] || !g.adjacent(cur, v)) continue;
      used[v] = true;
      path.push_back(v);
      rec();
      path.pop_back();
      used[v] = false;
    }
  };
  rec();
}

/// First switch in lexicographic (u, v, x, y) order with u the smallest
/// vertex of the four-cycle u-v-x-y-u and v < y, avoiding `forbidden`.
inline std::optional<Switch> find_switch(const ColouredGraph& g, const std::vector<bool>& forbidden = {}) {
  const int n = g.n();
  auto ok = [&](Vertex w) { return forbidden.empty() || !forbidden[w]; };
  for (Vertex u = 0; u < n; ++u) {
    if (!ok(u)) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (!ok(v) || !g.adjacent(u, v)) continue;
      for (Vertex x = u + 1; x < n; ++x) {
        if (x == v || !ok(x) || !g.adjacent(v, x)) continue;
        for (Vertex y = v + 1; y < n; ++y) {
          if (y == x || !ok(y) || !g.adjacent(x, y) || !g.adjacent(y, u)) continue;
          if (auto s = make_switch(g, u, v, x, y)) return s;
        }
      }
    }
  }
  return std::nullopt;
}

struct OddCycleOptions {
  /// For length 6, try the agree/disagree triple first; enumeration is the
  /// fallback either way.
  bool use_agree_shortcut = true;
};

/// An odd-coloured cycle (both colours odd) of length 4 or 6 in a
/// 2-coloured graph, avoiding `forbidden`, or nullopt if none exists.
inline std::optional<CyclePath> find_odd_cycle(const ColouredGraph& g, int length,
                                               const std::vector<bool>& forbidden = {},
                                               OddCycleOptions options = {}) {
  if (g.r() != 2) throw ParameterError("find_odd_cycle needs a 2-coloured graph");
  if (length != 4 && length != 6) throw ParameterError("find_odd_cycle supports lengths 4 and 6");
  if (length == 4) {
    if (auto s = find_switch(g, forbidden)) return s->four_cycle();
    return std::nullopt;
  }
  const int n = g.n();
  auto ok = [&](Vertex w) { return forbidden.empty() || !forbidden[w]; };
  auto odd = [&](const CyclePath& c) {
    int twos = 0;
    for (auto [a, b] : c.edges()) twos += g.colour(a, b) == 2;
    return twos % 2 == 1;
  };
  if (options.use_agree_shortcut) {
    auto report = classify_agreement(g, forbidden);
    if (!report.odd_c4 && report.odd_c6 && odd(*report.odd_c6)) return report.odd_c6;
  }
  // Direct enumeration: smallest vertex first, second < last.
  std::array<Vertex, 6> path{};
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::optional<CyclePath> found;
  std::function<void(int)> rec = [&](int depth) {
    if (found) return;
    const Vertex cur = path[depth - 1];
    if (depth == 6) {
      if (path[1] < cur && g.adjacent(cur, path[0])) {
        CyclePath c{{path.begin(), path.end()}, true};
        if (odd(c)) found = c;
      }
      return;
    }
    for (Vertex v = path[0] + 1; v < n && !found; ++v) {
      if (used[v] || !ok(v) || !g.adjacent(cur, v)) continue;
      used[v] = true;
      path[depth] = v;
      rec(depth + 1);
      used[v] = false;
    }
  };
  for (Vertex a = 0; a < n && !found; ++a) {
    if (!ok(a)) continue;
    path[0] = a;
    used[a] = true;
    rec(1);
    used[a] = false;
  }
  return found;
}

struct ExactBudget {
  std::uint64_t max_nodes = 2'000'000'000ull;
  double max_seconds = 600;
};

/// r_odd of a host graph as a bracket [lower, upper]; exact when equal.
struct OddRamseyResult {
  int lower = 1;
  int upper = 1;
  std::uint64_t nodes = 0;
  bool exact() const { return lower == upper; }
};

/// Least r such that some r-colouring of the host (its own colours are
/// ignored) leaves every Hamilton cycle with an odd colour class.
///
/// Colourings are enumerated edge by edge as restricted-growth strings (one
/// representative per relabelling of colour classes); a branch is cut as
/// soon as some Hamilton cycle whose edges are all coloured is even.
inline OddRamseyResult exact_odd_ramsey(const ColouredGraph& host, const ExactBudget& budget = {}) {
  const int n = host.n();
  if (n > 10) throw ParameterError("exact_odd_ramsey supports hosts with at most 10 vertices");
  OddRamseyResult result;
  if (n % 2 == 1 || n < 3) return result;

  std::vector<VertexPair> edges;
  std::vector<int> edge_id(static_cast<std::size_t>(n) * n, -1);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (host.adjacent(u, v)) {
        edge_id[u * n + v] = edge_id[v * n + u] = static_cast<int>(edges.size());
        edges.emplace_back(u, v);
      }
  const int m = static_cast<int>(edges.size());
  std::vector<std::vector<std::vector<int>>> by_last(static_cast<std::size_t>(m));
  bool any = false;
  for_each_hamilton_cycle(host, [&](const CyclePath& c) {
    std::vector<int> ids;
    for (auto [a, b] : c.edges()) ids.push_back(edge_id[a * n + b]);
    std::sort(ids.begin(), ids.end());
    by_last[ids.back()].push_back(std::move(ids));
    any = true;
    return true;
  });
  if (!any) return result;

  // Trivial upper bound: distinct colours on every edge. For complete hosts
  // the field construction is tighter; it is only trusted once the oracle
  // has confirmed it.
  int upper = m;
  if (host.is_complete() && n >= 4) {
    auto construction = build_general_n(n);
    if (find_even_coloured_hc(construction).status == SearchStatus::None) upper = std::min(upper, construction.r());
  }
  result.upper = upper;

  const auto start = std::chrono::steady_clock::now();
  std::vector<int> colour(static_cast<std::size_t>(m), 0);
  bool exhausted = false;
  std::function<bool(int, int, int)> assign = [&](int k, int used, int r) -> bool {
    if (k == m) return true;
    for (int c = 0; c <= std::min(used, r - 1); ++c) {
      if (++result.nodes > budget.max_nodes) {
        exhausted = true;
        return false;
      }
      if ((result.nodes & 0xFFFF) == 0 &&
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > budget.max_seconds) {
        exhausted = true;
        return false;
      }
      colour[k] = c;
      bool alive = true;
      for (const auto& hc : by_last[k]) {
        std::uint64_t parity = 0;
        for (int e : hc) parity ^= std::uint64_t{1} << colour[e];
        if (parity == 0) {
          alive = false;
          break;
        }
      }
      if (alive && assign(k + 1, std::max(used, c + 1), r)) return true;
      if (exhausted) return false;
    }
    return false;
  };
  for (int r = 2; r < upper; ++r) {
    if (assign(0, 0, r)) {
      result.lower = result.upper = r;
      return result;
    }
    if (exhausted) {
      result.lower = r;
      return result;
    }
  }
  result.lower = upper;
  return result;
}

inline OddRamseyResult exact_odd_ramsey(int n, const ExactBudget& budget = {}) {
  if (n < 1) throw ParameterError("n must be positive");
  if (n > 10) throw ParameterError("exact_odd_ramsey supports n <= 10");
  return exact_odd_ramsey(ColouredGraph::complete(n, 1, [](Vertex, Vertex) { return 1; }), budget);
}

}  // namespace oddramsey
