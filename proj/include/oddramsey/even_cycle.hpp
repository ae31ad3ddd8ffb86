#pragma once

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <vector>

#include "oddramsey/cycle.hpp"

namespace oddramsey {

namespace detail {

/// Local adjacency bitsets for one colour class restricted to a vertex list.
struct ColourClass {
  int k = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;
  std::vector<int> degree;

  bool has(int a, int b) const { return bits[a * words + b / 64] >> (b % 64) & 1u; }
  void drop(int a, int b) {
    bits[a * words + b / 64] &= ~(std::uint64_t{1} << (b % 64));
    --degree[a];
  }
};

/// Rotation-extension walk from `start` inside `alive`; returns the final
/// maximal path (local indices).
inline std::vector<int> long_path(const ColourClass& h, const std::vector<bool>& alive, int start) {
  std::vector<int> path{start};
  std::vector<int> pos(static_cast<std::size_t>(h.k), -1);
  pos[start] = 0;
  auto free_neighbour = [&](int v) {
    for (int w = 0; w < h.k; ++w)
      if (alive[w] && pos[w] < 0 && h.has(v, w)) return w;
    return -1;
  };
  auto reindex = [&](std::size_t from) {
    for (std::size_t i = from; i < path.size(); ++i) pos[path[i]] = static_cast<int>(i);
  };
  int rotations = 0;
  bool flipped_once = false;
  const int rotation_cap = 4 * h.k;
  for (;;) {
    int end = path.back();
    int w = free_neighbour(end);
    if (w >= 0) {
      pos[w] = static_cast<int>(path.size());
      path.push_back(w);
      continue;
    }
    // Pósa rotation: end ~ path[i] makes path[i+1] a new endpoint.
    bool rotated = false;
    if (rotations < rotation_cap) {
      const int len = static_cast<int>(path.size());
      for (int i = 0; i + 2 < len && !rotated; ++i) {
        if (!h.has(end, path[i])) continue;
        if (free_neighbour(path[i + 1]) < 0) continue;
        std::reverse(path.begin() + i + 1, path.end());
        reindex(static_cast<std::size_t>(i + 1));
        ++rotations;
        rotated = true;
      }
    }
    if (rotated) continue;
    if (!flipped_once) {
      flipped_once = true;
      std::reverse(path.begin(), path.end());
      reindex(0);
      continue;
    }
    return path;
  }
}

struct Candidate {
  int length = 0;
  std::vector<int> cycle;
};

/// Even cycles closed by chords at either end of a maximal path; keeps the
/// longest even one with length <= cap.
inline void close_path(const ColourClass& h, const std::vector<int>& path, int cap, Candidate& best) {
  const int len = static_cast<int>(path.size());
  for (int side = 0; side < 2; ++side) {
    std::vector<int> p = path;
    if (side == 1) std::reverse(p.begin(), p.end());
    const int end = p[len - 1];
    std::vector<int> chords;  // positions i <= len-2 with p[i] ~ end
    for (int i = 0; i + 1 < len; ++i)
      if (h.has(end, p[i])) chords.push_back(i);
    auto consider = [&](int length, int i, int j, bool through_end_segment) {
      if (length < 4 || length % 2 != 0 || length > cap || length <= best.length) return;
      Candidate c;
      c.length = length;
      if (through_end_segment) {
        for (int q = i; q < len; ++q) c.cycle.push_back(p[q]);
      } else {
        c.cycle.push_back(end);
        for (int q = i; q <= j; ++q) c.cycle.push_back(p[q]);
      }
      best = std::move(c);
    };
    for (int i : chords) consider(len - i, i, len - 1, true);
    for (std::size_t a = 0; a < chords.size(); ++a)
      for (std::size_t b = a + 1; b < chords.size(); ++b) {
        int i = chords[a], j = chords[b];
        if (j > len - 2) continue;
        consider(j - i + 2, i, j, false);
      }
  }
}

}  // namespace detail

/// A monochromatic cycle of even length in [min_len, max_len] inside
/// `allowed`, taken from a densest colour class. The cycle is the longest
/// the rotation-extension search finds, not necessarily the longest that
/// exists.
///
/// Throws ThresholdError when the densest class has average degree d < 3 or
/// d rounded up to even is below min_len (the regime where a long even cycle
/// is guaranteed), and SearchFailure when the search comes up short anyway.
template <ColourView V>
CyclePath find_long_even_mono_cycle(const V& g, const std::vector<Vertex>& allowed, int min_len,
                                    int max_len = INT_MAX) {
  if (min_len < 4) min_len = 4;
  if (max_len < min_len) throw ParameterError("max_len is below min_len");
  const int k = static_cast<int>(allowed.size());
  if (k < 4) throw ThresholdError("too few vertices for an even cycle");

  // Densest colour class.
  std::vector<long long> count(static_cast<std::size_t>(g.r()) + 1, 0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (Colour c = g.colour(allowed[i], allowed[j])) ++count[c];
  Colour colour = 1;
  for (Colour c = 2; c <= g.r(); ++c)
    if (count[c] > count[colour]) colour = c;
  const double d = 2.0 * static_cast<double>(count[colour]) / k;
  int guaranteed = static_cast<int>(std::ceil(d - 1e-9));
  if (guaranteed % 2) ++guaranteed;
  if (d < 3 || guaranteed < min_len)
    throw ThresholdError("densest colour class has average degree " + std::to_string(d) +
                         ", too small to guarantee an even cycle of length " + std::to_string(min_len));

  detail::ColourClass h;
  h.k = k;
  h.words = (static_cast<std::size_t>(k) + 63) / 64;
  h.bits.assign(static_cast<std::size_t>(k) * h.words, 0);
  h.degree.assign(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && g.colour(allowed[i], allowed[j]) == colour) {
        h.bits[i * h.words + j / 64] |= std::uint64_t{1} << (j % 64);
        ++h.degree[i];
      }

  // Peel to a subgraph of minimum degree > d/2.
  std::vector<bool> alive(static_cast<std::size_t>(k), true);
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < k; ++v) {
      if (!alive[v] || h.degree[v] > d / 2) continue;
      alive[v] = false;
      changed = true;
      for (int w = 0; w < k; ++w)
        if (alive[w] && h.has(w, v)) h.drop(w, v);
    }
  }
  for (int v = 0; v < k; ++v)
    if (!alive[v])
      for (int w = 0; w < k; ++w)
        if (h.has(v, w)) h.bits[v * h.words + w / 64] &= ~(std::uint64_t{1} << (w % 64));

  detail::Candidate best;
  int starts = 0;
  for (int s = 0; s < k && starts < 8; ++s) {
    if (!alive[s]) continue;
    ++starts;
    auto path = detail::long_path(h, alive, s);
    detail::close_path(h, path, max_len, best);
    if (best.length == max_len) break;
  }
  if (best.length < min_len)
    throw SearchFailure("even monochromatic cycle search reached length " + std::to_string(best.length) +
                        " < " + std::to_string(min_len));
  CyclePath out;
  for (int v : best.cycle) out.vertices.push_back(allowed[v]);
  return out;
}

}  // namespace oddramsey
