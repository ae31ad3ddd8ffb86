#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "oddramsey/graph.hpp"

namespace oddramsey {

/// Counter-based generator: the i-th output is splitmix64(seed + i * golden).
/// Satisfies UniformRandomBitGenerator; outputs are platform independent.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed = 0, std::uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream + 0x9E3779B97F4A7C15ull))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix(key_ + (counter_++) * 0x9E3779B97F4A7C15ull); }

  /// Uniform integer in [0, bound), by rejection so results do not depend on
  /// the standard library's distribution implementation.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do x = (*this)();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Uniform r-colouring of K_n.
inline ColouredGraph random_complete_colouring(int n, int r, std::uint64_t seed) {
  CounterRng rng(seed, 1);
  return ColouredGraph::complete(n, r, [&](Vertex, Vertex) {
    return static_cast<Colour>(rng.below(static_cast<std::uint64_t>(r)) + 1);
  });
}

/// G(n, p) with uniform r-colouring, resampled until the minimum degree is
/// at least `min_degree`. Throws after `max_attempts` rejections.
inline ColouredGraph random_dense_colouring(int n, int r, int min_degree, double p, std::uint64_t seed,
                                            int max_attempts = 10000) {
  CounterRng rng(seed, 2);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.unit() < p)
          edges.push_back({u, v, static_cast<Colour>(rng.below(static_cast<std::uint64_t>(r)) + 1)});
    ColouredGraph g(n, r, std::move(edges));
    if (g.min_degree() >= min_degree) return g;
  }
  throw SearchFailure("no host with the requested minimum degree after rejection sampling");
}

}  // namespace oddramsey
