#pragma once

#include <limits>
#include <random>
#include <vector>

#include "gbp/embedding.hpp"
#include "gbp/geometry.hpp"
#include "gbp/graph.hpp"
#include "gbp/setfamily.hpp"

namespace gbp {

using rng_t = std::mt19937_64;

// Unbiased draw from [0, bound). std::uniform_int_distribution is
// implementation-defined, so seeded runs would not be portable with it;
// mt19937_64's raw stream is pinned by the standard.
inline std::uint64_t uniform_u64(rng_t& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_u64: empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t reject_above = max - max % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < reject_above) return x % bound;
  }
}

inline long uniform_long(rng_t& rng, long lo, long hi) {  // inclusive bounds
  return lo + static_cast<long>(uniform_u64(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Uniform p/q with q in [1, max_den], p in [1, q]; always in (0, 1].
inline rational random_unit_rational(rng_t& rng, long max_den) {
  const long q = uniform_long(rng, 1, max_den);
  const long p = uniform_long(rng, 1, q);
  return make_rational(p, q);
}

inline box_dims random_box(rng_t& rng, int d, long max_den) {
  std::vector<rational> sides;
  sides.reserve(static_cast<std::size_t>(d));
  for (int l = 0; l < d; ++l) sides.push_back(random_unit_rational(rng, max_den));
  return box_dims(std::move(sides));
}

// Every edge present independently with probability 1/2.
inline graph random_graph(rng_t& rng, int n) {
  graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform_u64(rng, 2) == 1) g.add_edge(u, v);
  return g;
}

// Instance whose sides are multiples of 1/m (so the grid oracle applies).
inline packing_instance random_grid_instance(rng_t& rng, int max_boxes, int max_dim, long m) {
  const int d = static_cast<int>(uniform_long(rng, 1, max_dim));
  const int k = static_cast<int>(uniform_long(rng, 0, max_boxes));
  std::vector<box_dims> boxes;
  boxes.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    std::vector<rational> sides;
    sides.reserve(static_cast<std::size_t>(d));
    for (int l = 0; l < d; ++l) sides.push_back(make_rational(uniform_long(rng, 1, m), m));
    boxes.emplace_back(std::move(sides));
  }
  return packing_instance(d, std::move(boxes));
}

// Downward-closed (3,3)-bounded family without isolated elements: a
// perfect matching of pairs first (so every element is covered), then
// extra random pairs while keeping every element in at most two pairs
// (with singletons that caps the element multiplicity at 3). Closure adds
// the empty set and the singletons of covered elements.
inline set_family random_bounded_family(rng_t& rng, int universe) {
  if (universe < 2 || universe % 2 != 0)
    throw std::invalid_argument("random_bounded_family: universe must be even and >= 2");
  std::vector<int> shuffled(static_cast<std::size_t>(universe));
  for (int i = 0; i < universe; ++i) shuffled[static_cast<std::size_t>(i)] = i;
  for (int i = universe - 1; i > 0; --i)
    std::swap(shuffled[static_cast<std::size_t>(i)],
              shuffled[static_cast<std::size_t>(uniform_u64(rng, static_cast<std::uint64_t>(i) + 1))]);

  std::vector<std::vector<int>> pairs;
  std::vector<int> pair_load(static_cast<std::size_t>(universe), 0);
  auto add_pair = [&](int a, int b) {
    std::vector<int> p{a, b};
    std::sort(p.begin(), p.end());
    for (const auto& q : pairs)
      if (q == p) return false;
    pairs.push_back(p);
    ++pair_load[static_cast<std::size_t>(a)];
    ++pair_load[static_cast<std::size_t>(b)];
    return true;
  };
  for (int i = 0; i + 1 < universe; i += 2)
    add_pair(shuffled[static_cast<std::size_t>(i)], shuffled[static_cast<std::size_t>(i + 1)]);

  const long extra_target = uniform_long(rng, 0, universe / 3);
  long added = 0;
  for (int attempt = 0; attempt < 20 * universe && added < extra_target; ++attempt) {
    const int a = static_cast<int>(uniform_u64(rng, static_cast<std::uint64_t>(universe)));
    const int b = static_cast<int>(uniform_u64(rng, static_cast<std::uint64_t>(universe)));
    if (a == b) continue;
    if (pair_load[static_cast<std::size_t>(a)] >= 2 || pair_load[static_cast<std::size_t>(b)] >= 2) continue;
    if (add_pair(a, b)) ++added;
  }
  return downward_closure(set_family(universe, std::move(pairs)));
}

// 1-dimensional embedding with every length a multiple of 1/m in (0, 1].
inline embedding random_grid_embedding_1d(rng_t& rng, int universe, long m) {
  std::vector<box_dims> boxes;
  boxes.reserve(static_cast<std::size_t>(universe));
  for (int e = 0; e < universe; ++e)
    boxes.emplace_back(std::vector<rational>{make_rational(uniform_long(rng, 1, m), m)});
  return embedding(1, std::move(boxes));
}

}  // namespace gbp
