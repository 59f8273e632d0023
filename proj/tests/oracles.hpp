#pragma once

// Brute-force reference implementations used only by tests. They stay
// deliberately independent of the search strategies in the library: the
// chromatic oracle enumerates raw color assignments, the bin oracle
// enumerates set partitions, and the clique oracle enumerates subsets.

#include <algorithm>
#include <optional>
#include <vector>

#include "gbp/fit.hpp"
#include "gbp/geometry.hpp"
#include "gbp/graph.hpp"

namespace oracles {

inline bool proper_coloring(const gbp::graph& g, const std::vector<int>& colors) {
  for (const auto& [u, v] : g.edges())
    if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) return false;
  return true;
}

// Smallest k admitting a proper k-coloring, by enumerating all k^n
// assignments.
inline int brute_force_chromatic(const gbp::graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    for (;;) {
      if (proper_coloring(g, colors)) return k;
      int v = n - 1;
      while (v >= 0 && colors[static_cast<std::size_t>(v)] == k - 1) {
        colors[static_cast<std::size_t>(v)] = 0;
        --v;
      }
      if (v < 0) break;
      ++colors[static_cast<std::size_t>(v)];
    }
  }
  return n;
}

// All cliques of g as sorted vertex lists (including the empty set).
inline std::vector<std::vector<int>> brute_force_cliques(const gbp::graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) subset.push_back(v);
    if (gbp::is_clique(g, subset)) out.push_back(subset);
  }
  return out;
}

inline std::vector<std::vector<int>> inclusion_maximal(std::vector<std::vector<int>> sets) {
  std::vector<std::vector<int>> out;
  for (const auto& s : sets) {
    if (s.empty()) continue;
    bool maximal = true;
    for (const auto& t : sets)
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(s);
  }
  return out;
}

// Minimum number of bins over all set partitions of the boxes (restricted
// growth strings), where a part is usable iff its boxes fit together.
inline int brute_force_min_bins(const gbp::packing_instance& inst) {
  const int k = inst.box_count();
  if (k == 0) return 0;
  std::vector<int> part(static_cast<std::size_t>(k), 0);
  int best = k;
  auto recurse = [&](auto&& self, int i, int parts_used) -> void {
    if (parts_used >= best) return;
    if (i == k) {
      for (int p = 0; p < parts_used; ++p) {
        std::vector<int> members;
        for (int b = 0; b < k; ++b)
          if (part[static_cast<std::size_t>(b)] == p) members.push_back(b);
        if (!gbp::fits_exact(inst.subset(members)).has_value()) return;
      }
      best = parts_used;
      return;
    }
    for (int p = 0; p <= parts_used && p < k; ++p) {
      part[static_cast<std::size_t>(i)] = p;
      self(self, i + 1, std::max(parts_used, p + 1));
    }
  };
  recurse(recurse, 0, 0);
  return best;
}

// Every graph on n labelled vertices, by edge mask.
inline std::vector<gbp::graph> all_graphs_on(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<gbp::graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    gbp::graph g(n);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask & (1u << s)) g.add_edge(slots[s].first, slots[s].second);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace oracles
