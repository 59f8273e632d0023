#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "gbp/budget.hpp"
#include "gbp/fit.hpp"
#include "gbp/geometry.hpp"
#include "gbp/graph.hpp"

namespace gbp {

struct coloring {
  int color_count = 0;
  std::vector<int> colors;  // one color per vertex, values 0..color_count-1
};

namespace detail {

struct dsatur_state {
  const graph& g;
  budget& work;
  int n;
  std::vector<int> colors;
  int best_count;
  std::vector<int> best_colors;
  int lower_bound;
  bool done = false;

  dsatur_state(const graph& gr, budget& b, int lb, int ub_count, std::vector<int> ub_colors)
      : g(gr), work(b), n(gr.vertex_count()), colors(static_cast<std::size_t>(gr.vertex_count()), -1),
        best_count(ub_count), best_colors(std::move(ub_colors)), lower_bound(lb) {}

  int pick_vertex() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (colors[static_cast<std::size_t>(v)] != -1) continue;
      // saturation: number of distinct colors among neighbours
      std::uint64_t seen = 0;
      int sat = 0;
      int deg = 0;
      for (int u = 0; u < n; ++u) {
        if (!g.has_edge(v, u)) continue;
        ++deg;
        const int c = colors[static_cast<std::size_t>(u)];
        if (c >= 0 && !(seen & (1ull << c))) {
          seen |= 1ull << c;
          ++sat;
        }
      }
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  void search(int colored, int used) {
    if (done) return;
    work.charge();
    if (used >= best_count) return;
    if (colored == n) {
      best_count = used;
      best_colors = colors;
      if (best_count == lower_bound) done = true;
      return;
    }
    const int v = pick_vertex();
    std::uint64_t neighbour_colors = 0;
    for (int u = 0; u < n; ++u)
      if (g.has_edge(v, u) && colors[static_cast<std::size_t>(u)] >= 0)
        neighbour_colors |= 1ull << colors[static_cast<std::size_t>(u)];
    const int limit = std::min(used + 1, best_count - 1);  // colors 0..limit-1
    for (int c = 0; c < limit; ++c) {
      if (neighbour_colors & (1ull << c)) continue;
      colors[static_cast<std::size_t>(v)] = c;
      search(colored + 1, std::max(used, c + 1));
      colors[static_cast<std::size_t>(v)] = -1;
      if (done) return;
    }
  }
};

inline std::vector<int> greedy_clique(const graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int u : clique)
      if (!g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (ok) clique.push_back(v);
  }
  return clique;
}

inline coloring dsatur_greedy(const graph& g) {
  const int n = g.vertex_count();
  coloring out;
  out.colors.assign(static_cast<std::size_t>(n), -1);
  for (int step = 0; step < n; ++step) {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (out.colors[static_cast<std::size_t>(v)] != -1) continue;
      std::uint64_t seen = 0;
      int sat = 0, deg = 0;
      for (int u = 0; u < n; ++u) {
        if (!g.has_edge(v, u)) continue;
        ++deg;
        const int c = out.colors[static_cast<std::size_t>(u)];
        if (c >= 0 && !(seen & (1ull << c))) {
          seen |= 1ull << c;
          ++sat;
        }
      }
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    std::uint64_t neighbour_colors = 0;
    for (int u = 0; u < n; ++u)
      if (g.has_edge(best, u) && out.colors[static_cast<std::size_t>(u)] >= 0)
        neighbour_colors |= 1ull << out.colors[static_cast<std::size_t>(u)];
    int c = 0;
    while (neighbour_colors & (1ull << c)) ++c;
    out.colors[static_cast<std::size_t>(best)] = c;
    out.color_count = std::max(out.color_count, c + 1);
  }
  return out;
}

}  // namespace detail

// Exact chromatic number with a witness coloring: DSATUR branch and bound
// seeded with a greedy clique lower bound and a DSATUR greedy upper bound.
inline coloring chromatic_number(const graph& g, budget& work) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  if (n > 60) throw std::invalid_argument("chromatic_number: graph too large for exact search");
  const int lb = static_cast<int>(detail::greedy_clique(g).size());
  coloring ub = detail::dsatur_greedy(g);
  if (ub.color_count == lb) return ub;
  detail::dsatur_state state(g, work, lb, ub.color_count, std::move(ub.colors));
  state.search(0, 0);
  return {state.best_count, state.best_colors};
}

inline coloring chromatic_number(const graph& g) {
  budget work;
  return chromatic_number(g, work);
}

// A set of boxes that fits in one unit cube, with a placement witness.
struct configuration {
  std::vector<int> boxes;  // sorted box indices
  placement witness;       // rows follow `boxes`
};

namespace detail {

inline std::vector<int> mask_to_indices(std::uint32_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return out;
}

}  // namespace detail

// All inclusion-maximal fitting subsets. Fit is monotone, so a subset is
// tested only when all its one-smaller subsets fit; supersets of failing
// sets are never searched.
inline std::vector<configuration> enumerate_configurations(const packing_instance& inst,
                                                           budget& work) {
  const int k = inst.box_count();
  if (k > 16) throw std::invalid_argument("enumerate_configurations: too many boxes");
  if (k == 0) return {};

  const std::uint32_t total = 1u << k;
  std::vector<char> fits(total, 0);
  std::vector<placement> witness(total);
  fits[0] = 1;

  std::vector<std::vector<std::uint32_t>> by_popcount(static_cast<std::size_t>(k) + 1);
  for (std::uint32_t mask = 1; mask < total; ++mask)
    by_popcount[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);

  for (int size = 1; size <= k; ++size)
    for (std::uint32_t mask : by_popcount[static_cast<std::size_t>(size)]) {
      bool subsets_fit = true;
      for (std::uint32_t bits = mask; bits; bits &= bits - 1)
        if (!fits[mask ^ (bits & -bits)]) {
          subsets_fit = false;
          break;
        }
      if (!subsets_fit) continue;
      const std::vector<int> indices = detail::mask_to_indices(mask);
      if (auto pl = fits_exact(inst.subset(indices), work)) {
        fits[mask] = 1;
        witness[mask] = std::move(*pl);
      }
    }

  std::vector<configuration> out;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    if (!fits[mask]) continue;
    bool maximal = true;
    for (int v = 0; v < k && maximal; ++v)
      if (!(mask & (1u << v)) && fits[mask | (1u << v)]) maximal = false;
    if (maximal) out.push_back({detail::mask_to_indices(mask), witness[mask]});
  }
  return out;
}

inline std::vector<configuration> enumerate_configurations(const packing_instance& inst) {
  budget work;
  return enumerate_configurations(inst, work);
}

struct bin_result {
  int bin_count = 0;
  std::vector<configuration> bins;  // disjoint index sets covering all boxes
};

namespace detail {

// Restrict a configuration's witness to a subset of its boxes (a
// sub-placement of a valid packing stays valid).
inline configuration restrict_configuration(const configuration& cfg, std::uint32_t keep_mask) {
  configuration out;
  for (std::size_t row = 0; row < cfg.boxes.size(); ++row)
    if (keep_mask & (1u << cfg.boxes[row])) {
      out.boxes.push_back(cfg.boxes[row]);
      out.witness.positions.push_back(cfg.witness.positions[row]);
    }
  return out;
}

struct cover_search {
  budget& work;
  const std::vector<std::uint32_t>& config_masks;
  std::uint32_t full;
  int max_config_size;
  std::vector<int> chosen;
  std::vector<int> best;
  bool have_best = false;

  void search(std::uint32_t covered) {
    work.charge();
    if (covered == full) {
      if (!have_best || chosen.size() < best.size()) {
        best = chosen;
        have_best = true;
      }
      return;
    }
    const int remaining = std::popcount(full & ~covered);
    const int bound = static_cast<int>(chosen.size()) + (remaining + max_config_size - 1) / max_config_size;
    if (have_best && bound >= static_cast<int>(best.size())) return;

    // branch on the uncovered box contained in the fewest configurations
    int pick = -1, pick_options = -1;
    for (int v = 0; v < 32; ++v) {
      if (!(full & (1u << v)) || (covered & (1u << v))) continue;
      int options = 0;
      for (std::uint32_t m : config_masks)
        if (m & (1u << v)) ++options;
      if (pick == -1 || options < pick_options) {
        pick = v;
        pick_options = options;
      }
    }
    for (std::size_t c = 0; c < config_masks.size(); ++c) {
      if (!(config_masks[c] & (1u << pick))) continue;
      chosen.push_back(static_cast<int>(c));
      search(covered | config_masks[c]);
      chosen.pop_back();
    }
  }
};

}  // namespace detail

// Exact minimum number of unit cubes covering all boxes: branch and bound
// set cover over the maximal configurations (valid because fit is
// monotone, so any cover refines to maximal configurations). Overlapping
// chosen configurations are disjointified deterministically: the earlier
// bin keeps the box.
inline bin_result min_bins_exact(const packing_instance& inst, budget& work) {
  const int k = inst.box_count();
  if (k == 0) return {};
  const std::vector<configuration> configs = enumerate_configurations(inst, work);
  std::vector<std::uint32_t> masks;
  masks.reserve(configs.size());
  int max_size = 1;
  for (const auto& cfg : configs) {
    std::uint32_t m = 0;
    for (int v : cfg.boxes) m |= 1u << v;
    masks.push_back(m);
    max_size = std::max(max_size, static_cast<int>(cfg.boxes.size()));
  }
  const std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);

  detail::cover_search search{work, masks, full, max_size, {}, {}, false};
  // greedy cover as the initial upper bound
  {
    std::uint32_t covered = 0;
    std::vector<int> greedy;
    while (covered != full) {
      int best_c = -1, best_gain = 0;
      for (std::size_t c = 0; c < masks.size(); ++c) {
        const int gain = std::popcount(masks[c] & ~covered);
        if (gain > best_gain) {
          best_gain = gain;
          best_c = static_cast<int>(c);
        }
      }
      greedy.push_back(best_c);
      covered |= masks[static_cast<std::size_t>(best_c)];
    }
    search.best = std::move(greedy);
    search.have_best = true;
  }
  search.search(0);

  bin_result out;
  std::uint32_t assigned = 0;
  for (int c : search.best) {
    const std::uint32_t keep = masks[static_cast<std::size_t>(c)] & ~assigned;
    assigned |= keep;
    out.bins.push_back(detail::restrict_configuration(configs[static_cast<std::size_t>(c)], keep));
  }
  out.bin_count = static_cast<int>(out.bins.size());
  return out;
}

inline bin_result min_bins_exact(const packing_instance& inst) {
  budget work;
  return min_bins_exact(inst, work);
}

// Greedy first-fit: each box goes into the first open bin whose augmented
// set still fits, else opens a new bin. Never beats min_bins_exact.
inline bin_result first_fit_bins(const packing_instance& inst, std::span<const int> order,
                                 budget& work) {
  const int k = inst.box_count();
  {
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    if (static_cast<int>(order.size()) != k)
      throw std::invalid_argument("first_fit_bins: order must be a permutation of the boxes");
    for (int v : order) {
      if (v < 0 || v >= k || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("first_fit_bins: order must be a permutation of the boxes");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  bin_result out;
  for (int v : order) {
    bool placed = false;
    for (auto& bin : out.bins) {
      std::vector<int> candidate = bin.boxes;
      candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), v), v);
      if (auto pl = fits_exact(inst.subset(candidate), work)) {
        bin.boxes = std::move(candidate);
        bin.witness = std::move(*pl);
        placed = true;
        break;
      }
    }
    if (!placed) {
      configuration fresh;
      fresh.boxes = {v};
      fresh.witness.positions.assign(
          1, std::vector<rational>(static_cast<std::size_t>(inst.dimension()), rational(0)));
      out.bins.push_back(std::move(fresh));
    }
  }
  out.bin_count = static_cast<int>(out.bins.size());
  return out;
}

inline bin_result first_fit_bins(const packing_instance& inst, budget& work) {
  std::vector<int> order(static_cast<std::size_t>(inst.box_count()));
  std::iota(order.begin(), order.end(), 0);
  return first_fit_bins(inst, order, work);
}

inline bin_result first_fit_bins(const packing_instance& inst, std::span<const int> order) {
  budget work;
  return first_fit_bins(inst, order, work);
}

inline bin_result first_fit_bins(const packing_instance& inst) {
  budget work;
  return first_fit_bins(inst, work);
}

// Box indices by decreasing volume, ties by index.
inline std::vector<int> decreasing_volume_order(const packing_instance& inst) {
  std::vector<rational> volume(static_cast<std::size_t>(inst.box_count()), rational(1));
  for (int i = 0; i < inst.box_count(); ++i)
    for (int l = 0; l < inst.dimension(); ++l)
      volume[static_cast<std::size_t>(i)] *= inst.box(i).side(l);
  std::vector<int> order(static_cast<std::size_t>(inst.box_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return volume[static_cast<std::size_t>(a)] > volume[static_cast<std::size_t>(b)];
  });
  return order;
}

}  // namespace gbp
