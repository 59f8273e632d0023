#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "gbp/budget.hpp"
#include "gbp/geometry.hpp"

namespace gbp {

// Box occupancy is the half-open product [p, p+v); touching boundaries is
// allowed. True iff every box stays inside the unit cube and the occupied
// regions are pairwise disjoint (some coordinate separates each pair).
inline bool verify_packing(const packing_instance& inst, const placement& pl) {
  const int k = inst.box_count();
  const int d = inst.dimension();
  if (static_cast<int>(pl.positions.size()) != k)
    throw std::invalid_argument("verify_packing: one position per box required");
  for (const auto& pos : pl.positions)
    if (static_cast<int>(pos.size()) != d)
      throw std::invalid_argument("verify_packing: position dimension mismatch");

  for (int i = 0; i < k; ++i)
    for (int l = 0; l < d; ++l) {
      if (pl.positions[i][l] < 0) return false;
      if (pl.positions[i][l] + inst.box(i).side(l) > 1) return false;
    }

  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool separated = false;
      for (int l = 0; l < d && !separated; ++l) {
        if (pl.positions[i][l] + inst.box(i).side(l) <= pl.positions[j][l]) separated = true;
        else if (pl.positions[j][l] + inst.box(j).side(l) <= pl.positions[i][l]) separated = true;
      }
      if (!separated) return false;
    }
  return true;
}

// Smallest coordinate where the two boxes can sit side by side; none means
// the pair cannot fit together in the unit cube at all.
inline std::optional<int> pair_fit_coordinate(const box_dims& u, const box_dims& v) {
  if (u.dimension() != v.dimension())
    throw std::invalid_argument("pair_fit_coordinate: dimension mismatch");
  for (int j = 0; j < u.dimension(); ++j)
    if (u.side(j) + v.side(j) <= 1) return j;
  return std::nullopt;
}

// Explicit positions for three boxes whose pairwise separating coordinates
// j12, j23, j31 are not all equal. Requires the side sums at the named
// coordinates to be within 1; |{j12, j23, j31}| >= 2.
inline placement triple_placement(const box_dims& v1, const box_dims& v2, const box_dims& v3,
                                  int j12, int j23, int j31) {
  const int d = v1.dimension();
  if (v2.dimension() != d || v3.dimension() != d)
    throw std::invalid_argument("triple_placement: dimension mismatch");
  for (int j : {j12, j23, j31})
    if (j < 0 || j >= d) throw std::invalid_argument("triple_placement: coordinate index out of range");
  if (v1.side(j12) + v2.side(j12) > 1)
    throw std::invalid_argument("triple_placement: side sum exceeds 1 at j12");
  if (v2.side(j23) + v3.side(j23) > 1)
    throw std::invalid_argument("triple_placement: side sum exceeds 1 at j23");
  if (v3.side(j31) + v1.side(j31) > 1)
    throw std::invalid_argument("triple_placement: side sum exceeds 1 at j31");
  if (j12 == j23 && j23 == j31)
    throw std::invalid_argument("triple_placement: needs at least two distinct coordinates");

  placement out;
  out.positions.assign(3, std::vector<rational>(static_cast<std::size_t>(d), rational(0)));
  if (j12 != j23 && j23 != j31 && j31 != j12) {
    out.positions[0][static_cast<std::size_t>(j31)] = v3.side(j31);
    out.positions[1][static_cast<std::size_t>(j12)] = v1.side(j12);
    out.positions[2][static_cast<std::size_t>(j23)] = v2.side(j23);
    return out;
  }

  // Exactly two distinct indices. Relabel the boxes cyclically so the
  // repeated index is the one shared by both pairs involving slot a; then
  // slot a sits at the origin, b beside it, and c beside a and above b.
  const box_dims* boxes[3] = {&v1, &v2, &v3};
  int a, b, c, jab, jbc;
  if (j12 == j31) {
    a = 0; b = 1; c = 2; jab = j12; jbc = j23;
  } else if (j12 == j23) {
    a = 1; b = 2; c = 0; jab = j23; jbc = j31;
  } else {  // j23 == j31
    a = 2; b = 0; c = 1; jab = j31; jbc = j12;
  }
  out.positions[b][static_cast<std::size_t>(jab)] = boxes[a]->side(jab);
  out.positions[c][static_cast<std::size_t>(jab)] = boxes[a]->side(jab);
  out.positions[c][static_cast<std::size_t>(jbc)] = boxes[b]->side(jbc);
  return out;
}

// Decision for triples whose pairwise interaction is confined to a single
// coordinate j (pairwise sums <= 1 at j and > 1 everywhere else; this
// precondition is validated). Under it, a fit exists iff the three sides
// at j sum to at most 1, so a none here certifies that no placement exists.
inline std::optional<placement> triple_fit_single_coordinate(const box_dims& v1, const box_dims& v2,
                                                             const box_dims& v3, int j) {
  const int d = v1.dimension();
  if (v2.dimension() != d || v3.dimension() != d)
    throw std::invalid_argument("triple_fit_single_coordinate: dimension mismatch");
  if (j < 0 || j >= d)
    throw std::invalid_argument("triple_fit_single_coordinate: coordinate index out of range");
  const box_dims* boxes[3] = {&v1, &v2, &v3};
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      if (boxes[a]->side(j) + boxes[b]->side(j) > 1)
        throw std::invalid_argument("triple_fit_single_coordinate: pair sum at j exceeds 1");
      for (int l = 0; l < d; ++l)
        if (l != j && boxes[a]->side(l) + boxes[b]->side(l) <= 1)
          throw std::invalid_argument(
              "triple_fit_single_coordinate: pair sum within 1 at a coordinate other than j");
    }

  if (v1.side(j) + v2.side(j) + v3.side(j) > 1) return std::nullopt;
  placement out;
  out.positions.assign(3, std::vector<rational>(static_cast<std::size_t>(d), rational(0)));
  out.positions[1][static_cast<std::size_t>(j)] = v1.side(j);
  out.positions[2][static_cast<std::size_t>(j)] = v1.side(j) + v2.side(j);
  return out;
}

// One entry of a separation assignment: the unordered pair (i, j), i < j,
// is separated along `coordinate`; low_first means box i precedes box j.
struct separation {
  int coordinate = 0;
  bool low_first = true;
};

// A disjointness certificate: a separating coordinate and an order for
// every unordered box pair, indexed lexicographically
// (0,1), (0,2), ..., (0,k-1), (1,2), ...
struct separation_assignment {
  std::vector<separation> pairs;

  static int pair_count(int boxes) { return boxes * (boxes - 1) / 2; }
  static int pair_rank(int i, int j, int boxes) {
    // i < j
    return i * boxes - i * (i + 1) / 2 + (j - i - 1);
  }
};

namespace detail {

// Longest-path feasibility of one coordinate's precedence digraph:
// acyclic, and along every directed path the sides (plus the terminal
// box's side) sum to at most 1. Fills `dist` with the longest-path
// positions when feasible.
inline bool coordinate_positions(const packing_instance& inst, int coord,
                                 const std::vector<char>& adj, std::vector<rational>& dist) {
  const int k = inst.box_count();
  std::vector<int> indegree(static_cast<std::size_t>(k), 0);
  for (int u = 0; u < k; ++u)
    for (int v = 0; v < k; ++v)
      if (adj[static_cast<std::size_t>(u) * k + v]) ++indegree[static_cast<std::size_t>(v)];

  dist.assign(static_cast<std::size_t>(k), rational(0));
  std::vector<int> ready;
  ready.reserve(static_cast<std::size_t>(k));
  for (int v = 0; v < k; ++v)
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);

  int processed = 0;
  for (std::size_t head = 0; head < ready.size(); ++head) {
    const int u = ready[head];
    ++processed;
    if (dist[static_cast<std::size_t>(u)] + inst.box(u).side(coord) > 1) return false;
    const rational reach = dist[static_cast<std::size_t>(u)] + inst.box(u).side(coord);
    for (int v = 0; v < k; ++v) {
      if (!adj[static_cast<std::size_t>(u) * k + v]) continue;
      if (reach > dist[static_cast<std::size_t>(v)]) dist[static_cast<std::size_t>(v)] = reach;
      if (--indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    }
  }
  return processed == k;  // otherwise the digraph has a cycle
}

}  // namespace detail

// Positions realizing a full separation assignment, or none if it is
// infeasible (cyclic precedence or an over-long path in some coordinate).
// Positions are the per-coordinate longest-path distances.
inline std::optional<placement> realize_assignment(const packing_instance& inst,
                                                   const separation_assignment& assign) {
  const int k = inst.box_count();
  const int d = inst.dimension();
  if (static_cast<int>(assign.pairs.size()) != separation_assignment::pair_count(k))
    throw std::invalid_argument("realize_assignment: one entry per unordered pair required");

  std::vector<std::vector<char>> adj(static_cast<std::size_t>(d),
                                     std::vector<char>(static_cast<std::size_t>(k) * k, 0));
  int rank = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j, ++rank) {
      const separation& s = assign.pairs[static_cast<std::size_t>(rank)];
      if (s.coordinate < 0 || s.coordinate >= d)
        throw std::invalid_argument("realize_assignment: coordinate out of range");
      const int from = s.low_first ? i : j;
      const int to = s.low_first ? j : i;
      adj[static_cast<std::size_t>(s.coordinate)][static_cast<std::size_t>(from) * k + to] = 1;
    }

  placement out;
  out.positions.assign(static_cast<std::size_t>(k),
                       std::vector<rational>(static_cast<std::size_t>(d), rational(0)));
  std::vector<rational> dist;
  for (int c = 0; c < d; ++c) {
    if (!detail::coordinate_positions(inst, c, adj[static_cast<std::size_t>(c)], dist))
      return std::nullopt;
    for (int i = 0; i < k; ++i) out.positions[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = dist[static_cast<std::size_t>(i)];
  }
  return out;
}

namespace detail {

struct fit_search {
  const packing_instance& inst;
  budget& work;
  int k, d;
  std::vector<std::pair<int, int>> pair_list;                 // lexicographic
  std::vector<std::vector<separation>> options;               // per pair
  std::vector<std::vector<char>> adj;                         // per coordinate, k*k
  separation_assignment assign;
  std::optional<placement> found;

  fit_search(const packing_instance& instance, budget& b)
      : inst(instance), work(b), k(instance.box_count()), d(instance.dimension()) {
    assign.pairs.resize(static_cast<std::size_t>(separation_assignment::pair_count(k)));
    adj.assign(static_cast<std::size_t>(d), std::vector<char>(static_cast<std::size_t>(k) * k, 0));
  }

  bool coordinate_feasible(int c) {
    std::vector<rational> dist;
    return coordinate_positions(inst, c, adj[static_cast<std::size_t>(c)], dist);
  }

  bool dfs(std::size_t pair_idx) {
    if (pair_idx == pair_list.size()) {
      found = realize_assignment(inst, assign);
      return found.has_value();
    }
    const auto [i, j] = pair_list[pair_idx];
    for (const separation& s : options[pair_idx]) {
      work.charge();
      const int from = s.low_first ? i : j;
      const int to = s.low_first ? j : i;
      auto& row = adj[static_cast<std::size_t>(s.coordinate)];
      row[static_cast<std::size_t>(from) * k + to] = 1;
      assign.pairs[static_cast<std::size_t>(pair_idx)] = s;
      if (coordinate_feasible(s.coordinate) && dfs(pair_idx + 1)) return true;
      row[static_cast<std::size_t>(from) * k + to] = 0;
    }
    return false;
  }
};

}  // namespace detail

// Complete fit decision: the boxes fit in the unit cube iff some placement
// exists. Backtracks over separation assignments in a fixed order (pairs
// lexicographic, coordinates ascending, lower box first), so the returned
// placement is canonical. Any valid packing induces a separating
// coordinate and order per pair, and conversely a feasible assignment's
// longest-path distances realize a packing, which makes the search
// complete without discretizing positions.
inline std::optional<placement> fits_exact(const packing_instance& inst, budget& work) {
  const int k = inst.box_count();
  const int d = inst.dimension();
  if (k == 0) return placement{};
  placement origin;
  origin.positions.assign(static_cast<std::size_t>(k),
                          std::vector<rational>(static_cast<std::size_t>(d), rational(0)));
  if (k == 1) return origin;

  detail::fit_search search(inst, work);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      std::vector<separation> opts;
      for (int c = 0; c < d; ++c)
        if (inst.box(i).side(c) + inst.box(j).side(c) <= 1) {
          opts.push_back({c, true});
          opts.push_back({c, false});
        }
      if (opts.empty()) return std::nullopt;  // this pair can never be separated
      search.pair_list.emplace_back(i, j);
      search.options.push_back(std::move(opts));
    }

  if (search.dfs(0)) return search.found;
  return std::nullopt;
}

inline std::optional<placement> fits_exact(const packing_instance& inst) {
  budget work;
  return fits_exact(inst, work);
}

// Independent exhaustive oracle for instances whose sides are multiples of
// 1/m: tries every grid position tuple, box by box, in lexicographic
// order. A packing of grid-sided boxes exists iff one exists with all
// positions on the grid (push every box toward the origin; the normalized
// coordinates are sums of side lengths), so grid enumeration is complete.
inline std::optional<placement> fits_grid_oracle(const packing_instance& inst, long m, budget& work) {
  if (m < 1) throw std::invalid_argument("fits_grid_oracle: grid must be positive");
  const int k = inst.box_count();
  const int d = inst.dimension();

  std::vector<std::vector<long>> side_units(static_cast<std::size_t>(k),
                                            std::vector<long>(static_cast<std::size_t>(d)));
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < d; ++l) {
      rational scaled = inst.box(i).side(l) * m;
      if (scaled.get_den() != 1)
        throw std::invalid_argument("fits_grid_oracle: side is not a multiple of 1/m");
      side_units[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] = scaled.get_num().get_si();
    }

  std::vector<std::vector<long>> pos(static_cast<std::size_t>(k),
                                     std::vector<long>(static_cast<std::size_t>(d), 0));

  auto disjoint_from_placed = [&](int i) {
    for (int j = 0; j < i; ++j) {
      bool overlap_all = true;
      for (int l = 0; l < d && overlap_all; ++l) {
        const long ai = pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
        const long bi = ai + side_units[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
        const long aj = pos[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
        const long bj = aj + side_units[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
        if (bi <= aj || bj <= ai) overlap_all = false;
      }
      if (overlap_all) return false;
    }
    return true;
  };

  auto place = [&](auto&& self, int i) -> bool {
    if (i == k) return true;
    auto& p = pos[static_cast<std::size_t>(i)];
    std::fill(p.begin(), p.end(), 0L);
    for (;;) {
      work.charge();
      if (disjoint_from_placed(i) && self(self, i + 1)) return true;
      // advance the position tuple in lexicographic order
      int l = d - 1;
      while (l >= 0) {
        const long limit = m - side_units[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
        if (p[static_cast<std::size_t>(l)] < limit) {
          ++p[static_cast<std::size_t>(l)];
          break;
        }
        p[static_cast<std::size_t>(l)] = 0;
        --l;
      }
      if (l < 0) return false;
    }
  };

  if (!place(place, 0)) return std::nullopt;

  placement out;
  out.positions.assign(static_cast<std::size_t>(k), {});
  for (int i = 0; i < k; ++i) {
    auto& row = out.positions[static_cast<std::size_t>(i)];
    row.reserve(static_cast<std::size_t>(d));
    for (int l = 0; l < d; ++l)
      row.push_back(make_rational(pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)], m));
  }
  return out;
}

inline std::optional<placement> fits_grid_oracle(const packing_instance& inst, long m) {
  budget work;
  return fits_grid_oracle(inst, m, work);
}

}  // namespace gbp
