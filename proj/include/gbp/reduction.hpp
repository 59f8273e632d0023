#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gbp/fit.hpp"
#include "gbp/geometry.hpp"
#include "gbp/graph.hpp"

namespace gbp {

// The diagonal placement below parks each clique box at 3/5 in its own
// coordinate, which needs 1/2 + alpha <= 3/5; hence alpha in (0, 1/10],
// equality allowed by the half-open semantics.
struct reduction_params {
  rational alpha;

  explicit reduction_params(rational a) : alpha(std::move(a)) {
    if (alpha <= 0 || alpha > make_rational(1, 10))
      throw std::invalid_argument("reduction_params: alpha must lie in (0, 1/10]");
  }
};

// Graph -> geometric packing instance with d = n. Box i is slim (alpha) in
// its own coordinate, leaves room for neighbours (1/2 + alpha) in theirs,
// and blocks everyone else (side 1), so a subset of boxes fits iff the
// subset is a clique.
inline packing_instance build_instance(const graph& g, const reduction_params& params) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("build_instance: graph must have at least one vertex");
  const rational half_plus = make_rational(1, 2) + params.alpha;
  std::vector<box_dims> boxes;
  boxes.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<rational> sides(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      if (i == j) sides[static_cast<std::size_t>(j)] = params.alpha;
      else if (g.has_edge(i, j)) sides[static_cast<std::size_t>(j)] = half_plus;
      else sides[static_cast<std::size_t>(j)] = 1;
    }
    boxes.emplace_back(std::move(sides));
  }
  return packing_instance(n, std::move(boxes));
}

// Certificate placement for a clique: member i sits at 3/5 in coordinate i
// and at 0 elsewhere. Rows follow the order of `clique`.
inline placement clique_placement(const graph& g, std::span<const int> clique,
                                  const reduction_params& params) {
  (void)params;
  std::vector<int> members(clique.begin(), clique.end());
  if (!is_clique(g, members))
    throw std::invalid_argument("clique_placement: the given set is not a clique");
  const int n = g.vertex_count();
  placement out;
  out.positions.reserve(members.size());
  for (int v : members) {
    std::vector<rational> pos(static_cast<std::size_t>(n), rational(0));
    pos[static_cast<std::size_t>(v)] = make_rational(3, 5);
    out.positions.push_back(std::move(pos));
  }
  return out;
}

struct reduction_report {
  bool pass = false;
  std::uint64_t subsets_checked = 0;
  // On failure: the violating subset (0-based vertices) and which side of
  // the equivalence broke.
  std::optional<std::vector<int>> violating_subset;
  bool violating_is_clique = false;
};

// Exhaustive check of the clique <=> fit equivalence over every vertex
// subset. Intended for small n; the caller's budget guards the fit search.
inline reduction_report verify_reduction_property(const graph& g, const reduction_params& params,
                                                  budget& work) {
  const int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("verify_reduction_property: graph too large for subset sweep");
  const packing_instance inst = build_instance(g, params);

  reduction_report report;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) subset.push_back(v);
    const bool clique = is_clique(g, subset);
    const bool fits = fits_exact(inst.subset(subset), work).has_value();
    ++report.subsets_checked;
    if (clique != fits) {
      report.pass = false;
      report.violating_subset = subset;
      report.violating_is_clique = clique;
      return report;
    }
  }
  report.pass = true;
  return report;
}

}  // namespace gbp
