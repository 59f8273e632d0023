#pragma once

// Randomized and exhaustive checks of the library's core equivalences
// against the exact fit decision. Counterexamples are reported as
// check-witness-compatible objects; since the properties are theorems, any
// counterexample indicates an implementation bug.

#include <string>

#include "gbp/io.hpp"
#include "gbp/sampling.hpp"
#include "gbp/witness.hpp"

namespace gbp {

struct lemma_report {
  std::string lemma;
  std::uint64_t requested = 0;  // trials asked for (graph count for sweeps)
  std::uint64_t accepted = 0;   // trials that met the precondition
  std::uint64_t rejected = 0;   // rejection-sampling discards
  bool starved = false;         // could not reach the requested trial count
  bool pass = false;
  json counterexample;          // null, or a witness object

  json to_json() const {
    return json{{"lemma", lemma},       {"requested", requested}, {"accepted", accepted},
                {"rejected", rejected}, {"starved", starved},     {"pass", pass},
                {"counterexample", counterexample}};
  }
};

// Pair criterion vs the exact search, on random boxes.
inline lemma_report run_pair_lemma(std::uint64_t seed, std::uint64_t trials, int max_dim,
                                   long max_den, budget& work) {
  lemma_report report;
  report.lemma = "pair";
  report.requested = trials;
  report.counterexample = nullptr;
  rng_t rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const int d = static_cast<int>(uniform_long(rng, 1, max_dim));
    const box_dims u = random_box(rng, d, max_den);
    const box_dims v = random_box(rng, d, max_den);
    const bool criterion = pair_fit_coordinate(u, v).has_value();
    const auto pl = fits_exact(packing_instance(d, {u, v}), work);
    ++report.accepted;
    const bool sound = !pl || verify_packing(packing_instance(d, {u, v}), *pl);
    if (criterion != pl.has_value() || !sound) {
      report.counterexample = json{{"kind", "lemma-counterexample"},
                                   {"lemma", "pair"},
                                   {"u", rationals_to_json(u.sides())},
                                   {"v", rationals_to_json(v.sides())}};
      return report;
    }
  }
  report.pass = true;
  return report;
}

// Triple placements from sampled preconditions must verify.
inline lemma_report run_triple_lemma(std::uint64_t seed, std::uint64_t trials, int max_dim,
                                     long max_den, budget& work) {
  (void)work;
  lemma_report report;
  report.lemma = "triple";
  report.requested = trials;
  report.counterexample = nullptr;
  rng_t rng(seed);
  const std::uint64_t max_attempts = trials * 1000 + 1000;
  std::uint64_t attempts = 0;
  while (report.accepted < trials && attempts < max_attempts) {
    ++attempts;
    const int d = static_cast<int>(uniform_long(rng, 1, max_dim));
    const box_dims v1 = random_box(rng, d, max_den);
    const box_dims v2 = random_box(rng, d, max_den);
    const box_dims v3 = random_box(rng, d, max_den);
    const auto j12 = pair_fit_coordinate(v1, v2);
    const auto j23 = pair_fit_coordinate(v2, v3);
    const auto j31 = pair_fit_coordinate(v3, v1);
    if (!j12 || !j23 || !j31 || (*j12 == *j23 && *j23 == *j31)) {
      ++report.rejected;
      continue;
    }
    ++report.accepted;
    const placement pl = triple_placement(v1, v2, v3, *j12, *j23, *j31);
    if (!verify_packing(packing_instance(d, {v1, v2, v3}), pl)) {
      report.counterexample = json{{"kind", "lemma-counterexample"},
                                   {"lemma", "triple"},
                                   {"v1", rationals_to_json(v1.sides())},
                                   {"v2", rationals_to_json(v2.sides())},
                                   {"v3", rationals_to_json(v3.sides())},
                                   {"j12", *j12},
                                   {"j23", *j23},
                                   {"j31", *j31}};
      return report;
    }
  }
  report.starved = report.accepted < trials;
  report.pass = true;
  return report;
}

// Single-coordinate triples constructed to satisfy the precondition: the
// slim coordinate's sides are r/2, all others 1/2 + r/2, so any pair sums
// to at most 1 at j and strictly above 1 elsewhere.
inline lemma_report run_single_coord_lemma(std::uint64_t seed, std::uint64_t trials, int max_dim,
                                           long max_den, budget& work) {
  lemma_report report;
  report.lemma = "single-coord";
  report.requested = trials;
  report.counterexample = nullptr;
  rng_t rng(seed);
  const rational half = make_rational(1, 2);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const int d = static_cast<int>(uniform_long(rng, 1, max_dim));
    const int j = static_cast<int>(uniform_long(rng, 0, d - 1));
    std::vector<box_dims> boxes;
    for (int i = 0; i < 3; ++i) {
      std::vector<rational> sides;
      sides.reserve(static_cast<std::size_t>(d));
      for (int l = 0; l < d; ++l) {
        const rational slim = random_unit_rational(rng, max_den) / 2;
        sides.push_back(l == j ? slim : rational(half + slim));
      }
      boxes.emplace_back(std::move(sides));
    }
    ++report.accepted;
    const auto stacked = triple_fit_single_coordinate(boxes[0], boxes[1], boxes[2], j);
    const packing_instance inst(d, boxes);
    const auto exact = fits_exact(inst, work);
    const bool sound = (!stacked || verify_packing(inst, *stacked)) &&
                       (!exact || verify_packing(inst, *exact));
    if (stacked.has_value() != exact.has_value() || !sound) {
      report.counterexample = json{{"kind", "lemma-counterexample"},
                                   {"lemma", "single-coord"},
                                   {"v1", rationals_to_json(boxes[0].sides())},
                                   {"v2", rationals_to_json(boxes[1].sides())},
                                   {"v3", rationals_to_json(boxes[2].sides())},
                                   {"j", j}};
      return report;
    }
  }
  report.pass = true;
  return report;
}

// Exhaustive clique <=> fit sweep over every graph on 1..max_n vertices.
inline lemma_report run_reduction_lemma(int max_n, const rational& alpha, budget& work) {
  lemma_report report;
  report.lemma = "reduction";
  report.counterexample = nullptr;
  const reduction_params params(alpha);
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      graph g(n);
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask & (1u << s)) g.add_edge(slots[s].first, slots[s].second);
      ++report.requested;
      ++report.accepted;
      const reduction_report r = verify_reduction_property(g, params, work);
      if (!r.pass) {
        std::vector<int> subset_1indexed = *r.violating_subset;
        for (int& v : subset_1indexed) ++v;
        report.counterexample = make_reduction_violation_witness(g, params.alpha, subset_1indexed);
        report.counterexample["lemma"] = "reduction";
        report.counterexample["kind"] = "lemma-counterexample";
        return report;
      }
    }
  }
  report.pass = true;
  return report;
}

// Conflict-degree and greedy-matching bounds on random bounded families.
inline lemma_report run_matching_bound_lemma(std::uint64_t seed, std::uint64_t trials,
                                             int universe, budget& work) {
  lemma_report report;
  report.lemma = "matching-bound";
  report.requested = trials;
  report.counterexample = nullptr;
  rng_t rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const set_family f = random_bounded_family(rng, universe);
    ++report.accepted;
    auto fail = [&](const std::string& reason) {
      report.counterexample = json{{"kind", "lemma-counterexample"},
                                   {"lemma", "matching-bound"},
                                   {"family", family_to_json(f)},
                                   {"reason", reason}};
    };
    const family_profile profile = bounded_profile(f);
    const int kb = profile.max_set_size * profile.max_element_multiplicity;
    const graph g = conflict_graph(f);
    int max_degree = 0;
    for (int v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
    if (max_degree > kb * kb) {
      fail("conflict degree exceeds (kB)^2");
      return report;
    }
    const matching_result greedy = induced_matching(f, matching_mode::greedy, work);
    if (auto err = induced_matching_error(f, greedy.matching)) {
      fail("greedy matching invalid: " + *err);
      return report;
    }
    const int v_count = g.vertex_count();
    const int needed = (v_count + kb * kb) / (kb * kb + 1);  // ceil(|V| / ((kB)^2+1))
    if (static_cast<int>(greedy.matching.members.size()) < needed) {
      fail("greedy matching below |V|/((kB)^2+1)");
      return report;
    }
    const gpd_bound_report bound = gpd_lower_bound(f, work);
    const int active = f.universe_size() - static_cast<int>(isolated_elements(f).size());
    const int k = profile.max_set_size, b = profile.max_element_multiplicity;
    const int denom = k * (k * k * b * b + 1);
    if (bound.bound < (active + denom - 1) / denom) {
      fail("gpd lower bound below |U|/(k(k^2B^2+1))");
      return report;
    }
  }
  report.pass = true;
  return report;
}

// Bin count of the reduced instance vs the chromatic number of the
// complement graph; exhaustive over small n plus seeded random graphs.
inline lemma_report run_bins_identity_check(int exhaustive_max_n, std::uint64_t seed,
                                            std::uint64_t random_trials, int random_n,
                                            budget& work) {
  lemma_report report;
  report.lemma = "bins-identity";
  report.counterexample = nullptr;
  const reduction_params params(make_rational(1, 20));

  auto check_graph = [&](const graph& g) -> bool {
    ++report.requested;
    ++report.accepted;
    const packing_instance inst = build_instance(g, params);
    const bin_result bins = min_bins_exact(inst, work);
    const coloring chi = chromatic_number(complement(g), work);
    if (bins.bin_count != chi.color_count) {
      report.counterexample = json{{"kind", "bins-identity-violation"},
                                   {"graph", graph_to_json(g)},
                                   {"alpha", to_string(params.alpha)},
                                   {"min_bins", bins.bin_count},
                                   {"complement_chromatic", chi.color_count}};
      return false;
    }
    return true;
  };

  for (int n = 1; n <= exhaustive_max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      graph g(n);
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask & (1u << s)) g.add_edge(slots[s].first, slots[s].second);
      if (!check_graph(g)) return report;
    }
  }
  rng_t rng(seed);
  for (std::uint64_t t = 0; t < random_trials; ++t)
    if (!check_graph(random_graph(rng, random_n))) return report;
  report.pass = true;
  return report;
}

}  // namespace gbp
