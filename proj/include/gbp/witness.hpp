#pragma once

// Self-contained, machine-checkable witness reports. Every CLI failure
// exit ships one of these, and `check-witness` re-validates them from the
// JSON alone, so a report can be audited without rerunning the original
// command.

#include <string>

#include "gbp/embedding.hpp"
#include "gbp/fit.hpp"
#include "gbp/io.hpp"
#include "gbp/reduction.hpp"
#include "gbp/setfamily.hpp"
#include "gbp/solvers.hpp"

namespace gbp {

struct witness_check {
  bool ok = false;
  std::string detail;
};

// --- builders ---------------------------------------------------------------

inline json make_packing_witness(const packing_instance& inst, const placement& pl) {
  return json{{"kind", "packing"},
              {"instance", instance_to_json(inst)},
              {"positions", placement_to_json(pl)}};
}

inline json make_coloring_witness(const graph& g, const coloring& c) {
  return json{{"kind", "coloring"},
              {"graph", graph_to_json(g)},
              {"colors", c.colors},
              {"count", c.color_count}};
}

inline json make_bin_solution_witness(const packing_instance& inst, const bin_result& r) {
  json bins = json::array();
  json placements = json::array();
  for (const auto& bin : r.bins) {
    bins.push_back(bin.boxes);
    placements.push_back(placement_to_json(bin.witness));
  }
  return json{{"kind", "bin-solution"},
              {"instance", instance_to_json(inst)},
              {"bins", bins},
              {"count", r.bin_count},
              {"placements", placements}};
}

inline json make_matching_witness(const set_family& f, const induced_matching_t& m) {
  json members = json::array();
  for (const auto& s : m.members) members.push_back(s);
  return json{{"kind", "induced-matching"},
              {"family", family_to_json(f)},
              {"matching", members}};
}

inline json make_embedding_violation_witness(const set_family& f, const embedding& emb,
                                             const embedding_violation& v) {
  json out{{"kind", "embedding-violation"},
           {"family", family_to_json(f)},
           {"embedding", embedding_to_json(emb)},
           {"direction", to_string(v.kind)},
           {"set", v.set}};
  if (v.kind == violation_kind::not_downward_closed) out["subset"] = v.subset;
  return out;
}

inline json make_one_dim_violation_witness(const set_family& f, const embedding& emb,
                                           const one_dim_witness& w) {
  return json{{"kind", "one-dim-violation"},
              {"family", family_to_json(f)},
              {"embedding", embedding_to_json(emb)},
              {"direction", to_string(w.kind)},
              {"elements", w.elements}};
}

inline json make_reduction_violation_witness(const graph& g, const rational& alpha,
                                             const std::vector<int>& subset) {
  return json{{"kind", "reduction-violation"},
              {"graph", graph_to_json(g)},
              {"alpha", to_string(alpha)},
              {"subset", subset}};
}

inline json make_family_hygiene_witness(const set_family& f,
                                        const std::optional<closure_witness>& missing,
                                        const std::vector<int>& isolated) {
  json out{{"kind", "family-hygiene"}, {"family", family_to_json(f)}};
  if (missing) {
    out["member"] = missing->member;
    out["missing_subset"] = missing->missing_subset;
  }
  if (!isolated.empty()) out["isolated"] = isolated;
  return out;
}

// --- checker ----------------------------------------------------------------

namespace detail {

inline witness_check check_packing_witness(const json& w) {
  const packing_instance inst = instance_from_json(w.at("instance"));
  const placement pl = placement_from_json(w.at("positions"));
  if (verify_packing(inst, pl)) return {true, "placement packs the instance"};
  return {false, "placement does not pack the instance"};
}

inline witness_check check_coloring_witness(const json& w) {
  const graph g = graph_from_json(w.at("graph"));
  const std::vector<int> colors = w.at("colors").get<std::vector<int>>();
  const int count = w.at("count").get<int>();
  if (static_cast<int>(colors.size()) != g.vertex_count())
    return {false, "coloring has the wrong number of vertices"};
  int max_color = -1;
  for (int c : colors) {
    if (c < 0) return {false, "negative color"};
    max_color = std::max(max_color, c);
  }
  for (const auto& [u, v] : g.edges())
    if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)])
      return {false, "coloring is not proper"};
  if (max_color + 1 != count) return {false, "color count does not match the coloring"};
  return {true, "proper coloring with the claimed count"};
}

inline witness_check check_bin_solution_witness(const json& w) {
  const packing_instance inst = instance_from_json(w.at("instance"));
  const auto bins = w.at("bins").get<std::vector<std::vector<int>>>();
  if (w.at("count").get<int>() != static_cast<int>(bins.size()))
    return {false, "count does not match the number of bins"};
  const json& placements = w.at("placements");
  if (placements.size() != bins.size()) return {false, "one placement per bin required"};
  std::vector<char> seen(static_cast<std::size_t>(inst.box_count()), 0);
  for (std::size_t b = 0; b < bins.size(); ++b) {
    for (int v : bins[b]) {
      if (v < 0 || v >= inst.box_count()) return {false, "box index out of range"};
      if (seen[static_cast<std::size_t>(v)]) return {false, "bins are not disjoint"};
      seen[static_cast<std::size_t>(v)] = 1;
    }
    if (!verify_packing(inst.subset(bins[b]), placement_from_json(placements[b])))
      return {false, "bin " + std::to_string(b) + " does not pack"};
  }
  for (char c : seen)
    if (!c) return {false, "bins do not cover every box"};
  return {true, "bins form a verified solution"};
}

inline witness_check check_matching_witness(const json& w) {
  const set_family f = family_from_json(w.at("family"));
  induced_matching_t m;
  for (const auto& s : w.at("matching")) m.members.push_back(s.get<std::vector<int>>());
  if (auto err = induced_matching_error(f, m)) return {false, *err};
  return {true, "valid induced matching of size " + std::to_string(m.members.size())};
}

inline witness_check check_embedding_violation_witness(const json& w) {
  const set_family f = family_from_json(w.at("family"));
  const embedding emb = embedding_from_json(w.at("embedding"));
  const std::string direction = w.at("direction").get<std::string>();
  const std::vector<int> set = w.at("set").get<std::vector<int>>();
  if (direction == "not-downward-closed") {
    const std::vector<int> subset = w.at("subset").get<std::vector<int>>();
    if (!f.contains(set)) return {false, "claimed member is not in the family"};
    if (f.contains(subset)) return {false, "claimed missing subset is present"};
    std::vector<int> sorted_set = set, sorted_subset = subset;
    std::sort(sorted_set.begin(), sorted_set.end());
    std::sort(sorted_subset.begin(), sorted_subset.end());
    if (!std::includes(sorted_set.begin(), sorted_set.end(), sorted_subset.begin(),
                       sorted_subset.end()))
      return {false, "claimed subset is not a subset of the member"};
    return {true, "family is not downward closed as claimed"};
  }
  const bool member = f.contains(set);
  const bool fits = fits_exact(emb.instance_for(set)).has_value();
  if (direction == "member-does-not-fit") {
    if (!member) return {false, "claimed member is not in the family"};
    if (fits) return {false, "the member actually fits"};
    return {true, "member fails to fit as claimed"};
  }
  if (direction == "non-member-fits") {
    if (member) return {false, "claimed non-member is in the family"};
    if (!fits) return {false, "the non-member does not fit"};
    return {true, "non-member fits as claimed"};
  }
  return {false, "unknown direction '" + direction + "'"};
}

inline witness_check check_one_dim_violation_witness(const json& w) {
  const set_family f = family_from_json(w.at("family"));
  const embedding emb = embedding_from_json(w.at("embedding"));
  if (emb.dimension() != 1) return {false, "embedding is not 1-dimensional"};
  const std::string direction = w.at("direction").get<std::string>();
  std::vector<int> elements = w.at("elements").get<std::vector<int>>();
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    return {false, "witness elements are not distinct"};
  rational total(0);
  for (int e : elements) total += emb.of(e).side(0);
  const bool member = f.contains(elements);
  if (direction == "member-does-not-fit") {
    if (!member) return {false, "claimed member is not in the family"};
    if (total <= 1) return {false, "the member fits after all"};
    return {true, "member set exceeds unit length as claimed"};
  }
  if (direction == "non-member-fits") {
    if (member) return {false, "claimed non-member is in the family"};
    if (total > 1) return {false, "the non-member does not fit"};
    return {true, "non-member fits in unit length as claimed"};
  }
  return {false, "unknown direction '" + direction + "'"};
}

inline witness_check check_reduction_violation_witness(const json& w) {
  const graph g = graph_from_json(w.at("graph"));
  const reduction_params params(parse_rational(w.at("alpha").get<std::string>()));
  std::vector<int> subset = w.at("subset").get<std::vector<int>>();
  for (int& v : subset) --v;  // subsets are 1-indexed externally
  const bool clique = is_clique(g, subset);
  const bool fits = fits_exact(build_instance(g, params).subset(subset)).has_value();
  if (clique == fits) return {false, "clique status and fit status agree; no violation"};
  return {true, clique ? "clique does not fit" : "non-clique fits"};
}

inline witness_check check_family_hygiene_witness(const json& w) {
  const set_family f = family_from_json(w.at("family"));
  if (w.contains("member")) {
    const auto member = w.at("member").get<std::vector<int>>();
    const auto subset = w.at("missing_subset").get<std::vector<int>>();
    if (!f.contains(member)) return {false, "claimed member is not in the family"};
    if (f.contains(subset)) return {false, "claimed missing subset is present"};
    return {true, "downward-closure violation confirmed"};
  }
  if (w.contains("isolated")) {
    const auto claimed = w.at("isolated").get<std::vector<int>>();
    const auto actual = isolated_elements(f);
    for (int e : claimed)
      if (!std::binary_search(actual.begin(), actual.end(), e))
        return {false, "element " + std::to_string(e) + " is not isolated"};
    if (claimed.empty()) return {false, "no isolated elements claimed"};
    return {true, "isolated elements confirmed"};
  }
  return {false, "hygiene witness carries no claim"};
}

inline witness_check check_lemma_counterexample_witness(const json& w) {
  const std::string lemma = w.at("lemma").get<std::string>();
  if (lemma == "pair") {
    const box_dims u(rationals_from_json(w.at("u")));
    const box_dims v(rationals_from_json(w.at("v")));
    const bool criterion = pair_fit_coordinate(u, v).has_value();
    const bool exact = fits_exact(packing_instance(u.dimension(), {u, v})).has_value();
    if (criterion == exact) return {false, "pair criterion and exact fit agree; no counterexample"};
    return {true, "pair criterion disagrees with the exact fit"};
  }
  if (lemma == "triple") {
    const box_dims v1(rationals_from_json(w.at("v1")));
    const box_dims v2(rationals_from_json(w.at("v2")));
    const box_dims v3(rationals_from_json(w.at("v3")));
    const placement pl = triple_placement(v1, v2, v3, w.at("j12").get<int>(),
                                          w.at("j23").get<int>(), w.at("j31").get<int>());
    if (verify_packing(packing_instance(v1.dimension(), {v1, v2, v3}), pl))
      return {false, "triple placement verifies; no counterexample"};
    return {true, "triple placement fails verification"};
  }
  if (lemma == "single-coord") {
    const box_dims v1(rationals_from_json(w.at("v1")));
    const box_dims v2(rationals_from_json(w.at("v2")));
    const box_dims v3(rationals_from_json(w.at("v3")));
    const int j = w.at("j").get<int>();
    const bool stacked = triple_fit_single_coordinate(v1, v2, v3, j).has_value();
    const bool exact = fits_exact(packing_instance(v1.dimension(), {v1, v2, v3})).has_value();
    if (stacked == exact) return {false, "single-coordinate rule agrees with the exact fit"};
    return {true, "single-coordinate rule disagrees with the exact fit"};
  }
  if (lemma == "reduction") return check_reduction_violation_witness(w);
  if (lemma == "matching-bound") {
    const set_family f = family_from_json(w.at("family"));
    const family_profile profile = bounded_profile(f);
    const graph g = conflict_graph(f);
    const int kb = profile.max_set_size * profile.max_element_multiplicity;
    int max_degree = 0;
    for (int v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
    if (max_degree > kb * kb) return {true, "conflict degree exceeds (kB)^2"};
    const auto greedy = induced_matching(f, matching_mode::greedy);
    const int needed = (g.vertex_count() + kb * kb) / (kb * kb + 1);
    if (static_cast<int>(greedy.matching.members.size()) < needed)
      return {true, "greedy matching is smaller than the guaranteed bound"};
    return {false, "all matching bounds hold; no counterexample"};
  }
  return {false, "unknown lemma '" + lemma + "'"};
}

}  // namespace detail

// Validates that a witness object actually demonstrates what it claims.
// Accepts either a bare witness or a full report with a "witness" key.
inline witness_check check_witness(const json& doc) {
  const json& w = (doc.is_object() && doc.contains("witness") && doc["witness"].is_object())
                      ? doc["witness"]
                      : doc;
  if (!w.is_object() || !w.contains("kind"))
    throw std::invalid_argument("check_witness: no witness object with a 'kind' found");
  const std::string kind = w.at("kind").get<std::string>();
  if (kind == "packing") return detail::check_packing_witness(w);
  if (kind == "coloring") return detail::check_coloring_witness(w);
  if (kind == "bin-solution") return detail::check_bin_solution_witness(w);
  if (kind == "induced-matching") return detail::check_matching_witness(w);
  if (kind == "embedding-violation") return detail::check_embedding_violation_witness(w);
  if (kind == "one-dim-violation") return detail::check_one_dim_violation_witness(w);
  if (kind == "reduction-violation") return detail::check_reduction_violation_witness(w);
  if (kind == "family-hygiene") return detail::check_family_hygiene_witness(w);
  if (kind == "lemma-counterexample") return detail::check_lemma_counterexample_witness(w);
  throw std::invalid_argument("check_witness: unknown witness kind '" + kind + "'");
}

}  // namespace gbp
