#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "gbp/budget.hpp"
#include "gbp/graph.hpp"

namespace gbp {

namespace detail {

// Canonical order for family members: by cardinality, then lexicographic.
struct set_order {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

}  // namespace detail

// Finite family of subsets of {0, ..., universe_size-1}; members stored
// sorted, deduplicated, in canonical (size, lexicographic) order.
class set_family {
 public:
  set_family(int universe_size, std::vector<std::vector<int>> sets) : universe_(universe_size) {
    if (universe_ < 1) throw std::invalid_argument("set_family: universe size must be positive");
    for (auto& s : sets) {
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("set_family: duplicate element inside a set");
      if (!s.empty() && (s.front() < 0 || s.back() >= universe_))
        throw std::invalid_argument("set_family: element out of universe range");
    }
    std::sort(sets.begin(), sets.end(), detail::set_order{});
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    sets_ = std::move(sets);
  }

  int universe_size() const { return universe_; }
  int set_count() const { return static_cast<int>(sets_.size()); }
  const std::vector<std::vector<int>>& sets() const { return sets_; }

  // Membership; the argument may be unsorted.
  bool contains(std::span<const int> s) const {
    std::vector<int> key(s.begin(), s.end());
    std::sort(key.begin(), key.end());
    return std::binary_search(sets_.begin(), sets_.end(), key, detail::set_order{});
  }

  friend bool operator==(const set_family& a, const set_family& b) {
    return a.universe_ == b.universe_ && a.sets_ == b.sets_;
  }

 private:
  int universe_;
  std::vector<std::vector<int>> sets_;
};

struct closure_witness {
  std::vector<int> member;
  std::vector<int> missing_subset;
};

// A family is downward closed iff it is closed under removing one element
// (induction gives every subset), so one-removal witnesses suffice.
inline std::optional<closure_witness> downward_closure_violation(const set_family& f) {
  for (const auto& s : f.sets()) {
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<int> t;
      t.reserve(s.size() - 1);
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) t.push_back(s[i]);
      if (!f.contains(t)) return closure_witness{s, t};
    }
  }
  return std::nullopt;
}

inline bool is_downward_closed(const set_family& f) {
  return !downward_closure_violation(f).has_value();
}

// Elements contained in no member of cardinality >= 2.
inline std::vector<int> isolated_elements(const set_family& f) {
  std::vector<char> covered(static_cast<std::size_t>(f.universe_size()), 0);
  for (const auto& s : f.sets())
    if (s.size() >= 2)
      for (int e : s) covered[static_cast<std::size_t>(e)] = 1;
  std::vector<int> out;
  for (int e = 0; e < f.universe_size(); ++e)
    if (!covered[static_cast<std::size_t>(e)]) out.push_back(e);
  return out;
}

// Smallest downward-closed family containing f (always includes the empty
// set). The budget caps the output size.
inline set_family downward_closure(const set_family& f, budget& work) {
  std::set<std::vector<int>, detail::set_order> closed;
  closed.insert({});
  std::vector<std::vector<int>> queue(f.sets());
  for (const auto& s : queue)
    if (closed.insert(s).second) work.charge();
  while (!queue.empty()) {
    const std::vector<int> s = std::move(queue.back());
    queue.pop_back();
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<int> t;
      t.reserve(s.size() - 1);
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) t.push_back(s[i]);
      if (closed.insert(t).second) {
        work.charge();
        queue.push_back(std::move(t));
      }
    }
  }
  return set_family(f.universe_size(),
                    std::vector<std::vector<int>>(closed.begin(), closed.end()));
}

inline set_family downward_closure(const set_family& f) {
  budget work;
  return downward_closure(f, work);
}

// --- lines over F_3^n ------------------------------------------------------

// Elements of F_3^n are encoded base 3, most significant coordinate first.
inline std::vector<int> f3_decode(int id, int n) {
  std::vector<int> coords(static_cast<std::size_t>(n));
  for (int t = n - 1; t >= 0; --t) {
    coords[static_cast<std::size_t>(t)] = id % 3;
    id /= 3;
  }
  return coords;
}

inline int f3_encode(std::span<const int> coords) {
  int id = 0;
  for (int c : coords) id = id * 3 + c;
  return id;
}

// Coordinatewise a + m*b mod 3 on encoded elements.
inline int f3_combine(int a, int b, int m, int n) {
  const auto va = f3_decode(a, n);
  const auto vb = f3_decode(b, n);
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t)
    out[static_cast<std::size_t>(t)] = ((va[static_cast<std::size_t>(t)] + m * vb[static_cast<std::size_t>(t)]) % 3 + 3) % 3;
  return f3_encode(out);
}

// The lines family on F_3^n: all subsets of size <= 2 plus every line
// {u, u+v, u+2v}, v != 0. Any two distinct elements lie in exactly one
// line (the triples summing to zero coordinatewise).
inline set_family lines_system(int n) {
  if (n < 1) throw std::invalid_argument("lines_system: n must be at least 1");
  long universe = 1;
  for (int i = 0; i < n; ++i) universe *= 3;
  if (universe > 729)
    throw budget_exceeded("lines_system: universe 3^" + std::to_string(n) + " exceeds the supported size");
  const int u = static_cast<int>(universe);

  std::vector<std::vector<int>> sets;
  sets.push_back({});
  for (int a = 0; a < u; ++a) sets.push_back({a});
  for (int a = 0; a < u; ++a)
    for (int b = a + 1; b < u; ++b) sets.push_back({a, b});
  for (int a = 0; a < u; ++a)
    for (int v = 1; v < u; ++v) {
      std::vector<int> line{a, f3_combine(a, v, 1, n), f3_combine(a, v, 2, n)};
      std::sort(line.begin(), line.end());
      sets.push_back(std::move(line));
    }
  return set_family(u, std::move(sets));  // constructor deduplicates
}

// --- profiles, conflicts, matchings ----------------------------------------

struct family_profile {
  int max_set_size = 0;            // k, witnessed by k_witness
  int max_element_multiplicity = 0;  // B: sets containing the busiest element
  std::vector<int> k_witness;
  int b_witness_element = -1;
};

// Tight (k, B) profile by enumeration.
inline family_profile bounded_profile(const set_family& f) {
  family_profile out;
  for (const auto& s : f.sets())
    if (static_cast<int>(s.size()) > out.max_set_size) {
      out.max_set_size = static_cast<int>(s.size());
      out.k_witness = s;
    }
  std::vector<int> multiplicity(static_cast<std::size_t>(f.universe_size()), 0);
  for (const auto& s : f.sets())
    for (int e : s) ++multiplicity[static_cast<std::size_t>(e)];
  for (int e = 0; e < f.universe_size(); ++e)
    if (multiplicity[static_cast<std::size_t>(e)] > out.max_element_multiplicity) {
      out.max_element_multiplicity = multiplicity[static_cast<std::size_t>(e)];
      out.b_witness_element = e;
    }
  return out;
}

// Vertices are the members of cardinality >= 2 (in canonical family
// order); two are adjacent iff some member intersects both. Independent
// sets of this graph are exactly the induced matchings of the family.
inline graph conflict_graph(const set_family& f) {
  std::vector<const std::vector<int>*> vertices;
  std::vector<int> vertex_of_set;  // index into vertices per family set, -1 if size < 2
  vertex_of_set.reserve(f.sets().size());
  for (const auto& s : f.sets()) {
    if (s.size() >= 2) {
      vertex_of_set.push_back(static_cast<int>(vertices.size()));
      vertices.push_back(&s);
    } else {
      vertex_of_set.push_back(-1);
    }
  }

  // element -> vertices whose set contains it
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(f.universe_size()));
  for (std::size_t v = 0; v < vertices.size(); ++v)
    for (int e : *vertices[v]) incident[static_cast<std::size_t>(e)].push_back(static_cast<int>(v));

  graph g(static_cast<int>(vertices.size()));
  std::vector<int> touched;
  for (const auto& s : f.sets()) {
    if (s.empty()) continue;
    touched.clear();
    for (int e : s)
      for (int v : incident[static_cast<std::size_t>(e)]) touched.push_back(v);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::size_t a = 0; a < touched.size(); ++a)
      for (std::size_t b = a + 1; b < touched.size(); ++b)
        g.add_edge(touched[a], touched[b]);
  }
  return g;
}

// Members of the family forming the matching; see the validator below for
// the exact guarantees.
struct induced_matching_t {
  std::vector<std::vector<int>> members;
};

// Checks the induced-matching contract: members of the family, each of
// cardinality >= 2, pairwise disjoint, and no member of the family
// intersects two of them. Returns an explanation on failure.
inline std::optional<std::string> induced_matching_error(const set_family& f,
                                                         const induced_matching_t& m) {
  for (const auto& s : m.members) {
    if (s.size() < 2) return "matching member has cardinality < 2";
    if (!f.contains(s)) return "matching member is not in the family";
  }
  std::vector<char> used(static_cast<std::size_t>(f.universe_size()), 0);
  for (const auto& s : m.members)
    for (int e : s) {
      if (used[static_cast<std::size_t>(e)]) return "matching members are not pairwise disjoint";
      used[static_cast<std::size_t>(e)] = 1;
    }
  // membership index per matching member
  std::vector<int> owner(static_cast<std::size_t>(f.universe_size()), -1);
  for (std::size_t i = 0; i < m.members.size(); ++i)
    for (int e : m.members[i]) owner[static_cast<std::size_t>(e)] = static_cast<int>(i);
  for (const auto& s : f.sets()) {
    int first = -1;
    for (int e : s) {
      const int o = owner[static_cast<std::size_t>(e)];
      if (o < 0) continue;
      if (first == -1) first = o;
      else if (o != first) return "a family member intersects two matching members";
    }
  }
  return std::nullopt;
}

enum class matching_mode { greedy, exact };

struct matching_result {
  induced_matching_t matching;
  bool exact = false;  // true when the exact search completed
};

namespace detail {

// Max independent set, branch and bound with a popcount bound. Vertex
// count is capped by the caller; the budget aborts long runs.
struct mis_search {
  const graph& g;
  budget& work;
  std::vector<int> current, best;

  void run(std::vector<int>& alive) {
    work.charge();
    if (current.size() + alive.size() <= best.size()) return;
    if (alive.empty()) {
      best = current;
      return;
    }
    // branch on the highest-degree alive vertex
    int pick = alive[0], pick_deg = -1;
    for (int v : alive) {
      int deg = 0;
      for (int u : alive)
        if (g.has_edge(u, v)) ++deg;
      if (deg > pick_deg) {
        pick = v;
        pick_deg = deg;
      }
    }
    // include
    std::vector<int> next;
    for (int v : alive)
      if (v != pick && !g.has_edge(v, pick)) next.push_back(v);
    current.push_back(pick);
    run(next);
    current.pop_back();
    // exclude
    next.clear();
    for (int v : alive)
      if (v != pick) next.push_back(v);
    run(next);
  }
};

}  // namespace detail

// Independent set of the conflict graph, returned as a validated induced
// matching. Greedy mode scans vertices by ascending conflict degree (ties
// by set lexicographic order) and returns a maximal independent set, so
// its size is at least |V| / (max degree + 1). Exact mode runs branch and
// bound and falls back to the greedy result if the budget runs out.
inline matching_result induced_matching(const set_family& f, matching_mode mode, budget& work) {
  const graph g = conflict_graph(f);
  std::vector<const std::vector<int>*> vertex_sets;
  for (const auto& s : f.sets())
    if (s.size() >= 2) vertex_sets.push_back(&s);

  std::vector<int> order(vertex_sets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
    return *vertex_sets[static_cast<std::size_t>(a)] < *vertex_sets[static_cast<std::size_t>(b)];
  });

  std::vector<int> greedy;
  for (int v : order) {
    bool ok = true;
    for (int u : greedy)
      if (g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (ok) greedy.push_back(v);
  }

  std::vector<int> chosen = greedy;
  bool exact_done = false;
  if (mode == matching_mode::exact) {
    try {
      detail::mis_search search{g, work, {}, greedy};
      std::vector<int> alive(vertex_sets.size());
      for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);
      search.run(alive);
      chosen = search.best;
      exact_done = true;
    } catch (const budget_exceeded&) {
      chosen = greedy;  // budget ran out; report the greedy matching
    }
  }

  matching_result out;
  std::sort(chosen.begin(), chosen.end());
  for (int v : chosen) out.matching.members.push_back(*vertex_sets[static_cast<std::size_t>(v)]);
  out.exact = exact_done;
  if (auto err = induced_matching_error(f, out.matching))
    throw std::logic_error("induced_matching: invalid matching produced: " + *err);
  return out;
}

inline matching_result induced_matching(const set_family& f, matching_mode mode) {
  budget work;
  return induced_matching(f, mode, work);
}

struct gpd_bound_report {
  int bound = 0;  // gpd(f) >= bound, or gpd(f) is infinite
  induced_matching_t matching;
  bool exact = false;
  std::vector<std::string> warnings;
};

// Matching-based lower bound: an induced matching of size k forces
// gpd >= k (or infinite). Exact matching search when the conflict graph is
// small, greedy otherwise.
inline gpd_bound_report gpd_lower_bound(const set_family& f, budget& work) {
  gpd_bound_report out;
  if (auto w = downward_closure_violation(f))
    out.warnings.push_back("family is not downward closed; the bound applies to its downward closure semantics only");
  if (!isolated_elements(f).empty())
    out.warnings.push_back("family has isolated elements");
  const graph g = conflict_graph(f);
  const matching_mode mode =
      g.vertex_count() <= 25 ? matching_mode::exact : matching_mode::greedy;
  matching_result m = induced_matching(f, mode, work);
  out.bound = static_cast<int>(m.matching.members.size());
  out.matching = std::move(m.matching);
  out.exact = m.exact;
  return out;
}

inline gpd_bound_report gpd_lower_bound(const set_family& f) {
  budget work;
  return gpd_lower_bound(f, work);
}

}  // namespace gbp
