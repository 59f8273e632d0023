#include <catch2/catch_amalgamated.hpp>

#include "gbp/sampling.hpp"
#include "gbp/setfamily.hpp"

using namespace gbp;

namespace {

set_family fam(int universe, std::vector<std::vector<int>> sets) {
  return set_family(universe, std::move(sets));
}

}  // namespace

TEST_CASE("set_family construction canonicalizes") {
  const set_family f = fam(3, {{2, 0}, {0, 2}, {1}, {}});
  CHECK(f.set_count() == 3);  // duplicate {0,2} removed
  CHECK(f.sets() == std::vector<std::vector<int>>{{}, {1}, {0, 2}});
  CHECK(f.contains(std::vector<int>{2, 0}));
  CHECK_FALSE(f.contains(std::vector<int>{0, 1}));

  CHECK_THROWS_AS(fam(2, {{0, 0}}), std::invalid_argument);  // duplicate element
  CHECK_THROWS_AS(fam(2, {{2}}), std::invalid_argument);     // out of range
  CHECK_THROWS_AS(fam(0, {}), std::invalid_argument);
}

TEST_CASE("downward closure detection") {
  CHECK(is_downward_closed(fam(2, {{}, {0}})));
  const auto w = downward_closure_violation(fam(2, {{0, 1}}));
  REQUIRE(w.has_value());
  CHECK(w->member == std::vector<int>{0, 1});
  CHECK(w->missing_subset.size() == 1);
  CHECK(is_downward_closed(lines_system(2)));
}

TEST_CASE("isolated elements") {
  // closure of {{a,b}} over a 3-element universe leaves c isolated
  const set_family f = downward_closure(fam(3, {{0, 1}}));
  CHECK(isolated_elements(f) == std::vector<int>{2});
  CHECK(isolated_elements(lines_system(2)).empty());
  const set_family singles = fam(3, {{0}, {1}, {2}});
  CHECK(isolated_elements(singles) == std::vector<int>{0, 1, 2});
}

TEST_CASE("downward_closure") {
  const set_family f = downward_closure(fam(2, {{0, 1}}));
  CHECK(f.sets() == std::vector<std::vector<int>>{{}, {0}, {1}, {0, 1}});
  CHECK(downward_closure(f) == f);  // idempotent

  const set_family two_pairs = downward_closure(fam(4, {{0, 1}, {2, 3}}));
  CHECK(two_pairs.set_count() == 7);

  budget tiny(2);
  CHECK_THROWS_AS(downward_closure(fam(4, {{0, 1, 2, 3}}), tiny), budget_exceeded);
}

TEST_CASE("lines_system counts") {
  const set_family l1 = lines_system(1);
  CHECK(l1.universe_size() == 3);
  CHECK(l1.set_count() == 8);  // every subset of a 3-set; the only line is the whole space

  const set_family l2 = lines_system(2);
  CHECK(l2.universe_size() == 9);
  CHECK(l2.set_count() == 58);  // 1 + 9 + 36 + 12
  int line_count = 0;
  for (const auto& s : l2.sets())
    if (s.size() == 3) ++line_count;
  CHECK(line_count == 12);

  CHECK_THROWS_AS(lines_system(0), std::invalid_argument);
  CHECK_THROWS_AS(lines_system(7), budget_exceeded);
}

TEST_CASE("every pair of elements lies in exactly one line") {
  for (int n = 1; n <= 3; ++n) {
    const set_family f = lines_system(n);
    std::vector<std::vector<int>> lines;
    for (const auto& s : f.sets())
      if (s.size() == 3) lines.push_back(s);
    for (int a = 0; a < f.universe_size(); ++a)
      for (int b = a + 1; b < f.universe_size(); ++b) {
        int containing = 0;
        for (const auto& line : lines)
          if (std::binary_search(line.begin(), line.end(), a) &&
              std::binary_search(line.begin(), line.end(), b))
            ++containing;
        REQUIRE(containing == 1);
      }
  }
}

TEST_CASE("f3 encoding round trip") {
  for (int id = 0; id < 27; ++id) CHECK(f3_encode(f3_decode(id, 3)) == id);
  // (1,2) + (2,2) = (0,1) coordinatewise mod 3
  CHECK(f3_combine(f3_encode(std::vector<int>{1, 2}), f3_encode(std::vector<int>{2, 2}), 1, 2) ==
        f3_encode(std::vector<int>{0, 1}));
}

TEST_CASE("bounded_profile") {
  // lines_system(1): element 0 lies in {0}, {0,1}, {0,2}, {0,1,2}
  const family_profile l1 = bounded_profile(lines_system(1));
  CHECK(l1.max_set_size == 3);
  CHECK(l1.max_element_multiplicity == 4);

  const set_family pairs = downward_closure(fam(10, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}}));
  const family_profile p = bounded_profile(pairs);
  CHECK(p.max_set_size == 2);
  CHECK(p.max_element_multiplicity == 2);  // one singleton plus one pair per element

  const family_profile empty = bounded_profile(fam(1, {}));
  CHECK(empty.max_set_size == 0);
  CHECK(empty.max_element_multiplicity == 0);
}

TEST_CASE("conflict_graph") {
  // two far-apart pairs: no member meets both
  const set_family apart = downward_closure(fam(4, {{0, 1}, {2, 3}}));
  const graph g1 = conflict_graph(apart);
  CHECK(g1.vertex_count() == 2);
  CHECK(g1.edge_count() == 0);

  // sharing an element: {a,b} itself meets both {a,b} and {b,c}
  const set_family chain = downward_closure(fam(3, {{0, 1}, {1, 2}}));
  const graph g2 = conflict_graph(chain);
  CHECK(g2.vertex_count() == 2);
  CHECK(g2.edge_count() == 1);

  // lines system: every two cardinality>=2 members are linked by a pair
  const graph g3 = conflict_graph(lines_system(2));
  CHECK(g3.vertex_count() == 48);  // 36 pairs + 12 lines
  CHECK(g3.edge_count() == 48 * 47 / 2);
}

TEST_CASE("induced matchings") {
  const set_family apart = downward_closure(fam(4, {{0, 1}, {2, 3}}));
  CHECK(induced_matching(apart, matching_mode::greedy).matching.members.size() == 2);
  CHECK(induced_matching(apart, matching_mode::exact).matching.members.size() == 2);

  CHECK(induced_matching(lines_system(2), matching_mode::greedy).matching.members.size() == 1);

  std::vector<std::vector<int>> five_pairs;
  for (int i = 0; i < 5; ++i) five_pairs.push_back({2 * i, 2 * i + 1});
  const set_family disjoint5 = downward_closure(fam(10, five_pairs));
  CHECK(induced_matching(disjoint5, matching_mode::exact).matching.members.size() == 5);

  // all subsets of a 3-set: any two cardinality>=2 members intersect
  const set_family all3 = downward_closure(fam(3, {{0, 1, 2}}));
  CHECK(induced_matching(all3, matching_mode::exact).matching.members.size() == 1);
}

TEST_CASE("matching validator catches bad matchings") {
  const set_family chain = downward_closure(fam(3, {{0, 1}, {1, 2}}));
  CHECK_FALSE(induced_matching_error(chain, {{{0, 1}}}).has_value());
  CHECK(induced_matching_error(chain, {{{0, 1}, {1, 2}}}).has_value());   // not disjoint
  CHECK(induced_matching_error(chain, {{{0}, {1, 2}}}).has_value());     // cardinality < 2
  CHECK(induced_matching_error(chain, {{{0, 2}}}).has_value());          // not a member
  const set_family square = downward_closure(fam(4, {{0, 1}, {2, 3}, {1, 2}}));
  // {1,2} meets both chosen members
  CHECK(induced_matching_error(square, {{{0, 1}, {2, 3}}}).has_value());
}

TEST_CASE("gpd lower bound") {
  std::vector<std::vector<int>> five_pairs;
  for (int i = 0; i < 5; ++i) five_pairs.push_back({2 * i, 2 * i + 1});
  const gpd_bound_report five = gpd_lower_bound(downward_closure(fam(10, five_pairs)));
  CHECK(five.bound == 5);
  CHECK(five.warnings.empty());

  CHECK(gpd_lower_bound(lines_system(2)).bound == 1);
  CHECK(gpd_lower_bound(downward_closure(fam(3, {{0, 1, 2}}))).bound == 1);

  // hygiene warnings
  CHECK_FALSE(gpd_lower_bound(fam(2, {{0, 1}})).warnings.empty());          // not closed
  CHECK_FALSE(gpd_lower_bound(downward_closure(fam(3, {{0, 1}}))).warnings.empty());  // isolated
}

TEST_CASE("conflict degree and greedy matching bounds on random bounded families") {
  rng_t rng(8080);
  for (int trial = 0; trial < 10; ++trial) {
    const set_family f = random_bounded_family(rng, 30);
    REQUIRE(is_downward_closed(f));
    REQUIRE(isolated_elements(f).empty());
    const family_profile profile = bounded_profile(f);
    REQUIRE(profile.max_set_size <= 3);
    REQUIRE(profile.max_element_multiplicity <= 3);

    const graph g = conflict_graph(f);
    const int kb = profile.max_set_size * profile.max_element_multiplicity;
    int max_degree = 0;
    for (int v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
    CHECK(max_degree <= kb * kb);

    const auto greedy = induced_matching(f, matching_mode::greedy);
    CHECK_FALSE(induced_matching_error(f, greedy.matching).has_value());
    const int v_count = g.vertex_count();
    CHECK(static_cast<int>(greedy.matching.members.size()) >=
          (v_count + max_degree) / (max_degree + 1));

    // gpd bound of the whole-family route
    const gpd_bound_report bound = gpd_lower_bound(f);
    const int active = f.universe_size() - static_cast<int>(isolated_elements(f).size());
    const int k = profile.max_set_size, b = profile.max_element_multiplicity;
    const int denom = k * (k * k * b * b + 1);
    CHECK(bound.bound >= (active + denom - 1) / denom);
  }
}
