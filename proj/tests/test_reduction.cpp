#include <catch2/catch_amalgamated.hpp>

#include "gbp/reduction.hpp"
#include "oracles.hpp"

using namespace gbp;

namespace {

graph path3() { return graph(3, {{0, 1}, {1, 2}}); }
graph triangle() { return graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
graph cycle5() { return graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

reduction_params alpha20() { return reduction_params(parse_rational("1/20")); }

std::vector<rational> rats(std::initializer_list<const char*> vals) {
  std::vector<rational> v;
  for (const char* s : vals) v.push_back(parse_rational(s));
  return v;
}

}  // namespace

TEST_CASE("alpha range") {
  CHECK_THROWS_AS(reduction_params(parse_rational("0")), std::invalid_argument);
  CHECK_THROWS_AS(reduction_params(parse_rational("-1/20")), std::invalid_argument);
  CHECK_THROWS_AS(reduction_params(parse_rational("11/100")), std::invalid_argument);
  CHECK_NOTHROW(reduction_params(parse_rational("1/10")));  // boundary admitted
}

TEST_CASE("build_instance box values") {
  const packing_instance k3 = build_instance(triangle(), alpha20());
  REQUIRE(k3.dimension() == 3);
  REQUIRE(k3.box_count() == 3);
  CHECK(k3.box(0).sides() == rats({"1/20", "11/20", "11/20"}));
  CHECK(k3.box(1).sides() == rats({"11/20", "1/20", "11/20"}));
  CHECK(k3.box(2).sides() == rats({"11/20", "11/20", "1/20"}));

  const packing_instance single = build_instance(graph(1), alpha20());
  CHECK(single.dimension() == 1);
  CHECK(single.box(0).sides() == rats({"1/20"}));

  const packing_instance p3 = build_instance(path3(), alpha20());
  CHECK(p3.box(0).sides() == rats({"1/20", "11/20", "1"}));
  CHECK(p3.box(2).sides() == rats({"1", "11/20", "1/20"}));
  // non-adjacent pair: every coordinate sum exceeds 1
  CHECK_FALSE(pair_fit_coordinate(p3.box(0), p3.box(2)).has_value());
}

TEST_CASE("reduced instances fit exactly on cliques") {
  const packing_instance k3 = build_instance(triangle(), alpha20());
  CHECK(fits_exact(k3).has_value());

  const packing_instance p3 = build_instance(path3(), alpha20());
  const std::vector<int> ends{0, 2};
  CHECK_FALSE(fits_exact(p3.subset(ends)).has_value());
  // the grid oracle agrees (all sides are multiples of 1/20)
  CHECK_FALSE(fits_grid_oracle(p3.subset(ends), 20).has_value());
  CHECK(fits_grid_oracle(p3.subset(std::vector<int>{0, 1}), 20).has_value());
}

TEST_CASE("clique_placement matches the diagonal certificate") {
  const std::vector<int> all{0, 1, 2};
  const placement pl = clique_placement(triangle(), all, alpha20());
  CHECK(pl.positions[0] == rats({"3/5", "0", "0"}));
  CHECK(pl.positions[1] == rats({"0", "3/5", "0"}));
  CHECK(pl.positions[2] == rats({"0", "0", "3/5"}));
  CHECK(verify_packing(build_instance(triangle(), alpha20()), pl));

  // singleton cliques still use the diagonal form
  const placement one = clique_placement(path3(), std::vector<int>{1}, alpha20());
  CHECK(one.positions[0] == rats({"0", "3/5", "0"}));

  CHECK_THROWS_AS(clique_placement(path3(), std::vector<int>{0, 2}, alpha20()),
                  std::invalid_argument);
}

TEST_CASE("clique placements verify at the boundary alpha") {
  // alpha = 1/10 puts the neighbour side at exactly 3/5; half-open boxes
  // make the touching placement legal
  const reduction_params boundary(parse_rational("1/10"));
  const graph c5 = cycle5();
  const placement pl = clique_placement(c5, std::vector<int>{0, 1}, boundary);
  CHECK(verify_packing(build_instance(c5, boundary).subset(std::vector<int>{0, 1}), pl));
}

TEST_CASE("verify_reduction_property on all 3-vertex graphs") {
  budget work;
  for (const graph& g : oracles::all_graphs_on(3)) {
    const reduction_report report = verify_reduction_property(g, alpha20(), work);
    CHECK(report.pass);
    CHECK(report.subsets_checked == 8);
  }
}

TEST_CASE("verify_reduction_property on K5 and boundary C5") {
  budget work;
  graph k5(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) k5.add_edge(u, v);
  CHECK(verify_reduction_property(k5, alpha20(), work).pass);
  CHECK(verify_reduction_property(cycle5(), reduction_params(parse_rational("1/10")), work).pass);
}

TEST_CASE("reduction pair criterion, both directions") {
  // adjacent => some separating coordinate; non-adjacent => none
  for (const graph& g : oracles::all_graphs_on(4)) {
    const packing_instance inst = build_instance(g, alpha20());
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) {
        const auto coord = pair_fit_coordinate(inst.box(u), inst.box(v));
        CHECK(coord.has_value() == g.has_edge(u, v));
      }
  }
}
