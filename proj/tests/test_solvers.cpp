#include <catch2/catch_amalgamated.hpp>

#include "gbp/reduction.hpp"
#include "gbp/sampling.hpp"
#include "gbp/solvers.hpp"
#include "oracles.hpp"

using namespace gbp;

namespace {

graph path3() { return graph(3, {{0, 1}, {1, 2}}); }
graph triangle() { return graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
graph cycle5() { return graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }
graph k(int n) {
  graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

reduction_params alpha20() { return reduction_params(parse_rational("1/20")); }

box_dims box(std::initializer_list<const char*> sides) {
  std::vector<rational> v;
  for (const char* s : sides) v.push_back(parse_rational(s));
  return box_dims(std::move(v));
}

void check_coloring(const graph& g, const coloring& c) {
  REQUIRE(static_cast<int>(c.colors.size()) == g.vertex_count());
  int max_color = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    CHECK(c.colors[static_cast<std::size_t>(v)] >= 0);
    max_color = std::max(max_color, c.colors[static_cast<std::size_t>(v)]);
  }
  CHECK(max_color + 1 == c.color_count);
  CHECK(oracles::proper_coloring(g, c.colors));
}

std::vector<std::vector<int>> config_sets(const std::vector<configuration>& configs) {
  std::vector<std::vector<int>> out;
  for (const auto& c : configs) out.push_back(c.boxes);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("chromatic number basics") {
  CHECK(chromatic_number(graph(4)).color_count == 1);
  CHECK(chromatic_number(k(4)).color_count == 4);
  // odd cycle: no 2-coloring exists, 3 suffice
  CHECK(chromatic_number(cycle5()).color_count == 3);
  CHECK(chromatic_number(graph(0)).color_count == 0);
}

TEST_CASE("chromatic number matches the assignment-enumeration oracle") {
  for (const graph& g : oracles::all_graphs_on(4)) {
    const coloring c = chromatic_number(g);
    CHECK(c.color_count == oracles::brute_force_chromatic(g));
    check_coloring(g, c);
  }
  rng_t rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const graph g = random_graph(rng, 6);
    const coloring c = chromatic_number(g);
    CHECK(c.color_count == oracles::brute_force_chromatic(g));
    check_coloring(g, c);
  }
}

TEST_CASE("configurations of reduced instances are the maximal cliques") {
  const auto p3_configs = config_sets(enumerate_configurations(build_instance(path3(), alpha20())));
  CHECK(p3_configs == std::vector<std::vector<int>>{{0, 1}, {1, 2}});

  const auto k3_configs = config_sets(enumerate_configurations(build_instance(triangle(), alpha20())));
  CHECK(k3_configs == std::vector<std::vector<int>>{{0, 1, 2}});

  // set equality against the independent clique enumerator, over all
  // 4-vertex graphs and a few random 6-vertex ones
  auto check_graph = [](const graph& g) {
    const auto configs = config_sets(enumerate_configurations(build_instance(g, alpha20())));
    const auto cliques = oracles::inclusion_maximal(oracles::brute_force_cliques(g));
    auto sorted = cliques;
    std::sort(sorted.begin(), sorted.end());
    // an edgeless vertex set still has singleton configurations
    std::vector<std::vector<int>> expected = sorted;
    if (expected.empty())
      for (int v = 0; v < g.vertex_count(); ++v) expected.push_back({v});
    CHECK(configs == expected);
  };
  for (const graph& g : oracles::all_graphs_on(4)) check_graph(g);
  rng_t rng(77);
  for (int trial = 0; trial < 10; ++trial) check_graph(random_graph(rng, 6));
}

TEST_CASE("configuration witnesses verify") {
  const packing_instance inst = build_instance(cycle5(), alpha20());
  for (const auto& cfg : enumerate_configurations(inst)) {
    CHECK(verify_packing(inst.subset(cfg.boxes), cfg.witness));
  }
}

TEST_CASE("configurations of an instance with only singleton fits") {
  const packing_instance inst(2, {box({"3/4", "3/4"}), box({"3/4", "3/4"})});
  CHECK(config_sets(enumerate_configurations(inst)) ==
        std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("min_bins_exact on reduced instances equals the complement chromatic number") {
  CHECK(min_bins_exact(build_instance(path3(), alpha20())).bin_count == 2);
  CHECK(min_bins_exact(build_instance(triangle(), alpha20())).bin_count == 1);
  CHECK(min_bins_exact(build_instance(cycle5(), alpha20())).bin_count == 3);
  CHECK(chromatic_number(complement(path3())).color_count == 2);
  CHECK(chromatic_number(complement(cycle5())).color_count == 3);
}

TEST_CASE("min_bins_exact matches the partition oracle") {
  for (const graph& g : oracles::all_graphs_on(3)) {
    const packing_instance inst = build_instance(g, alpha20());
    CHECK(min_bins_exact(inst).bin_count == oracles::brute_force_min_bins(inst));
  }
  rng_t rng(5150);
  for (int trial = 0; trial < 15; ++trial) {
    const packing_instance inst = random_grid_instance(rng, 4, 3, 4);
    CHECK(min_bins_exact(inst).bin_count == oracles::brute_force_min_bins(inst));
  }
}

TEST_CASE("min_bins solutions are disjoint covers with verifying witnesses") {
  rng_t rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const packing_instance inst = random_grid_instance(rng, 5, 2, 4);
    const bin_result result = min_bins_exact(inst);
    std::vector<char> seen(static_cast<std::size_t>(inst.box_count()), 0);
    for (const auto& bin : result.bins) {
      CHECK_FALSE(bin.boxes.empty());
      for (int v : bin.boxes) {
        CHECK_FALSE(seen[static_cast<std::size_t>(v)]);
        seen[static_cast<std::size_t>(v)] = 1;
      }
      CHECK(verify_packing(inst.subset(bin.boxes), bin.witness));
    }
    for (char c : seen) CHECK(c);
    CHECK(result.bin_count == static_cast<int>(result.bins.size()));
  }
}

TEST_CASE("min_bins_exact of the empty instance") {
  CHECK(min_bins_exact(packing_instance(2, {})).bin_count == 0);
}

TEST_CASE("first_fit basics") {
  CHECK(first_fit_bins(build_instance(triangle(), alpha20())).bin_count == 1);
  CHECK(first_fit_bins(packing_instance(1, {})).bin_count == 0);

  // order (0, 2, 1) on reduce(P3): 0 and 2 are non-adjacent and open two
  // bins; box 1 then joins the first bin, matching the optimum of 2
  const packing_instance p3 = build_instance(path3(), alpha20());
  const std::vector<int> order{0, 2, 1};
  const bin_result ff = first_fit_bins(p3, order);
  CHECK(ff.bin_count == 2);
  CHECK(ff.bins[0].boxes == std::vector<int>{0, 1});
  CHECK(ff.bins[1].boxes == std::vector<int>{2});

  CHECK_THROWS_AS(first_fit_bins(p3, std::vector<int>{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(first_fit_bins(p3, std::vector<int>{0, 1, 1}), std::invalid_argument);
}

TEST_CASE("first_fit never beats the optimum") {
  rng_t rng(4711);
  for (int trial = 0; trial < 15; ++trial) {
    const packing_instance inst = random_grid_instance(rng, 5, 2, 4);
    const int best = min_bins_exact(inst).bin_count;
    CHECK(first_fit_bins(inst).bin_count >= best);
    const auto by_volume = decreasing_volume_order(inst);
    CHECK(first_fit_bins(inst, by_volume).bin_count >= best);
  }
}

TEST_CASE("first_fit equals the optimum on single-configuration instances") {
  const packing_instance k4 = build_instance(k(4), alpha20());
  CHECK(first_fit_bins(k4).bin_count == 1);
}

TEST_CASE("decreasing volume order") {
  const packing_instance inst(1, {box({"1/4"}), box({"1"}), box({"1/2"}), box({"1/4"})});
  CHECK(decreasing_volume_order(inst) == std::vector<int>{1, 2, 0, 3});
}
