#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "treepeak/matching.hpp"

using namespace treepeak;

TEST_CASE("matching basics") {
  auto full = max_bipartite_matching(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(full.size() == 2);
  auto shared = max_bipartite_matching(2, 1, {{0, 0}, {1, 0}});
  CHECK(shared.size() == 1);
  CHECK(max_bipartite_matching(3, 3, {}).empty());
  CHECK_THROWS_AS(max_bipartite_matching(2, 2, {{0, 5}}), Error);
}

TEST_CASE("matching equals exhaustive maximum") {
  std::mt19937_64 rng(101);
  for (int round = 0; round < 60; ++round) {
    int left = 1 + static_cast<int>(oracles::bounded(rng, 8));
    int right = 1 + static_cast<int>(oracles::bounded(rng, 8));
    std::vector<std::pair<int, int>> edges;
    for (int l = 0; l < left; ++l)
      for (int r = 0; r < right; ++r)
        if (oracles::bounded(rng, 100) < 35) edges.emplace_back(l, r);
    auto matching = max_bipartite_matching(left, right, edges);
    CHECK(static_cast<int>(matching.size()) ==
          oracles::matching_size_brute(left, right, edges));
    // result is a matching over given edges
    std::vector<char> left_used(left, 0), right_used(right, 0);
    for (auto [l, r] : matching) {
      CHECK(!left_used[l]);
      CHECK(!right_used[r]);
      left_used[l] = right_used[r] = 1;
      CHECK(std::find(edges.begin(), edges.end(), std::make_pair(l, r)) != edges.end());
    }
  }
}

TEST_CASE("matching size is order invariant") {
  std::mt19937_64 rng(103);
  std::vector<std::pair<int, int>> edges;
  for (int l = 0; l < 6; ++l)
    for (int r = 0; r < 6; ++r)
      if (oracles::bounded(rng, 100) < 40) edges.emplace_back(l, r);
  auto size = max_bipartite_matching(6, 6, edges).size();
  for (int shuffle = 0; shuffle < 10; ++shuffle) {
    for (size_t j = edges.size(); j > 1; --j)
      std::swap(edges[j - 1], edges[oracles::bounded(rng, j)]);
    CHECK(max_bipartite_matching(6, 6, edges).size() == size);
  }
}

TEST_CASE("flow basics") {
  FlowResult single = max_flow(2, {{0, 1, 3}}, 0, 1);
  CHECK(single.value == 3);
  CHECK(single.arc_flow == std::vector<std::int64_t>{3});

  FlowResult parallel =
      max_flow(4, {{0, 1, 1}, {1, 3, 1}, {0, 2, 1}, {2, 3, 1}}, 0, 3);
  CHECK(parallel.value == 2);

  CHECK_THROWS_AS(max_flow(2, {{0, 1, -1}}, 0, 1), Error);
}

TEST_CASE("flow equals exhaustive min cut") {
  std::mt19937_64 rng(107);
  for (int round = 0; round < 60; ++round) {
    int nodes = 2 + static_cast<int>(oracles::bounded(rng, 8));
    std::vector<FlowArc> arcs;
    for (int u = 0; u < nodes; ++u)
      for (int v = 0; v < nodes; ++v)
        if (u != v && oracles::bounded(rng, 100) < 30)
          arcs.push_back({u, v, static_cast<std::int64_t>(oracles::bounded(rng, 4))});
    FlowResult flow = max_flow(nodes, arcs, 0, nodes - 1);
    CHECK(flow.value == oracles::min_cut_brute(nodes, arcs, 0, nodes - 1));
    // conservation at interior nodes; capacities respected
    std::vector<std::int64_t> net(nodes, 0);
    for (size_t i = 0; i < arcs.size(); ++i) {
      CHECK(flow.arc_flow[i] >= 0);
      CHECK(flow.arc_flow[i] <= arcs[i].capacity);
      net[arcs[i].from] += flow.arc_flow[i];
      net[arcs[i].to] -= flow.arc_flow[i];
    }
    for (int v = 1; v + 1 < nodes; ++v) CHECK(net[v] == 0);
    CHECK(net[0] == flow.value);
  }
}
