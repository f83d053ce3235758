#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "treepeak/graph.hpp"

using namespace treepeak;

namespace {

Tree path_tree(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < m; ++v) edges.emplace_back(v, v + 1);
  return Tree(m, std::move(edges));
}

Tree star_tree(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < m; ++v) edges.emplace_back(0, v);
  return Tree(m, std::move(edges));
}

Tree complete_binary_tree(int height) {
  int m = (1 << (height + 1)) - 1;
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < m; ++v) edges.emplace_back(v, (v - 1) / 2);
  return Tree(m, std::move(edges));
}

// Fig. 4 right: the non-star witness of the second example profile.
Tree fig4_right() { return Tree(5, {{0, 1}, {4, 1}, {1, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("tree construction validates") {
  CHECK_THROWS_AS(Tree(3, {{0, 1}}), Error);
  CHECK_THROWS_AS(Tree(3, {{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(Tree(3, {{0, 1}, {2, 2}}), Error);
  CHECK_THROWS_AS(Tree(4, {{0, 1}, {2, 3}, {0, 1}}), Error);
  CHECK_THROWS_AS(Tree(3, {{0, 1}, {0, 3}}), Error);
  Tree t(3, {{2, 0}, {1, 0}});
  CHECK(t.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
}

TEST_CASE("is_connected_in_tree") {
  Tree path = path_tree(5);
  CHECK(is_connected_in_tree(path, {0, 1, 2}));
  CHECK(!is_connected_in_tree(path, {0, 2}));
  CHECK(is_connected_in_tree(path, {}));
  CHECK(is_connected_in_tree(path, {3}));
  CHECK(is_connected_in_tree(fig4_right(), {0, 4, 1}));
}

TEST_CASE("single peakedness on the examples") {
  Profile p2 = fixtures::p2();
  CHECK(is_single_peaked_on(p2, star_tree(5)) == false);  // star at a, not b
  Tree star_at_b(5, {{1, 0}, {1, 2}, {1, 3}, {1, 4}});
  CHECK(is_single_peaked_on(p2, star_at_b));
  CHECK(!is_single_peaked_on(p2, path_tree(5)));
  CHECK(is_single_peaked_on(fixtures::p1(), path_tree(5)));
  CHECK_THROWS_AS(is_single_peaked_on(p2, path_tree(4)), Error);
}

TEST_CASE("single peakedness agrees with the literal definition") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int round = 0; round < 400; ++round) {
    int m = 1 + static_cast<int>(oracles::bounded(rng, 6));
    int n = 1 + static_cast<int>(oracles::bounded(rng, 4));
    Profile p = oracles::random_profile(rng, m, n);
    Tree t = oracles::random_tree(rng, m);
    bool fast = is_single_peaked_on(p, t);
    bool literal = oracles::sp_definition_check(p, t);
    CHECK(fast == literal);
    checked += fast;
  }
  CHECK(checked > 0);  // both outcomes exercised
}

TEST_CASE("structural measures") {
  CHECK(diameter(star_tree(8)) == 2);
  CHECK(diameter(path_tree(5)) == 4);
  CHECK(leaves(path_tree(5)) == std::vector<int>{0, 4});
  CHECK(diameter(Tree(1, {})) == 0);
  CHECK(leaves(Tree(1, {})) == std::vector<int>{0});
  CHECK(internal_vertices(Tree(1, {})).empty());
  Tree f4 = fig4_right();
  CHECK(leaves(f4) == std::vector<int>{0, 3, 4});
  CHECK(max_degree(f4) == 3);
  CHECK(internal_vertices(f4) == std::vector<int>{1, 2});
  for (const Tree& t : oracles::all_trees(6)) {
    int degree_sum = 0;
    for (int v = 0; v < 6; ++v) degree_sum += t.degree(v);
    CHECK(degree_sum == 10);
    CHECK(leaves(t).size() + internal_vertices(t).size() == 6);
  }
}

TEST_CASE("classification") {
  auto path5 = classify(path_tree(5));
  CHECK(path5.path);
  CHECK(path5.caterpillar);
  CHECK(path5.star_subdivision);
  CHECK(!path5.star);
  CHECK(path5.k_regular == 2);

  auto star5 = classify(star_tree(5));
  CHECK(star5.star);
  CHECK(star5.caterpillar);
  CHECK(star5.star_subdivision);
  CHECK(!star5.path);
  CHECK(star5.k_regular == 4);

  // caterpillar that is neither path nor star: spine 0-1-2 with hair
  Tree cat(6, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 5}});
  auto cat_tags = classify(cat);
  CHECK(cat_tags.caterpillar);
  CHECK(!cat_tags.path);
  CHECK(!cat_tags.star);
  CHECK(!cat_tags.star_subdivision);

  // spider: three legs of length 2 from a center
  Tree spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  auto spider_tags = classify(spider);
  CHECK(spider_tags.star_subdivision);
  CHECK(!spider_tags.caterpillar);

  auto bin = classify(complete_binary_tree(3));
  CHECK(!bin.caterpillar);
  CHECK(!bin.star_subdivision);
  CHECK(!bin.k_regular.has_value());

  auto tiny = classify(Tree(2, {{0, 1}}));
  CHECK(tiny.path);
  CHECK(tiny.star);
  CHECK(tiny.caterpillar);
  CHECK(tiny.star_subdivision);
}

TEST_CASE("pathwidth of named trees") {
  CHECK(pathwidth(path_tree(5)).first == 1);
  CHECK(pathwidth(star_tree(6)).first == 1);
  CHECK(pathwidth(Tree(1, {})).first == 0);
  CHECK(pathwidth(Tree(2, {{0, 1}})).first == 1);
  Tree bin3 = complete_binary_tree(3);
  CHECK(pathwidth(bin3).first == oracles::vertex_separation_brute(bin3));
}

TEST_CASE("pathwidth equals brute-force vertex separation") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 120; ++round) {
    int m = 1 + static_cast<int>(oracles::bounded(rng, 8));
    Tree t = oracles::random_tree(rng, m);
    auto [w, d] = pathwidth(t);
    CHECK(w == oracles::vertex_separation_brute(t));
    CHECK(verify_path_decomposition(t, d));
    CHECK(d.width() == w);
  }
}

TEST_CASE("width one exactly for caterpillars") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 150; ++round) {
    int m = 2 + static_cast<int>(oracles::bounded(rng, 8));
    Tree t = oracles::random_tree(rng, m);
    CHECK((pathwidth(t).first == 1) == classify(t).caterpillar);
  }
}

TEST_CASE("lemma1 transform inserts slack bags") {
  Tree path3 = path_tree(3);
  PathDecomposition d{{{0, 1}, {1, 2}}};
  PathDecomposition fixed = lemma1_transform(path3, d);
  CHECK(verify_path_decomposition(path3, fixed));
  CHECK(fixed.width() == 1);
  CHECK(fixed.bags == std::vector<std::vector<int>>{{0}, {0, 1}, {1}, {1, 2}});

  Tree star3 = star_tree(4);
  PathDecomposition ds{{{0, 1}, {0, 2}, {0, 3}}};
  PathDecomposition fs = lemma1_transform(star3, ds);
  CHECK(verify_path_decomposition(star3, fs));
  CHECK(fs.width() == 1);
}

TEST_CASE("lemma1 slack condition holds on random decompositions") {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 80; ++round) {
    int m = 2 + static_cast<int>(oracles::bounded(rng, 7));
    Tree t = oracles::random_tree(rng, m);
    auto [w, d] = pathwidth(t);
    for (auto [a, b] : t.edges()) {
      bool slack = false;
      for (const auto& bag : d.bags) {
        if (static_cast<int>(bag.size()) > w) continue;
        for (int v : bag)
          if (v == a || v == b) slack = true;
      }
      CHECK(slack);
    }
  }
}

TEST_CASE("lemma1 rejects invalid decompositions") {
  Tree path3 = path_tree(3);
  CHECK_THROWS_AS(lemma1_transform(path3, PathDecomposition{{{0, 1}}}), Error);
  CHECK_THROWS_AS(lemma1_transform(path3, PathDecomposition{{{0, 1}, {2}, {1, 2}}}),
                  Error);
}

TEST_CASE("pruefer decode") {
  CHECK(tree_from_pruefer({}, 2) == Tree(2, {{0, 1}}));
  CHECK(tree_from_pruefer({0, 0}, 4) == star_tree(4));
  // all sequences decode to distinct trees (Cayley)
  auto trees = oracles::all_trees(5);
  CHECK(trees.size() == 125);
  std::set<std::vector<std::pair<int, int>>> distinct;
  for (const Tree& t : trees) distinct.insert(t.edges());
  CHECK(distinct.size() == 125);
  CHECK_THROWS_AS(tree_from_pruefer({1}, 4), Error);
}
