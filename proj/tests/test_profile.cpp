#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "treepeak/profile.hpp"
#include "treepeak/scoring.hpp"

using namespace treepeak;

TEST_CASE("plain parsing") {
  Profile p = parse_profile("5 2\n1 2 3 4 5\n5 4 3 2 1\n", ProfileFormat::plain);
  CHECK(p.num_candidates() == 5);
  CHECK(p.num_voters() == 2);
  CHECK(p.vote(0).ranking == fixtures::p1().vote(0).ranking);
  CHECK(p.vote(1).ranking == fixtures::p1().vote(1).ranking);

  Profile single = parse_profile("1 1\n1\n", ProfileFormat::plain);
  CHECK(single.num_candidates() == 1);
  CHECK(single.num_voters() == 1);

  Profile commented =
      parse_profile("# heading\n\n5 1\n# a vote\n3 1 2 5 4\n", ProfileFormat::plain);
  CHECK(commented.vote(0).ranking == std::vector<Candidate>{2, 0, 1, 4, 3});
}

TEST_CASE("plain parsing failures") {
  CHECK_THROWS_AS(parse_profile("", ProfileFormat::plain), Error);
  CHECK_THROWS_AS(parse_profile("3 1\n1 2\n", ProfileFormat::plain), Error);
  CHECK_THROWS_AS(parse_profile("3 1\n1 2 2\n", ProfileFormat::plain), Error);
  CHECK_THROWS_AS(parse_profile("3 1\n1 2 4\n", ProfileFormat::plain), Error);
  CHECK_THROWS_AS(parse_profile("0 0\n", ProfileFormat::plain), Error);
  CHECK_THROWS_AS(parse_profile("3 2\n1 2 3\n", ProfileFormat::plain), Error);
  try {
    parse_profile("3 1\n1 x 3\n", ProfileFormat::plain);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedInput);
  }
}

TEST_CASE("soc parsing expands counts") {
  std::string text =
      "# an election\n"
      "3\n"
      "1,red\n"
      "2,green\n"
      "3,blue\n"
      "3: 2,1,3\n"
      "1: 3,2,1\n";
  Profile p = parse_profile(text, ProfileFormat::soc);
  CHECK(p.num_candidates() == 3);
  CHECK(p.num_voters() == 4);
  for (int i = 0; i < 3; ++i)
    CHECK(p.vote(i).ranking == std::vector<Candidate>{1, 0, 2});
  CHECK(p.vote(3).ranking == std::vector<Candidate>{2, 1, 0});
  CHECK(p.names() == std::vector<std::string>{"red", "green", "blue"});
}

TEST_CASE("pos") {
  Profile p1 = fixtures::p1();
  CHECK(p1.pos(0, 0) == 1);
  CHECK(p1.pos(1, 0) == 5);
  for (int i = 0; i < p1.num_voters(); ++i) CHECK(p1.pos(i, p1.top(i)) == 1);
  CHECK_THROWS_AS(p1.pos(0, 9), Error);
  CHECK_THROWS_AS(p1.pos(7, 0), Error);
}

TEST_CASE("pos is a bijection onto 1..m") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 20; ++round) {
    int m = 1 + static_cast<int>(oracles::bounded(rng, 7));
    int n = 1 + static_cast<int>(oracles::bounded(rng, 4));
    Profile p = oracles::random_profile(rng, m, n);
    for (int i = 0; i < n; ++i) {
      std::vector<char> hit(m + 1, 0);
      for (Candidate c = 0; c < m; ++c) {
        int r = p.pos(i, c);
        CHECK(r >= 1);
        CHECK(r <= m);
        CHECK(!hit[r]);
        hit[r] = 1;
      }
    }
  }
}

TEST_CASE("top second bottom") {
  Profile p2 = fixtures::p2();
  auto [top, second, bottom] = p2.top_second_bottom(0, {0, 1, 2, 3, 4});
  CHECK(top == 0);
  CHECK(*second == 1);
  CHECK(bottom == 4);

  auto [t2, s2, b2] = p2.top_second_bottom(1, {1, 2, 3});
  CHECK(t2 == 1);
  CHECK(*s2 == 2);
  CHECK(b2 == 3);

  auto [t3, s3, b3] = p2.top_second_bottom(0, {3});
  CHECK(t3 == 3);
  CHECK(!s3.has_value());
  CHECK(b3 == 3);

  CHECK_THROWS_AS(p2.top_second_bottom(0, {}), Error);
}

TEST_CASE("restrict keeps relative order") {
  Profile p2 = fixtures::p2();
  auto r = restrict(p2, {1, 2, 3});
  CHECK(r.profile.num_candidates() == 3);
  CHECK(r.to_parent == std::vector<Candidate>{1, 2, 3});
  for (int i = 0; i < 2; ++i)
    CHECK(r.profile.vote(i).ranking == std::vector<Candidate>{0, 1, 2});

  auto full = restrict(p2, {0, 1, 2, 3, 4});
  for (int i = 0; i < 2; ++i)
    CHECK(full.profile.vote(i).ranking == p2.vote(i).ranking);

  auto single = restrict(fixtures::p1(), {0});
  CHECK(single.profile.num_candidates() == 1);
  CHECK_THROWS_AS(restrict(p2, {}), Error);
}

TEST_CASE("restrict composes") {
  std::mt19937_64 rng(5);
  Profile p = oracles::random_profile(rng, 7, 3);
  std::vector<Candidate> w1{0, 2, 3, 5, 6};
  std::vector<Candidate> w2_parent{2, 5, 6};
  auto first = restrict(p, w1);
  // map w2 into first's index space
  std::vector<Candidate> w2_child;
  for (Candidate c : w2_parent)
    for (size_t i = 0; i < first.to_parent.size(); ++i)
      if (first.to_parent[i] == c) w2_child.push_back(static_cast<Candidate>(i));
  auto composed = restrict(first.profile, w2_child);
  auto direct = restrict(p, w2_parent);
  for (int i = 0; i < p.num_voters(); ++i)
    CHECK(composed.profile.vote(i).ranking == direct.profile.vote(i).ranking);
  for (size_t j = 0; j < composed.to_parent.size(); ++j)
    CHECK(first.to_parent[composed.to_parent[j]] == direct.to_parent[j]);
}

TEST_CASE("b_set") {
  Profile p2 = fixtures::p2();
  std::vector<Candidate> all{0, 1, 2, 3, 4};
  CHECK(p2.b_set(0, all, 0) == std::vector<Candidate>{1});
  CHECK(p2.b_set(1, all, 0) == std::vector<Candidate>{1, 2, 3, 4});
  // bottom-ranked candidate: everything else qualifies
  CHECK(p2.b_set(0, all, 4) == std::vector<Candidate>{0, 1, 2, 3});
  CHECK_THROWS_AS(p2.b_set(0, all, 7), Error);
  CHECK_THROWS_AS(p2.b_set(0, {1, 2}, 0), Error);
}

TEST_CASE("b_set never contains the candidate or anyone ranked below it") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 30; ++round) {
    int m = 2 + static_cast<int>(oracles::bounded(rng, 6));
    Profile p = oracles::random_profile(rng, m, 2);
    std::vector<Candidate> all(m);
    for (int c = 0; c < m; ++c) all[c] = c;
    for (int i = 0; i < p.num_voters(); ++i)
      for (Candidate a = 0; a < m; ++a) {
        auto b = p.b_set(i, all, a);
        for (Candidate c : b) {
          CHECK(c != a);
          if (p.top(i) != a) CHECK(p.prefers(i, c, a));
        }
      }
  }
}

TEST_CASE("scores on the examples") {
  Profile p1 = fixtures::p1();
  Profile p2 = fixtures::p2();
  ScoringFunction borda = ScoringFunction::borda(5);
  CHECK(utilitarian_score(p2, borda, make_committee({1})) == -2);
  CHECK(utilitarian_score(p2, borda, make_committee({0, 1, 2, 3, 4})) == 0);
  CHECK(utilitarian_score(p1, borda, make_committee({2})) == -4);
  CHECK(egalitarian_score(p2, borda, make_committee({0, 4})) == 0);
  CHECK(egalitarian_score(p2, borda, make_committee({1})) == -1);
  CHECK(egalitarian_score(p1, borda, make_committee({0, 1, 2, 3, 4})) == 0);
}

TEST_CASE("borda equals negated rank offset") {
  std::mt19937_64 rng(13);
  Profile p = oracles::random_profile(rng, 6, 4);
  ScoringFunction borda = ScoringFunction::borda(6);
  for (int i = 0; i < p.num_voters(); ++i)
    for (Candidate c = 0; c < 6; ++c)
      CHECK(borda.value(p, i, c) == -(p.pos(i, c) - 1));
}

TEST_CASE("scores are monotone under committee enlargement") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 25; ++round) {
    int m = 2 + static_cast<int>(oracles::bounded(rng, 5));
    Profile p = oracles::random_profile(rng, m, 3);
    ScoringFunction mu = ScoringFunction::borda(m);
    std::vector<Candidate> members{static_cast<Candidate>(oracles::bounded(rng, m))};
    Score util = utilitarian_score(p, mu, make_committee(members));
    Score egal = egalitarian_score(p, mu, make_committee(members));
    for (Candidate c = 0; c < m; ++c) {
      if (std::find(members.begin(), members.end(), c) != members.end()) continue;
      members.push_back(c);
      Score u2 = utilitarian_score(p, mu, make_committee(members));
      Score e2 = egalitarian_score(p, mu, make_committee(members));
      CHECK(u2 >= util);
      CHECK(e2 >= egal);
      util = u2;
      egal = e2;
    }
  }
}

TEST_CASE("scoring validation") {
  CHECK_THROWS_AS(ScoringFunction::positional({1, 0}), Error);
  CHECK_THROWS_AS(ScoringFunction::positional({0, -2, -1}), Error);
  CHECK_THROWS_AS(ScoringFunction::positional({}), Error);
  CHECK_THROWS_AS(ScoringFunction::approval(3, 0), Error);
  CHECK_THROWS_AS(ScoringFunction::table({{0, -1}, {0, 1}}), Error);
  CHECK(ScoringFunction::borda(4).is_borda_like());
  CHECK(!ScoringFunction::approval(4, 2).is_borda_like());
  CHECK(ScoringFunction::positional({0, -1, -2, -2}).is_borda_like());
  CHECK(!ScoringFunction::positional({0, -1, -1}).is_borda_like());
}

TEST_CASE("per-voter table scoring") {
  Profile p2 = fixtures::p2();
  ScoringFunction table = ScoringFunction::table({
      {0, 0, -1, -1, -5},
      {0, -2, -2, -3, -4},
  });
  CHECK(table.value(p2, 0, 1) == 0);
  CHECK(table.value(p2, 1, 1) == -2);
  CHECK(utilitarian_score(p2, table, make_committee({1})) == -2);
  CHECK(egalitarian_score(p2, table, make_committee({1})) == -2);
}
