// Shared example profiles used across the test suites. Candidates are
// letters a, b, c, ... mapped to indices 0, 1, 2, ...
#pragma once

#include <string>
#include <vector>

#include "treepeak/profile.hpp"

namespace fixtures {

inline treepeak::Profile from_letters(int m, const std::vector<std::string>& rankings) {
  std::vector<treepeak::Vote> votes;
  for (const auto& word : rankings) {
    treepeak::Vote v;
    for (char c : word) v.ranking.push_back(c - 'a');
    votes.push_back(std::move(v));
  }
  return treepeak::Profile(m, std::move(votes));
}

// Two reversed votes; single-peaked on exactly one tree, the path a-b-c-d-e.
inline treepeak::Profile p1() { return from_letters(5, {"abcde", "edcba"}); }

// Single-peaked on exactly two trees (a star at b and one caterpillar).
inline treepeak::Profile p2() { return from_letters(5, {"abcde", "ebcda"}); }

// Eleven candidates, three voters, single-peaked on exactly 336 trees.
inline treepeak::Profile p3() {
  return from_letters(11, {"kfedghcijba", "dcbeafghijk", "gfhiedcbajk"});
}

}  // namespace fixtures
