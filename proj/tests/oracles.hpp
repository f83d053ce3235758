// Test-only reference implementations, deliberately independent of the
// library's algorithm choices: exhaustive enumeration and definition-literal
// checks used to validate the production code paths.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "treepeak/graph.hpp"
#include "treepeak/matching.hpp"
#include "treepeak/profile.hpp"

namespace oracles {

using treepeak::Candidate;
using treepeak::Profile;
using treepeak::Tree;
using treepeak::Vote;

inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// Literal single-peakedness: preferences strictly decrease along every tree
// path leaving the voter's top candidate.
inline bool sp_definition_check(const Profile& p, const Tree& t) {
  for (int i = 0; i < p.num_voters(); ++i) {
    Candidate peak = p.top(i);
    for (Candidate a = 0; a < p.num_candidates(); ++a) {
      if (a == peak) continue;
      auto path = t.path_between(peak, a);
      for (size_t j = 1; j + 1 < path.size(); ++j) {
        Candidate b = path[j];
        if (!(p.prefers(i, peak, b) && p.prefers(i, b, a))) return false;
      }
    }
  }
  return true;
}

// All labeled trees on m vertices via Pruefer sequences.
inline std::vector<Tree> all_trees(int m) {
  if (m == 1) return {Tree(1, {})};
  if (m == 2) return {Tree(2, {{0, 1}})};
  std::vector<Tree> trees;
  std::vector<int> seq(m - 2, 0);
  while (true) {
    trees.push_back(treepeak::tree_from_pruefer(seq, m));
    int i = m - 3;
    while (i >= 0 && seq[i] == m - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return trees;
}

// Exhaustive vertex separation: min over all orderings of the max number of
// placed vertices still adjacent to an unplaced one. Equals pathwidth.
inline int vertex_separation_brute(const Tree& t) {
  int m = t.num_vertices();
  std::vector<int> boundary(1 << m, 0);
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    int count = 0;
    for (int v = 0; v < m; ++v) {
      if (!(mask >> v & 1)) continue;
      for (int u : t.neighbors(v))
        if (!(mask >> u & 1)) {
          ++count;
          break;
        }
    }
    boundary[mask] = count;
  }
  std::vector<int> best(1 << m, 0);
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    int value = 1 << 30;
    for (int v = 0; v < m; ++v)
      if (mask >> v & 1)
        value = std::min(value, std::max(best[mask & ~(1u << v)], boundary[mask]));
    best[mask] = value;
  }
  return best[(1u << m) - 1];
}

// Smallest hitting set by subset enumeration.
inline int min_hitting_set_brute(int m, const std::vector<std::vector<int>>& families) {
  std::vector<unsigned> family_masks;
  for (const auto& f : families) {
    unsigned fm = 0;
    for (int v : f) fm |= 1u << v;
    family_masks.push_back(fm);
  }
  int best = m + 1;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    bool hits = true;
    for (unsigned fm : family_masks)
      if (!(mask & fm)) {
        hits = false;
        break;
      }
    if (hits) best = std::min(best, __builtin_popcount(mask));
  }
  return best;
}

// Maximum matching size by bitmask DP over used right vertices.
inline int matching_size_brute(int left, int right,
                               const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(left);
  for (auto [l, r] : edges) adj[l].push_back(r);
  std::vector<std::vector<int>> memo(left + 1, std::vector<int>(1 << right, -1));
  auto rec = [&](auto&& self, int i, unsigned used) -> int {
    if (i == left) return 0;
    int& entry = memo[i][used];
    if (entry >= 0) return entry;
    int best = self(self, i + 1, used);
    for (int r : adj[i])
      if (!(used >> r & 1)) best = std::max(best, 1 + self(self, i + 1, used | (1u << r)));
    return entry = best;
  };
  return rec(rec, 0, 0u);
}

// Min s-t cut by enumerating source sides.
inline long long min_cut_brute(int nodes, const std::vector<treepeak::FlowArc>& arcs,
                               int source, int sink) {
  long long best = -1;
  for (unsigned mask = 0; mask < (1u << nodes); ++mask) {
    if (!(mask >> source & 1) || (mask >> sink & 1)) continue;
    long long cut = 0;
    for (const auto& a : arcs)
      if ((mask >> a.from & 1) && !(mask >> a.to & 1)) cut += a.capacity;
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

inline Tree random_tree(std::mt19937_64& rng, int m) {
  if (m == 1) return Tree(1, {});
  if (m == 2) return Tree(2, {{0, 1}});
  std::vector<int> seq(m - 2);
  for (int& v : seq) v = static_cast<int>(bounded(rng, m));
  return treepeak::tree_from_pruefer(seq, m);
}

inline Profile random_profile(std::mt19937_64& rng, int m, int n) {
  std::vector<Vote> votes(n);
  for (int i = 0; i < n; ++i) {
    votes[i].ranking.resize(m);
    std::iota(votes[i].ranking.begin(), votes[i].ranking.end(), 0);
    for (int j = m - 1; j > 0; --j)
      std::swap(votes[i].ranking[j], votes[i].ranking[bounded(rng, j + 1)]);
  }
  return Profile(m, std::move(votes));
}

}  // namespace oracles
