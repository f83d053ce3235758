#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace treepeak {

/// Maximum-cardinality bipartite matching. Augmenting paths are explored in
/// ascending left-vertex and neighbor order, so the returned matching is a
/// deterministic function of the (sorted) edge set.
std::vector<std::pair<int, int>> max_bipartite_matching(
    int left_size, int right_size, const std::vector<std::pair<int, int>>& edges);

struct FlowArc {
  int from = 0;
  int to = 0;
  std::int64_t capacity = 0;
};

struct FlowResult {
  std::int64_t value = 0;
  std::vector<std::int64_t> arc_flow;  // parallel to the input arc list
};

/// Maximum integral s-t flow with deterministic shortest-augmenting-path
/// order (arcs scanned in input order).
FlowResult max_flow(int nodes, const std::vector<FlowArc>& arcs, int source,
                    int sink);

}  // namespace treepeak
