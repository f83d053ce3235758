#include "treepeak/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "treepeak/errors.hpp"

namespace treepeak {

std::vector<std::pair<int, int>> max_bipartite_matching(
    int left_size, int right_size, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(left_size);
  for (auto [l, r] : edges) {
    if (l < 0 || l >= left_size || r < 0 || r >= right_size)
      fail(ErrorCode::IndexOutOfRange, "matching edge endpoint out of range");
    adj[l].push_back(r);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  std::vector<int> match_right(right_size, -1);
  std::vector<char> visited(left_size);
  auto augment = [&](auto&& self, int l) -> bool {
    visited[l] = 1;
    for (int r : adj[l]) {
      int other = match_right[r];
      if (other == -1 || (!visited[other] && self(self, other))) {
        match_right[r] = l;
        return true;
      }
    }
    return false;
  };
  for (int l = 0; l < left_size; ++l) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(augment, l);
  }
  std::vector<std::pair<int, int>> matching;
  for (int r = 0; r < right_size; ++r)
    if (match_right[r] != -1) matching.emplace_back(match_right[r], r);
  std::sort(matching.begin(), matching.end());
  return matching;
}

namespace {

struct ResidualArc {
  int to;
  std::int64_t capacity;
  int reverse_index;
  int source_arc;  // index into the input arc list, -1 for reverse arcs
};

}  // namespace

FlowResult max_flow(int nodes, const std::vector<FlowArc>& arcs, int source,
                    int sink) {
  if (source < 0 || source >= nodes || sink < 0 || sink >= nodes)
    fail(ErrorCode::IndexOutOfRange, "flow terminal out of range");
  std::vector<std::vector<ResidualArc>> graph(nodes);
  for (size_t i = 0; i < arcs.size(); ++i) {
    const FlowArc& a = arcs[i];
    if (a.capacity < 0) fail(ErrorCode::NegativeCapacity, "arc capacity must be >= 0");
    if (a.from < 0 || a.from >= nodes || a.to < 0 || a.to >= nodes)
      fail(ErrorCode::IndexOutOfRange, "flow arc endpoint out of range");
    graph[a.from].push_back(
        {a.to, a.capacity, static_cast<int>(graph[a.to].size()), static_cast<int>(i)});
    graph[a.to].push_back(
        {a.from, 0, static_cast<int>(graph[a.from].size()) - 1, -1});
  }
  FlowResult result;
  result.arc_flow.assign(arcs.size(), 0);
  std::vector<int> prev_node(nodes), prev_arc(nodes);
  while (true) {
    std::fill(prev_node.begin(), prev_node.end(), -1);
    prev_node[source] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && prev_node[sink] == -1) {
      int v = q.front();
      q.pop();
      for (size_t i = 0; i < graph[v].size(); ++i) {
        const ResidualArc& a = graph[v][i];
        if (a.capacity > 0 && prev_node[a.to] == -1) {
          prev_node[a.to] = v;
          prev_arc[a.to] = static_cast<int>(i);
          q.push(a.to);
        }
      }
    }
    if (prev_node[sink] == -1) break;
    std::int64_t push = std::numeric_limits<std::int64_t>::max();
    for (int v = sink; v != source; v = prev_node[v])
      push = std::min(push, graph[prev_node[v]][prev_arc[v]].capacity);
    for (int v = sink; v != source; v = prev_node[v]) {
      ResidualArc& a = graph[prev_node[v]][prev_arc[v]];
      a.capacity -= push;
      graph[v][a.reverse_index].capacity += push;
      if (a.source_arc >= 0) result.arc_flow[a.source_arc] += push;
      else result.arc_flow[graph[v][a.reverse_index].source_arc] -= push;
    }
    result.value += push;
  }
  return result;
}

}  // namespace treepeak
