#include "treepeak/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace treepeak {

namespace {

std::vector<std::vector<int>> build_adjacency(
    int m, const std::vector<std::pair<int, int>>& edges, bool directed) {
  std::vector<std::vector<int>> adj(m);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= m || v < 0 || v >= m)
      fail(ErrorCode::IndexOutOfRange, "edge endpoint out of range");
    if (u == v) fail(ErrorCode::MalformedInput, "self-loop");
    adj[u].push_back(v);
    if (!directed) adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

}  // namespace

Tree::Tree(int m, std::vector<std::pair<int, int>> edges) : m_(m) {
  if (m < 1) fail(ErrorCode::MalformedInput, "tree needs at least one vertex");
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail(ErrorCode::MalformedInput, "duplicate edge");
  if (static_cast<int>(edges.size()) != m - 1)
    fail(ErrorCode::MalformedInput,
         "tree on " + std::to_string(m) + " vertices needs " + std::to_string(m - 1) +
             " edges, got " + std::to_string(edges.size()));
  edges_ = std::move(edges);
  adj_ = build_adjacency(m_, edges_, false);
  // m-1 edges + connected <=> tree
  std::vector<char> seen(m_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj_[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  if (reached != m_) fail(ErrorCode::MalformedInput, "edge set is not connected");
}

bool Tree::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<int> Tree::path_between(int u, int v) const {
  if (u < 0 || u >= m_ || v < 0 || v >= m_)
    fail(ErrorCode::IndexOutOfRange, "path_between(): vertex out of range");
  std::vector<int> parent(m_, -2);
  std::queue<int> q;
  q.push(u);
  parent[u] = -1;
  while (!q.empty()) {
    int w = q.front();
    q.pop();
    if (w == v) break;
    for (int x : adj_[w])
      if (parent[x] == -2) {
        parent[x] = w;
        q.push(x);
      }
  }
  std::vector<int> path;
  for (int w = v; w != -1; w = parent[w]) path.push_back(w);
  std::reverse(path.begin(), path.end());
  return path;
}

Digraph::Digraph(int m, std::vector<std::pair<int, int>> arcs) : m_(m) {
  if (m < 1) fail(ErrorCode::MalformedInput, "digraph needs at least one vertex");
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  arcs_ = std::move(arcs);
  out_ = build_adjacency(m_, arcs_, true);
}

bool Digraph::has_arc(int u, int v) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(u, v));
}

std::vector<std::pair<int, int>> Digraph::underlying_edges() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(arcs_.size());
  for (auto [u, v] : arcs_) edges.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

int PathDecomposition::width() const {
  size_t largest = 0;
  for (const auto& bag : bags) largest = std::max(largest, bag.size());
  return static_cast<int>(largest) - 1;
}

bool is_connected_in_tree(const Tree& t, const std::vector<int>& subset) {
  if (subset.size() <= 1) {
    for (int v : subset)
      if (v < 0 || v >= t.num_vertices())
        fail(ErrorCode::IndexOutOfRange, "subset vertex out of range");
    return true;
  }
  std::vector<char> in(t.num_vertices(), 0);
  for (int v : subset) {
    if (v < 0 || v >= t.num_vertices())
      fail(ErrorCode::IndexOutOfRange, "subset vertex out of range");
    in[v] = 1;
  }
  std::vector<int> stack{subset[0]};
  std::vector<char> seen(t.num_vertices(), 0);
  seen[subset[0]] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : t.neighbors(v))
      if (in[u] && !seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  std::vector<int> unique_subset(subset);
  std::sort(unique_subset.begin(), unique_subset.end());
  unique_subset.erase(std::unique(unique_subset.begin(), unique_subset.end()),
                      unique_subset.end());
  return reached == unique_subset.size();
}

bool is_single_peaked_on(const Profile& p, const Tree& t) {
  if (p.num_candidates() != t.num_vertices())
    fail(ErrorCode::SizeMismatch, "profile and tree have different sizes");
  // Growing prefixes stay connected iff every newly ranked candidate is
  // adjacent to an earlier one.
  std::vector<char> in_prefix(p.num_candidates(), 0);
  for (int i = 0; i < p.num_voters(); ++i) {
    std::fill(in_prefix.begin(), in_prefix.end(), 0);
    const auto& ranking = p.vote(i).ranking;
    in_prefix[ranking[0]] = 1;
    for (size_t r = 1; r < ranking.size(); ++r) {
      int c = ranking[r];
      bool attached = false;
      for (int u : t.neighbors(c))
        if (in_prefix[u]) {
          attached = true;
          break;
        }
      if (!attached) return false;
      in_prefix[c] = 1;
    }
  }
  return true;
}

int diameter(const Tree& t) {
  auto farthest = [&](int src) {
    std::vector<int> dist(t.num_vertices(), -1);
    std::queue<int> q;
    q.push(src);
    dist[src] = 0;
    int best = src;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (dist[v] > dist[best]) best = v;
      for (int u : t.neighbors(v))
        if (dist[u] == -1) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
    }
    return std::make_pair(best, dist[best]);
  };
  auto [a, da] = farthest(0);
  (void)da;
  return farthest(a).second;
}

std::vector<int> leaves(const Tree& t) {
  if (t.num_vertices() == 1) return {0};  // sole vertex reported as a leaf
  std::vector<int> out;
  for (int v = 0; v < t.num_vertices(); ++v)
    if (t.degree(v) == 1) out.push_back(v);
  return out;
}

std::vector<int> internal_vertices(const Tree& t) {
  if (t.num_vertices() == 1) return {};
  std::vector<int> out;
  for (int v = 0; v < t.num_vertices(); ++v)
    if (t.degree(v) >= 2) out.push_back(v);
  return out;
}

int max_degree(const Tree& t) {
  int best = 0;
  for (int v = 0; v < t.num_vertices(); ++v) best = std::max(best, t.degree(v));
  return best;
}

TreeClasses classify(const Tree& t) {
  TreeClasses c;
  int m = t.num_vertices();
  if (m <= 2) {
    c.path = c.star = c.caterpillar = c.star_subdivision = true;
    return c;
  }
  auto lvs = leaves(t);
  auto internal = internal_vertices(t);
  c.path = lvs.size() == 2;
  c.star = internal.size() == 1;
  int high_degree = 0;
  for (int v = 0; v < m; ++v)
    if (t.degree(v) >= 3) ++high_degree;
  c.star_subdivision = high_degree <= 1;
  // Caterpillar: stripping the leaves must leave a path (or nothing).
  std::vector<char> kept(m, 1);
  for (int v : lvs) kept[v] = 0;
  c.caterpillar = true;
  for (int v = 0; v < m; ++v) {
    if (!kept[v]) continue;
    int deg = 0;
    for (int u : t.neighbors(v)) deg += kept[u];
    if (deg > 2) {
      c.caterpillar = false;
      break;
    }
  }
  int k = t.degree(internal[0]);
  bool regular = true;
  for (int v : internal)
    if (t.degree(v) != k) {
      regular = false;
      break;
    }
  if (regular) c.k_regular = k;
  return c;
}

bool verify_path_decomposition(const Tree& t, const PathDecomposition& d) {
  int m = t.num_vertices();
  std::vector<int> first(m, -1), last(m, -1), count(m, 0);
  for (size_t i = 0; i < d.bags.size(); ++i) {
    std::set<int> dedup(d.bags[i].begin(), d.bags[i].end());
    if (dedup.size() != d.bags[i].size()) return false;
    for (int v : d.bags[i]) {
      if (v < 0 || v >= m) return false;
      if (first[v] == -1) first[v] = static_cast<int>(i);
      last[v] = static_cast<int>(i);
      ++count[v];
    }
  }
  for (int v = 0; v < m; ++v) {
    if (first[v] == -1) return false;
    if (count[v] != last[v] - first[v] + 1) return false;  // contiguity
  }
  for (auto [u, v] : t.edges()) {
    bool covered = false;
    for (const auto& bag : d.bags) {
      bool has_u = false, has_v = false;
      for (int x : bag) {
        has_u |= x == u;
        has_v |= x == v;
      }
      if (has_u && has_v) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Pathwidth.
//
// Uses the decomposition-sweep characterization: for j >= 1, pw(T) <= j iff
// T contains a path P such that every component of T - V(P) has pathwidth
// <= j - 1. (Given a width-j decomposition, the bags met by a path from a
// first-bag vertex to a last-bag vertex cover the whole sequence, so each
// off-path component loses one slot per bag; conversely gluing the
// components' decompositions along P, with the current path vertex added to
// every bag, stays within width j.) Every component that ever arises is a
// directed subtree "hanging at u away from v", so their pathwidths are
// memoized per oriented edge.
// ---------------------------------------------------------------------------
namespace {

class PathwidthSolver {
 public:
  explicit PathwidthSolver(const Tree& t)
      : t_(t), memo_(static_cast<size_t>(t.num_vertices()) * t.num_vertices(), -1) {}

  std::pair<int, PathDecomposition> solve() {
    int m = t_.num_vertices();
    if (m == 1) return {0, PathDecomposition{{{0}}}};
    std::vector<int> all(m);
    for (int v = 0; v < m; ++v) all[v] = v;
    int width = 1;
    while (!find_path(all, -1, width)) ++width;
    PathDecomposition d = decompose(all, -1, width);
    return {width, d};
  }

  /// Pathwidth of the subtree hanging at u away from v (v = -1: whole tree).
  int subtree_pw(int u, int v) {
    size_t key = static_cast<size_t>(u) * t_.num_vertices() + (v < 0 ? u : v);
    if (v >= 0 && memo_[key] >= 0) return memo_[key];
    std::vector<int> verts = subtree_vertices(u, v);
    int width = 0;
    if (verts.size() > 1) {
      width = 1;
      while (!find_path(verts, v, width)) ++width;
    }
    if (v >= 0) memo_[key] = width;
    return width;
  }

 private:
  std::vector<int> subtree_vertices(int u, int v) const {
    std::vector<int> verts;
    std::vector<int> stack{u};
    std::vector<int> from{v};
    while (!stack.empty()) {
      int w = stack.back();
      int f = from.back();
      stack.pop_back();
      from.pop_back();
      verts.push_back(w);
      for (int x : t_.neighbors(w))
        if (x != f) {
          stack.push_back(x);
          from.push_back(w);
        }
    }
    std::sort(verts.begin(), verts.end());
    return verts;
  }

  // Neighbors of w inside the subtree cut off at `excluded`. Only the
  // subtree's attachment vertex is adjacent to `excluded`, so filtering the
  // single vertex is enough.
  std::vector<int> inside_neighbors(int w, int excluded) const {
    std::vector<int> out;
    for (int x : t_.neighbors(w))
      if (x != excluded) out.push_back(x);
    return out;
  }

  // Directions from w whose hanging subtree needs width >= j.
  std::vector<int> bad_directions(int w, int excluded, int j) {
    std::vector<int> bad;
    for (int x : inside_neighbors(w, excluded))
      if (subtree_pw(x, w) >= j) bad.push_back(x);
    return bad;
  }

  // A path P in the subtree such that every component of subtree - V(P) has
  // pathwidth <= j - 1, if one exists. P is valid iff each of its vertices
  // has all its heavy directions along the path.
  std::optional<std::vector<int>> find_path_impl(const std::vector<int>& verts,
                                                 int excluded, int j) {
    std::map<int, std::vector<int>> bad;
    std::vector<int> heavy2;
    for (int w : verts) {
      bad[w] = bad_directions(w, excluded, j);
      if (bad[w].size() >= 3) return std::nullopt;
      if (bad[w].size() == 2) heavy2.push_back(w);
    }
    auto extend = [&](int start, int came) -> std::optional<std::vector<int>> {
      std::vector<int> ext;
      int cur = start, prev = came;
      while (true) {
        std::vector<int> rest;
        for (int x : bad[cur])
          if (x != prev) rest.push_back(x);
        if (rest.empty()) return ext;
        if (rest.size() >= 2) return std::nullopt;
        ext.push_back(rest[0]);
        prev = cur;
        cur = rest[0];
      }
    };
    if (heavy2.empty()) {
      for (int w : verts)
        if (bad[w].empty()) return std::vector<int>{w};
      // every vertex has exactly one heavy direction: march from the
      // smallest vertex; the walk always closes at a leaf or a mutual pair
      int w0 = verts.front();
      std::vector<int> path{w0};
      auto ext = extend(w0, -1);
      path.insert(path.end(), ext->begin(), ext->end());
      return path;
    }
    // Vertices with two heavy directions are forced interior path vertices,
    // so they must all lie on one tree path; take the farthest pair.
    int e1 = heavy2[0], e2 = heavy2[0];
    if (heavy2.size() >= 2) {
      int best = -1;
      for (size_t a = 0; a < heavy2.size(); ++a)
        for (size_t b = a + 1; b < heavy2.size(); ++b) {
          int d = static_cast<int>(t_.path_between(heavy2[a], heavy2[b]).size());
          if (d > best) {
            best = d;
            e1 = heavy2[a];
            e2 = heavy2[b];
          }
        }
    }
    std::vector<int> trunk = t_.path_between(e1, e2);
    std::vector<char> on_trunk(t_.num_vertices(), 0);
    for (int v : trunk) on_trunk[v] = 1;
    for (int w : heavy2)
      if (!on_trunk[w]) return std::nullopt;
    for (size_t i = 0; i < trunk.size(); ++i) {
      int prev = i > 0 ? trunk[i - 1] : -1;
      int next = i + 1 < trunk.size() ? trunk[i + 1] : -1;
      if (i > 0 && i + 1 < trunk.size()) {
        for (int x : bad[trunk[i]])
          if (x != prev && x != next) return std::nullopt;
      }
    }
    std::optional<std::vector<int>> left, right;
    if (trunk.size() == 1) {
      int w = trunk[0];
      left = extend(w, bad[w][1]);
      right = extend(w, bad[w][0]);
    } else {
      left = extend(trunk.front(), trunk[1]);
      right = extend(trunk.back(), trunk[trunk.size() - 2]);
    }
    if (!left || !right) return std::nullopt;
    std::vector<int> path(left->rbegin(), left->rend());
    path.insert(path.end(), trunk.begin(), trunk.end());
    path.insert(path.end(), right->begin(), right->end());
    return path;
  }

  bool find_path(const std::vector<int>& verts, int excluded, int j) {
    return find_path_impl(verts, excluded, j).has_value();
  }

  PathDecomposition decompose(const std::vector<int>& verts, int excluded, int width) {
    if (verts.size() == 1) return PathDecomposition{{{verts.front()}}};
    auto path = find_path_impl(verts, excluded, width);
    PathDecomposition out;
    std::vector<char> on_path(t_.num_vertices(), 0);
    for (int v : *path) on_path[v] = 1;
    for (size_t i = 0; i < path->size(); ++i) {
      int v = (*path)[i];
      for (int x : inside_neighbors(v, excluded)) {
        if (on_path[x]) continue;
        auto sub_verts = subtree_vertices(x, v);
        PathDecomposition sub = decompose(sub_verts, v, subtree_pw(x, v));
        for (auto& bag : sub.bags) {
          bag.push_back(v);
          std::sort(bag.begin(), bag.end());
          out.bags.push_back(std::move(bag));
        }
      }
      if (i + 1 < path->size()) {
        std::vector<int> bag{v, (*path)[i + 1]};
        std::sort(bag.begin(), bag.end());
        out.bags.push_back(std::move(bag));
      }
    }
    return out;
  }

  const Tree& t_;
  std::vector<int> memo_;
};

}  // namespace

std::pair<int, PathDecomposition> pathwidth(const Tree& t) {
  PathwidthSolver solver(t);
  auto [width, d] = solver.solve();
  return {width, lemma1_transform(t, d)};
}

PathDecomposition lemma1_transform(const Tree& t, const PathDecomposition& d) {
  if (!verify_path_decomposition(t, d))
    fail(ErrorCode::InvalidDecomposition, "not a path decomposition of the tree");
  PathDecomposition out = d;
  for (auto [a, b] : t.edges()) {
    size_t i = 0;
    for (; i < out.bags.size(); ++i) {
      const auto& bag = out.bags[i];
      if (std::find(bag.begin(), bag.end(), a) != bag.end() &&
          std::find(bag.begin(), bag.end(), b) != bag.end())
        break;
    }
    int drop;
    if (i == 0) {
      drop = b;
    } else {
      const auto& prev = out.bags[i - 1];
      drop = std::find(prev.begin(), prev.end(), b) == prev.end() ? b : a;
    }
    std::vector<int> shrunk;
    for (int x : out.bags[i])
      if (x != drop) shrunk.push_back(x);
    out.bags.insert(out.bags.begin() + i, std::move(shrunk));
  }
  return out;
}

Tree tree_from_pruefer(const std::vector<int>& seq, int m) {
  if (m == 1) {
    if (!seq.empty()) fail(ErrorCode::SizeMismatch, "sequence must be empty for m = 1");
    return Tree(1, {});
  }
  if (static_cast<int>(seq.size()) != m - 2)
    fail(ErrorCode::SizeMismatch, "sequence must have length m - 2");
  std::vector<int> degree(m, 1);
  for (int v : seq) {
    if (v < 0 || v >= m) fail(ErrorCode::IndexOutOfRange, "sequence value out of range");
    ++degree[v];
  }
  std::set<int> current_leaves;
  for (int v = 0; v < m; ++v)
    if (degree[v] == 1) current_leaves.insert(v);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m - 1);
  for (int v : seq) {
    int leaf = *current_leaves.begin();
    current_leaves.erase(current_leaves.begin());
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) current_leaves.insert(v);
  }
  int a = *current_leaves.begin();
  int b = *std::next(current_leaves.begin());
  edges.emplace_back(a, b);
  return Tree(m, std::move(edges));
}

}  // namespace treepeak
