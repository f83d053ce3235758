#include "treepeak/nice_trees.hpp"

#include <algorithm>

#include "treepeak/matching.hpp"

namespace treepeak {

namespace {

bool trivial_size(const AttachmentDigraph& d) { return d.digraph.num_vertices() <= 2; }

Tree unique_small_tree(int m) {
  return m == 1 ? Tree(1, {}) : Tree(2, {{0, 1}});
}

/// The forced part as a tree over local indices, plus the index maps.
struct ForcedPart {
  Tree tree;
  std::vector<int> to_candidate;      // local -> candidate
  std::vector<int> to_local;          // candidate -> local or -1
};

ForcedPart forced_part(const AttachmentDigraph& d) {
  std::vector<int> to_local(d.digraph.num_vertices(), -1);
  for (size_t i = 0; i < d.forced.size(); ++i) to_local[d.forced[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : d.digraph.arcs())
    if (to_local[a] >= 0 && to_local[b] >= 0)
      edges.emplace_back(to_local[a], to_local[b]);
  return {Tree(static_cast<int>(d.forced.size()), std::move(edges)), d.forced,
          std::move(to_local)};
}

AttachmentFunction forced_only_attachment(const AttachmentDigraph& d) {
  AttachmentFunction f;
  f.mapping.assign(d.digraph.num_vertices(), -1);
  for (Candidate a : d.forced)
    if (a != d.sink) f.mapping[a] = d.digraph.out_neighbors(a).front();
  return f;
}

/// Attachment function whose tree obeys per-candidate degree caps, if one
/// exists: unit arcs from a source through the attachment choices, with
/// each parent slot capacity cap - 1 (cap for the sink, which spends no
/// slot on a parent of its own).
std::optional<AttachmentFunction> attachment_with_degree_caps(
    const AttachmentDigraph& d, const std::vector<int>& caps) {
  int m = d.digraph.num_vertices();
  int source = 0, target = 1;
  auto left_node = [&](int a) { return 2 + a; };
  auto right_node = [&](int a) { return 2 + m + a; };
  std::vector<FlowArc> arcs;
  for (int a = 0; a < m; ++a) {
    if (a == d.sink) continue;
    arcs.push_back({source, left_node(a), 1});
  }
  std::vector<std::pair<size_t, std::pair<int, int>>> choice_arcs;
  for (auto [a, b] : d.digraph.arcs()) {
    choice_arcs.push_back({arcs.size(), {a, b}});
    arcs.push_back({left_node(a), right_node(b), 1});
  }
  for (int a = 0; a < m; ++a) {
    std::int64_t cap = a == d.sink ? caps[a] : caps[a] - 1;
    arcs.push_back({right_node(a), target, std::max<std::int64_t>(cap, 0)});
  }
  FlowResult flow = max_flow(2 + 2 * m, arcs, source, target);
  if (flow.value != m - 1) return std::nullopt;
  AttachmentFunction f;
  f.mapping.assign(m, -1);
  for (auto& [idx, arc] : choice_arcs)
    if (flow.arc_flow[idx] == 1) f.mapping[arc.first] = arc.second;
  return f;
}

}  // namespace

Tree min_internal_tree(const AttachmentDigraph& d) {
  if (trivial_size(d)) return unique_small_tree(d.digraph.num_vertices());
  AttachmentFunction f = forced_only_attachment(d);
  if (d.forced.size() == 2) {
    for (Candidate a : d.free) f.mapping[a] = d.sink;
  } else {
    ForcedPart fp = forced_part(d);
    for (Candidate a : d.free) {
      for (Candidate c : d.digraph.out_neighbors(a)) {
        if (fp.to_local[c] >= 0 && fp.tree.degree(fp.to_local[c]) >= 2) {
          f.mapping[a] = c;
          break;
        }
      }
    }
  }
  return tree_from_attachment(d, f);
}

Tree min_diameter_tree(const AttachmentDigraph& d) { return min_internal_tree(d); }

Tree min_leaves_tree(const AttachmentDigraph& d) {
  if (trivial_size(d)) return unique_small_tree(d.digraph.num_vertices());
  int m = d.digraph.num_vertices();
  Candidate start = -1;
  for (Candidate a : d.forced)
    if (a != d.sink && d.digraph.out_degree(a) == 1 &&
        d.digraph.out_neighbors(a).front() == d.sink) {
      start = a;
      break;
    }
  if (start == -1)
    fail(ErrorCode::IllegalAttachment, "no forced vertex attaches to the sink");
  AttachmentFunction f;
  f.mapping.assign(m, -1);
  f.mapping[start] = d.sink;
  std::vector<Candidate> left;  // everyone still needing a parent choice
  for (int a = 0; a < m; ++a)
    if (a != start && a != d.sink) left.push_back(a);
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < left.size(); ++i)
    for (Candidate b : d.digraph.out_neighbors(left[i]))
      edges.emplace_back(static_cast<int>(i), b);
  auto matching = max_bipartite_matching(static_cast<int>(left.size()), m, edges);
  for (auto [li, b] : matching) f.mapping[left[li]] = b;
  for (Candidate a : left)
    if (f.mapping[a] == -1) f.mapping[a] = d.digraph.out_neighbors(a).front();
  return tree_from_attachment(d, f);
}

std::optional<Tree> bounded_degree_tree(const AttachmentDigraph& d, int k) {
  if (k < 1) fail(ErrorCode::InvalidK, "degree bound must be >= 1");
  int m = d.digraph.num_vertices();
  if (m <= 2) {
    Tree t = unique_small_tree(m);
    if (max_degree(t) <= k) return t;
    return std::nullopt;
  }
  auto f = attachment_with_degree_caps(d, std::vector<int>(m, k));
  if (!f) return std::nullopt;
  return tree_from_attachment(d, *f);
}

std::pair<int, Tree> min_max_degree_tree(const AttachmentDigraph& d) {
  int m = d.digraph.num_vertices();
  if (m <= 2) {
    Tree t = unique_small_tree(m);
    return {max_degree(t), std::move(t)};
  }
  for (int k = 2;; ++k) {
    auto t = bounded_degree_tree(d, k);
    if (t) return {k, std::move(*t)};
  }
}

std::pair<Tree, PathDecomposition> min_pathwidth_tree(const AttachmentDigraph& d) {
  int m = d.digraph.num_vertices();
  if (m <= 2) {
    Tree t = unique_small_tree(m);
    auto [w, dec] = pathwidth(t);
    (void)w;
    return {std::move(t), std::move(dec)};
  }
  ForcedPart fp = forced_part(d);
  auto [w, local] = pathwidth(fp.tree);
  PathDecomposition dec;
  dec.bags.reserve(local.bags.size());
  for (auto& bag : local.bags) {
    std::vector<int> mapped;
    mapped.reserve(bag.size());
    for (int v : bag) mapped.push_back(fp.to_candidate[v]);
    std::sort(mapped.begin(), mapped.end());
    dec.bags.push_back(std::move(mapped));
  }
  AttachmentFunction f = forced_only_attachment(d);
  for (Candidate a : d.free) {
    auto [c1, c2] = two_forced_neighbors(d, a);
    size_t spot = dec.bags.size();
    Candidate parent = -1;
    for (Candidate c : {c1, c2}) {
      for (size_t i = 0; i < dec.bags.size(); ++i) {
        const auto& bag = dec.bags[i];
        if (static_cast<int>(bag.size()) <= w &&
            std::find(bag.begin(), bag.end(), c) != bag.end()) {
          spot = i;
          parent = c;
          break;
        }
      }
      if (parent != -1) break;
    }
    if (parent == -1)
      fail(ErrorCode::InvalidDecomposition, "no slack bag for either forced neighbor");
    f.mapping[a] = parent;
    std::vector<int> fresh = dec.bags[spot];
    fresh.push_back(a);
    std::sort(fresh.begin(), fresh.end());
    dec.bags.insert(dec.bags.begin() + spot + 1, std::move(fresh));
  }
  return {tree_from_attachment(d, f), std::move(dec)};
}

std::optional<Tree> find_path(const Profile& p) {
  auto d = build_attachment_digraph(p);
  if (!d) return std::nullopt;
  return bounded_degree_tree(*d, 2);
}

std::optional<Tree> find_star(const Profile& p) {
  int m = p.num_candidates();
  for (Candidate c = 0; c < m; ++c) {
    bool ok = true;
    for (int i = 0; i < p.num_voters() && ok; ++i) ok = p.pos(i, c) <= 2;
    if (!ok) continue;
    std::vector<std::pair<int, int>> edges;
    for (Candidate v = 0; v < m; ++v)
      if (v != c) edges.emplace_back(c, v);
    return Tree(m, std::move(edges));
  }
  return std::nullopt;
}

std::optional<Tree> find_caterpillar(const AttachmentDigraph& d) {
  if (trivial_size(d)) return unique_small_tree(d.digraph.num_vertices());
  if (!classify(forced_part(d).tree).caterpillar) return std::nullopt;
  return min_internal_tree(d);
}

std::optional<Tree> find_star_subdivision(const AttachmentDigraph& d) {
  int m = d.digraph.num_vertices();
  if (m <= 2) return unique_small_tree(m);
  for (Candidate center = 0; center < m; ++center) {
    std::vector<int> caps(m, 2);
    caps[center] = m - 1;
    auto f = attachment_with_degree_caps(d, caps);
    if (f) return tree_from_attachment(d, *f);
  }
  return std::nullopt;
}

}  // namespace treepeak
