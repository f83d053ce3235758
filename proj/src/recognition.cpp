#include "treepeak/recognition.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace treepeak {

namespace {

// Candidates of the current round that occur bottom-most in some vote,
// sorted ascending.
std::vector<Candidate> bottom_set(const Profile& p, const std::vector<Candidate>& current) {
  std::vector<Candidate> bottoms;
  for (int i = 0; i < p.num_voters(); ++i) bottoms.push_back(p.bottom_in(i, current));
  std::sort(bottoms.begin(), bottoms.end());
  bottoms.erase(std::unique(bottoms.begin(), bottoms.end()), bottoms.end());
  return bottoms;
}

std::vector<Candidate> intersect_b_sets(const Profile& p,
                                        const std::vector<Candidate>& current,
                                        Candidate a) {
  std::vector<Candidate> acc = p.b_set(0, current, a);
  for (int i = 1; i < p.num_voters() && !acc.empty(); ++i) {
    std::vector<Candidate> next = p.b_set(i, current, a);
    std::vector<Candidate> merged;
    std::set_intersection(acc.begin(), acc.end(), next.begin(), next.end(),
                          std::back_inserter(merged));
    acc = std::move(merged);
  }
  return acc;
}

// Orientation of the final-pair arc: from the candidate voter 1 ranks
// second within the pair to the one it ranks first.
std::pair<Candidate, Candidate> final_pair_arc(const Profile& p, Candidate x, Candidate y) {
  if (p.prefers(0, x, y)) return {y, x};
  return {x, y};
}

std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t n) {
  // rejection sampling keeps the draw unbiased and platform-independent
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace

bool AttachmentDigraph::is_forced(Candidate c) const {
  return std::binary_search(forced.begin(), forced.end(), c);
}

std::optional<Tree> trick_recognize(const Profile& p) {
  int m = p.num_candidates();
  std::vector<std::pair<int, int>> edges;
  std::vector<Candidate> current(m);
  for (int c = 0; c < m; ++c) current[c] = c;
  while (static_cast<int>(current.size()) >= 3) {
    std::vector<Candidate> removed = bottom_set(p, current);
    for (Candidate a : removed) {
      std::vector<Candidate> b = intersect_b_sets(p, current, a);
      if (b.empty()) return std::nullopt;
      edges.emplace_back(a, b.front());
    }
    std::vector<Candidate> next;
    std::set_difference(current.begin(), current.end(), removed.begin(), removed.end(),
                        std::back_inserter(next));
    current = std::move(next);
  }
  if (current.size() == 2) edges.emplace_back(current[0], current[1]);
  return Tree(m, std::move(edges));
}

std::optional<AttachmentDigraph> build_attachment_digraph(const Profile& p) {
  int m = p.num_candidates();
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> layers(m, 0);
  std::vector<Candidate> current(m);
  for (int c = 0; c < m; ++c) current[c] = c;
  int round = 1;
  while (static_cast<int>(current.size()) >= 3) {
    std::vector<Candidate> removed = bottom_set(p, current);
    for (Candidate a : removed) {
      std::vector<Candidate> b = intersect_b_sets(p, current, a);
      if (b.empty()) return std::nullopt;
      for (Candidate c : b) arcs.emplace_back(a, c);
      layers[a] = round;
    }
    std::vector<Candidate> next;
    std::set_difference(current.begin(), current.end(), removed.begin(), removed.end(),
                        std::back_inserter(next));
    current = std::move(next);
    ++round;
  }
  for (Candidate c : current) layers[c] = round;
  if (current.size() == 2) arcs.push_back(final_pair_arc(p, current[0], current[1]));

  AttachmentDigraph d{Digraph(m, std::move(arcs)), std::move(layers), round, 0, {}, {}};
  for (int c = 0; c < m; ++c) {
    if (d.digraph.out_degree(c) == 0) d.sink = c;
    if (d.digraph.out_degree(c) <= 1)
      d.forced.push_back(c);
    else
      d.free.push_back(c);
  }
  return d;
}

std::optional<std::string> AttachmentDigraph::validate() const {
  int m = digraph.num_vertices();
  // one sink, and it is the recorded one
  int sinks = 0;
  for (int c = 0; c < m; ++c)
    if (digraph.out_degree(c) == 0) ++sinks;
  if (sinks != 1 || digraph.out_degree(sink) != 0)
    return "digraph must have exactly one sink";
  // acyclic: Kahn peeling on out-degrees
  {
    std::vector<int> outdeg(m);
    std::vector<std::vector<int>> in(m);
    for (auto [a, b] : digraph.arcs()) {
      ++outdeg[a];
      in[b].push_back(a);
    }
    std::vector<int> stack;
    for (int c = 0; c < m; ++c)
      if (outdeg[c] == 0) stack.push_back(c);
    int seen = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++seen;
      for (int u : in[v])
        if (--outdeg[u] == 0) stack.push_back(u);
    }
    if (seen != m) return "digraph has a directed cycle";
  }
  // arcs point into strictly later layers; the final-pair arc is the one
  // exception (both endpoints live in the remainder layer)
  for (auto [a, b] : digraph.arcs()) {
    if (layers[a] == remainder_layer && layers[b] == remainder_layer) continue;
    if (layers[b] <= layers[a])
      return "arc " + std::to_string(a + 1) + "->" + std::to_string(b + 1) +
             " does not point into a later layer";
  }
  // circumtransitivity over the out-degree partition
  for (Candidate a : forced)
    for (Candidate b : digraph.out_neighbors(a))
      if (!is_forced(b)) return "forced vertex points at a free vertex";
  for (Candidate a : free)
    for (Candidate b : digraph.out_neighbors(a)) {
      if (is_forced(b)) continue;
      for (Candidate c : digraph.out_neighbors(b))
        if (!digraph.has_arc(a, c))
          return "missing transitive arc " + std::to_string(a + 1) + "->" +
                 std::to_string(c + 1);
    }
  // the forced part must be a tree
  {
    std::vector<int> forced_index(m, -1);
    for (size_t i = 0; i < forced.size(); ++i) forced_index[forced[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> forced_edges;
    for (auto [a, b] : digraph.arcs())
      if (forced_index[a] >= 0 && forced_index[b] >= 0)
        forced_edges.emplace_back(forced_index[a], forced_index[b]);
    try {
      Tree forced_tree(static_cast<int>(forced.size()), std::move(forced_edges));
    } catch (const Error&) {
      return "forced part is not a tree";
    }
  }
  // every free vertex has two adjacent forced out-neighbors
  for (Candidate a : free) {
    bool found = false;
    const auto& outs = digraph.out_neighbors(a);
    for (size_t i = 0; i < outs.size() && !found; ++i)
      for (size_t j = i + 1; j < outs.size() && !found; ++j) {
        Candidate x = outs[i], y = outs[j];
        if (is_forced(x) && is_forced(y) &&
            (digraph.has_arc(x, y) || digraph.has_arc(y, x)))
          found = true;
      }
    if (!found)
      return "free vertex " + std::to_string(a + 1) +
             " lacks two adjacent forced out-neighbors";
  }
  return std::nullopt;
}

mpz_class count_trees(const AttachmentDigraph& d) {
  mpz_class product = 1;
  for (int c = 0; c < d.digraph.num_vertices(); ++c)
    if (c != d.sink) product *= d.digraph.out_degree(c);
  return product;
}

Tree tree_from_attachment(const AttachmentDigraph& d, const AttachmentFunction& f) {
  int m = d.digraph.num_vertices();
  if (static_cast<int>(f.mapping.size()) != m)
    fail(ErrorCode::SizeMismatch, "attachment function has wrong size");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m - 1);
  for (int a = 0; a < m; ++a) {
    if (a == d.sink) continue;
    Candidate b = f.mapping[a];
    if (b < 0 || b >= m || !d.digraph.has_arc(a, b))
      fail(ErrorCode::IllegalAttachment,
           "(" + std::to_string(a + 1) + ", " + std::to_string(b + 1) + ") is not an arc");
    edges.emplace_back(a, b);
  }
  return Tree(m, std::move(edges));
}

TreeEnumerator::TreeEnumerator(const AttachmentDigraph& d) : d_(d) {
  for (int c = 0; c < d.digraph.num_vertices(); ++c)
    if (c != d.sink) non_sink_.push_back(c);
  choice_.assign(non_sink_.size(), 0);
}

std::optional<Tree> TreeEnumerator::next() {
  if (exhausted_) return std::nullopt;
  AttachmentFunction f;
  f.mapping.assign(d_.digraph.num_vertices(), -1);
  for (size_t i = 0; i < non_sink_.size(); ++i)
    f.mapping[non_sink_[i]] = d_.digraph.out_neighbors(non_sink_[i])[choice_[i]];
  Tree t = tree_from_attachment(d_, f);
  // odometer step, rightmost position fastest
  exhausted_ = true;
  for (size_t i = non_sink_.size(); i-- > 0;) {
    if (++choice_[i] < d_.digraph.out_degree(non_sink_[i])) {
      exhausted_ = false;
      break;
    }
    choice_[i] = 0;
  }
  return t;
}

std::vector<Tree> enumerate_trees(const AttachmentDigraph& d,
                                  std::optional<long long> limit) {
  std::vector<Tree> trees;
  TreeEnumerator it(d);
  while (!limit || static_cast<long long>(trees.size()) < *limit) {
    auto t = it.next();
    if (!t) break;
    trees.push_back(std::move(*t));
  }
  return trees;
}

std::pair<Candidate, Candidate> two_forced_neighbors(const AttachmentDigraph& d,
                                                     Candidate a) {
  if (a < 0 || a >= d.digraph.num_vertices())
    fail(ErrorCode::IndexOutOfRange, "candidate out of range");
  if (d.is_forced(a)) fail(ErrorCode::NotFree, "candidate is not a free vertex");
  const auto& outs = d.digraph.out_neighbors(a);  // sorted ascending
  for (size_t i = 0; i < outs.size(); ++i)
    for (size_t j = i + 1; j < outs.size(); ++j) {
      Candidate x = outs[i], y = outs[j];
      if (d.is_forced(x) && d.is_forced(y) &&
          (d.digraph.has_arc(x, y) || d.digraph.has_arc(y, x)))
        return {x, y};
    }
  fail(ErrorCode::NotFree, "no adjacent forced out-neighbor pair found");
}

std::pair<Profile, Tree> random_sp_profile(int m, int n, std::uint64_t seed) {
  if (m < 1 || n < 1) fail(ErrorCode::EmptyProfile, "need m >= 1 and n >= 1");
  std::mt19937_64 rng(seed);
  Tree tree = [&] {
    if (m == 1) return Tree(1, {});
    if (m == 2) return Tree(2, {{0, 1}});
    std::vector<int> seq(m - 2);
    for (int& v : seq) v = static_cast<int>(bounded_random(rng, m));
    return tree_from_pruefer(seq, m);
  }();
  std::vector<Vote> votes(n);
  for (int i = 0; i < n; ++i) {
    std::vector<char> taken(m, 0);
    std::vector<int> frontier;
    int peak = static_cast<int>(bounded_random(rng, m));
    votes[i].ranking.push_back(peak);
    taken[peak] = 1;
    for (int u : tree.neighbors(peak)) frontier.push_back(u);
    while (!frontier.empty()) {
      size_t pick = static_cast<size_t>(bounded_random(rng, frontier.size()));
      int c = frontier[pick];
      frontier[pick] = frontier.back();
      frontier.pop_back();
      votes[i].ranking.push_back(c);
      taken[c] = 1;
      for (int u : tree.neighbors(c))
        if (!taken[u]) frontier.push_back(u);
    }
  }
  return {Profile(m, std::move(votes)), std::move(tree)};
}

}  // namespace treepeak
