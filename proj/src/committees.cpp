#include "treepeak/committees.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "treepeak/nice_trees.hpp"

namespace treepeak {

namespace {

constexpr Score kMinScore = std::numeric_limits<Score>::min();

void check_k(const Profile& p, int k) {
  if (k < 1 || k > p.num_candidates())
    fail(ErrorCode::InvalidK, "committee size must be in [1, m]");
}

void check_single_peaked(const Profile& p, const Tree& t) {
  if (!is_single_peaked_on(p, t))
    fail(ErrorCode::NotSinglePeakedOnTree,
         "profile is not single-peaked on the given tree");
}

long long committee_count(int m, int k) {
  // C(m, k), saturating well below overflow
  long long result = 1;
  for (int i = 1; i <= k; ++i) {
    if (result > (std::numeric_limits<long long>::max() / (m - i + 1)))
      return std::numeric_limits<long long>::max();
    result = result * (m - i + 1) / i;
  }
  return result;
}

Committee pad_committee(std::vector<Candidate> members, int k, int m) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Candidate c = 0; static_cast<int>(members.size()) < k && c < m; ++c)
    if (!std::binary_search(members.begin(), members.end(), c)) {
      members.insert(std::upper_bound(members.begin(), members.end(), c), c);
    }
  return make_committee(std::move(members));
}

Score committee_score(const Profile& p, const ScoringFunction& mu,
                      const Committee& w, CCVariant variant) {
  return variant == CCVariant::utilitarian ? utilitarian_score(p, mu, w)
                                           : egalitarian_score(p, mu, w);
}

double route_cost_few_leaves(int m, int lambda) {
  double cost = 1;
  for (int i = 0; i < lambda; ++i) cost = std::min(cost * m, 1e30);
  return cost;
}

double route_cost_few_internal(int k, int eta) {
  double cost = 1;
  for (int i = 0; i < eta; ++i) cost = std::min(cost * 2 * (k + 1), 1e30);
  return cost;
}

}  // namespace

HittingInstance::HittingInstance(Tree tree, std::vector<std::vector<Candidate>> families)
    : tree_(std::move(tree)), families_(std::move(families)) {
  for (auto& family : families_) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    if (family.empty())
      fail(ErrorCode::EmptySubset, "hitting-set family must be non-empty");
    if (!is_connected_in_tree(tree_, family))
      fail(ErrorCode::MalformedInput, "hitting-set family is not connected in the tree");
  }
}

std::vector<Candidate> tree_hitting_set(const HittingInstance& inst) {
  int m = inst.tree().num_vertices();
  std::vector<char> vertex_alive(m, 1);
  std::vector<int> degree(m);
  for (int v = 0; v < m; ++v) degree[v] = inst.tree().degree(v);
  std::vector<std::set<Candidate>> families;
  families.reserve(inst.families().size());
  for (const auto& f : inst.families()) families.emplace_back(f.begin(), f.end());
  std::vector<char> family_alive(families.size(), 1);
  std::vector<Candidate> hits;

  for (int step = 0; step < m; ++step) {
    Candidate a = -1;
    for (int v = 0; v < m && a == -1; ++v)
      if (vertex_alive[v] && degree[v] <= 1) a = v;
    bool forced = false;
    for (size_t i = 0; i < families.size() && !forced; ++i)
      forced = family_alive[i] && families[i].size() == 1 && *families[i].begin() == a;
    if (forced) {
      hits.push_back(a);
      for (size_t i = 0; i < families.size(); ++i)
        if (family_alive[i] && families[i].count(a)) family_alive[i] = 0;
    } else {
      for (size_t i = 0; i < families.size(); ++i)
        if (family_alive[i]) families[i].erase(a);
    }
    vertex_alive[a] = 0;
    for (int u : inst.tree().neighbors(a))
      if (vertex_alive[u]) --degree[u];
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

CCResult brute_force_cc(const Profile& p, const ScoringFunction& mu, int k,
                        CCVariant variant, const CCOptions& options) {
  check_k(p, k);
  int m = p.num_candidates();
  if (!options.force && committee_count(m, k) > options.max_committees)
    fail(ErrorCode::TooLarge, "C(m, k) exceeds the brute-force guard; pass force to override");
  std::vector<Candidate> members(k);
  for (int i = 0; i < k; ++i) members[i] = i;
  CCResult best;
  best.variant = variant;
  best.algorithm = "brute-force";
  best.score = kMinScore;
  while (true) {
    Committee w = make_committee(members);
    Score s = committee_score(p, mu, w, variant);
    if (s > best.score) {
      best.score = s;
      best.committee = std::move(w);
    }
    // next combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && members[i] == m - k + i) --i;
    if (i < 0) break;
    ++members[i];
    for (int j = i + 1; j < k; ++j) members[j] = members[j - 1] + 1;
  }
  return best;
}

CCResult egalitarian_cc_tree(const Profile& p, const Tree& t,
                             const ScoringFunction& mu, int k) {
  check_k(p, k);
  check_single_peaked(p, t);
  int m = p.num_candidates();
  std::vector<Score> values;
  for (int i = 0; i < p.num_voters(); ++i)
    for (Candidate c = 0; c < m; ++c) values.push_back(mu.value(p, i, c));
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (Score bound : values) {
    std::vector<std::vector<Candidate>> families(p.num_voters());
    for (int i = 0; i < p.num_voters(); ++i) {
      for (Candidate c : p.vote(i).ranking) {
        if (mu.value(p, i, c) < bound) break;
        families[i].push_back(c);
      }
    }
    auto hits = tree_hitting_set(HittingInstance(t, std::move(families)));
    if (static_cast<int>(hits.size()) > k) continue;
    CCResult result;
    result.variant = CCVariant::egalitarian;
    result.algorithm = "egalitarian-tree-hitting";
    result.committee = pad_committee(std::move(hits), k, m);
    result.score = egalitarian_score(p, mu, result.committee);
    return result;
  }
  fail(ErrorCode::TooLarge, "unreachable: the lowest bound is always feasible");
}

// ---------------------------------------------------------------------------
// Utilitarian DP over rooted subtrees (tractable in the leaf count).
// ---------------------------------------------------------------------------
namespace {

struct FewLeavesRun {
  const Profile& p;
  const ScoringFunction& mu;
  const Tree& t;
  int k;
  int root;

  std::vector<std::vector<int>> children;
  std::vector<int> order;  // post-order
  std::vector<int> tin, tout;
  std::vector<int> voter_top;

  // state[v][l]: best score over committees within v's subtree that
  // contain v and have at most l members, over the voters peaking there.
  std::vector<std::vector<Score>> value;
  struct Choice {
    enum Kind { kSingleton, kInherit, kSplit } kind = kSingleton;
    std::vector<int> anti_chain;
    std::vector<int> division;
  };
  std::vector<std::vector<Choice>> choice;

  FewLeavesRun(const Profile& p_, const ScoringFunction& mu_, const Tree& t_, int k_,
               int root_)
      : p(p_), mu(mu_), t(t_), k(k_), root(root_) {
    int m = t.num_vertices();
    children.assign(m, {});
    tin.assign(m, 0);
    tout.assign(m, 0);
    std::vector<int> parent(m, -1);
    int clock = 0;
    // iterative DFS: first visit assigns tin, re-visit assigns tout
    std::vector<std::pair<int, size_t>> frames{{root, 0}};
    tin[root] = clock++;
    while (!frames.empty()) {
      auto& [v, idx] = frames.back();
      if (idx == 0)
        for (int u : t.neighbors(v))
          if (u != parent[v]) {
            parent[u] = v;
            children[v].push_back(u);
          }
      if (idx < children[v].size()) {
        int u = children[v][idx++];
        tin[u] = clock++;
        frames.emplace_back(u, 0);
      } else {
        tout[v] = clock;
        order.push_back(v);
        frames.pop_back();
      }
    }
    voter_top.resize(p.num_voters());
    for (int i = 0; i < p.num_voters(); ++i) voter_top[i] = p.top(i);
    value.assign(m, std::vector<Score>(k + 1, kMinScore));
    choice.assign(m, std::vector<Choice>(k + 1));
  }

  bool in_subtree(int x, int v) const { return tin[v] <= tin[x] && tin[x] < tout[v]; }

  Score solve() {
    for (int v : order) process(v);
    return value[root][k];
  }

  void process(int v) {
    Score singleton = 0;
    for (int i = 0; i < p.num_voters(); ++i)
      if (in_subtree(voter_top[i], v)) singleton += mu.value(p, i, v);
    for (int l = 1; l <= k; ++l) {
      value[v][l] = singleton;
      choice[v][l].kind = Choice::kSingleton;
    }
    if (k >= 2 && !children[v].empty()) {
      std::vector<int> anti_chain;
      std::vector<int> queue = children[v];
      enumerate(v, queue, 0, anti_chain);
    }
    for (int l = 2; l <= k; ++l)
      if (value[v][l - 1] > value[v][l]) {
        value[v][l] = value[v][l - 1];
        choice[v][l].kind = Choice::kInherit;
      }
  }

  // Anti-chains of v's descendant forest: each pending root either joins
  // the anti-chain or is replaced by its children; no element may dominate
  // another, so every anti-chain is produced exactly once.
  void enumerate(int v, std::vector<int>& queue, size_t idx, std::vector<int>& anti_chain) {
    if (idx == queue.size()) {
      if (!anti_chain.empty()) evaluate(v, anti_chain);
      return;
    }
    int c = queue[idx];
    if (static_cast<int>(anti_chain.size()) < k - 1) {
      anti_chain.push_back(c);
      enumerate(v, queue, idx + 1, anti_chain);
      anti_chain.pop_back();
    }
    size_t appended = children[c].size();
    queue.insert(queue.end(), children[c].begin(), children[c].end());
    enumerate(v, queue, idx + 1, anti_chain);
    queue.resize(queue.size() - appended);
  }

  void evaluate(int v, const std::vector<int>& anti_chain) {
    int s = static_cast<int>(anti_chain.size());
    // voters peaking under v but under no anti-chain member are served by
    // their favorite among the anti-chain plus v itself
    Score base = 0;
    for (int i = 0; i < p.num_voters(); ++i) {
      int top = voter_top[i];
      if (!in_subtree(top, v)) continue;
      bool covered = false;
      for (int a : anti_chain)
        if (in_subtree(top, a)) {
          covered = true;
          break;
        }
      if (covered) continue;
      Candidate fav = v;
      for (int a : anti_chain)
        if (p.prefers(i, a, fav)) fav = a;
      base += mu.value(p, i, fav);
    }
    // knapsack over slots: parts >= 1 per anti-chain member
    int budget = k - 1;
    std::vector<std::vector<Score>> table(
        s + 1, std::vector<Score>(budget + 1, kMinScore));
    table[0][0] = 0;
    for (int j = 1; j <= s; ++j) {
      const auto& child_value = value[anti_chain[j - 1]];
      for (int b = j; b <= budget; ++b)
        for (int take = 1; take <= b - (j - 1); ++take) {
          if (table[j - 1][b - take] == kMinScore) continue;
          if (child_value[take] == kMinScore) continue;
          Score cand = table[j - 1][b - take] + child_value[take];
          if (cand > table[j][b]) table[j][b] = cand;
        }
    }
    for (int b = s; b <= budget; ++b) {
      if (table[s][b] == kMinScore) continue;
      Score total = base + table[s][b];
      if (total <= value[v][b + 1]) continue;
      value[v][b + 1] = total;
      Choice& ch = choice[v][b + 1];
      ch.kind = Choice::kSplit;
      ch.anti_chain = anti_chain;
      ch.division.assign(s, 0);
      int remaining = b;
      for (int j = s; j >= 1; --j) {
        const auto& child_value = value[anti_chain[j - 1]];
        for (int take = 1; take <= remaining - (j - 1); ++take) {
          if (table[j - 1][remaining - take] != kMinScore &&
              child_value[take] != kMinScore &&
              table[j - 1][remaining - take] + child_value[take] ==
                  table[j][remaining]) {
            ch.division[j - 1] = take;
            remaining -= take;
            break;
          }
        }
      }
    }
  }

  void reconstruct(int v, int l, std::vector<Candidate>& members) const {
    const Choice& ch = choice[v][l];
    switch (ch.kind) {
      case Choice::kSingleton:
        members.push_back(v);
        return;
      case Choice::kInherit:
        reconstruct(v, l - 1, members);
        return;
      case Choice::kSplit:
        members.push_back(v);
        for (size_t j = 0; j < ch.anti_chain.size(); ++j)
          reconstruct(ch.anti_chain[j], ch.division[j], members);
        return;
    }
  }
};

}  // namespace

CCResult utilitarian_cc_few_leaves(const Profile& p, const Tree& t,
                                   const ScoringFunction& mu, int k, int max_leaves) {
  check_k(p, k);
  check_single_peaked(p, t);
  if (static_cast<int>(leaves(t).size()) > max_leaves)
    fail(ErrorCode::TooManyLeaves, "tree has more leaves than the configured bound");
  Score best = kMinScore;
  std::vector<Candidate> best_members;
  for (int root = 0; root < t.num_vertices(); ++root) {
    FewLeavesRun run(p, mu, t, k, root);
    Score score = run.solve();
    if (score > best) {
      best = score;
      best_members.clear();
      run.reconstruct(root, k, best_members);
    }
  }
  CCResult result;
  result.variant = CCVariant::utilitarian;
  result.algorithm = "few-leaves-dp";
  result.committee = pad_committee(std::move(best_members), k, p.num_candidates());
  result.score = utilitarian_score(p, mu, result.committee);
  return result;
}

CCResult utilitarian_cc_few_internal_borda(const Profile& p, const Tree& t,
                                           const ScoringFunction& mu, int k,
                                           int max_internal) {
  check_k(p, k);
  check_single_peaked(p, t);
  if (!mu.is_borda_like())
    fail(ErrorCode::WrongScoringShape,
         "needs a positional vector with s1 = 0, s2 = -1, s3 <= -2");
  std::vector<int> internal = internal_vertices(t);
  int eta = static_cast<int>(internal.size());
  if (eta > max_internal)
    fail(ErrorCode::TooManyInternal, "tree has more internal vertices than the bound");

  CCResult result;
  result.variant = CCVariant::utilitarian;
  result.algorithm = "few-internal-borda";

  int m = p.num_candidates();
  if (eta == 0) {  // m <= 2: pick the best tiny committee directly
    CCOptions opts;
    CCResult brute = brute_force_cc(p, mu, k, CCVariant::utilitarian, opts);
    result.committee = std::move(brute.committee);
    result.score = brute.score;
    return result;
  }

  std::vector<int> plurality(m, 0);
  for (int i = 0; i < p.num_voters(); ++i) ++plurality[p.top(i)];
  // leaves around each internal vertex, best plurality first
  std::vector<std::vector<Candidate>> leaves_of(eta);
  for (int j = 0; j < eta; ++j) {
    for (int u : t.neighbors(internal[j]))
      if (t.degree(u) == 1) leaves_of[j].push_back(u);
    std::sort(leaves_of[j].begin(), leaves_of[j].end(), [&](Candidate a, Candidate b) {
      if (plurality[a] != plurality[b]) return plurality[a] > plurality[b];
      return a < b;
    });
  }
  std::vector<int> suffix_max(eta + 1, 0);
  for (int j = eta - 1; j >= 0; --j)
    suffix_max[j] = suffix_max[j + 1] + 1 + static_cast<int>(leaves_of[j].size());

  Score best = kMinScore;
  std::vector<Candidate> best_members;
  std::vector<Candidate> current;
  auto recurse = [&](auto&& self, int j, int used) -> void {
    if (j == eta) {
      if (used != k) return;
      Committee w = make_committee(current);
      Score s = utilitarian_score(p, mu, w);
      if (s > best || (s == best && w.members < best_members)) {
        best = s;
        best_members = w.members;
      }
      return;
    }
    for (int x = 0; x <= 1; ++x) {
      for (int take = 0; take <= static_cast<int>(leaves_of[j].size()); ++take) {
        int spent = x + take;
        if (used + spent > k) break;
        if (used + spent + suffix_max[j + 1] < k) continue;
        size_t mark = current.size();
        if (x) current.push_back(internal[j]);
        for (int q = 0; q < take; ++q) current.push_back(leaves_of[j][q]);
        self(self, j + 1, used + spent);
        current.resize(mark);
      }
    }
  };
  recurse(recurse, 0, 0);
  result.committee = make_committee(std::move(best_members));
  result.score = utilitarian_score(p, mu, result.committee);
  return result;
}

namespace {

CCResult dispatch_utilitarian(const Profile& p, const ScoringFunction& mu, int k,
                              const Tree& leafy, const Tree& compact,
                              const CCOptions& options) {
  int lambda = static_cast<int>(leaves(leafy).size());
  int eta = static_cast<int>(internal_vertices(compact).size());
  bool few_leaves_ok = lambda <= options.max_leaves;
  bool few_internal_ok = eta <= options.max_internal && mu.is_borda_like();
  if (few_leaves_ok && few_internal_ok) {
    if (route_cost_few_internal(k, eta) <
        route_cost_few_leaves(p.num_candidates(), lambda))
      few_leaves_ok = false;
  }
  if (few_leaves_ok)
    return utilitarian_cc_few_leaves(p, leafy, mu, k, options.max_leaves);
  if (few_internal_ok)
    return utilitarian_cc_few_internal_borda(p, compact, mu, k, options.max_internal);
  return brute_force_cc(p, mu, k, CCVariant::utilitarian, options);
}

}  // namespace

CCResult cc_auto(const Profile& p, const ScoringFunction& mu, int k,
                 CCVariant variant, const CCOptions& options) {
  check_k(p, k);
  auto d = build_attachment_digraph(p);
  if (!d) return brute_force_cc(p, mu, k, variant, options);
  if (variant == CCVariant::egalitarian) {
    Tree t = *trick_recognize(p);
    return egalitarian_cc_tree(p, t, mu, k);
  }
  Tree leafy = min_leaves_tree(*d);
  Tree compact = min_internal_tree(*d);
  return dispatch_utilitarian(p, mu, k, leafy, compact, options);
}

CCResult cc_with_tree(const Profile& p, const Tree& t, const ScoringFunction& mu,
                      int k, CCVariant variant, const CCOptions& options) {
  check_k(p, k);
  check_single_peaked(p, t);
  if (variant == CCVariant::egalitarian) return egalitarian_cc_tree(p, t, mu, k);
  return dispatch_utilitarian(p, mu, k, t, t, options);
}

}  // namespace treepeak
