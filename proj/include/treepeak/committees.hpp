#pragma once

#include <string>
#include <vector>

#include "treepeak/graph.hpp"
#include "treepeak/recognition.hpp"
#include "treepeak/scoring.hpp"

namespace treepeak {

/// Minimum hitting set instance over the vertices of a tree: every family
/// must be a non-empty subset connected in the tree.
class HittingInstance {
 public:
  HittingInstance(Tree tree, std::vector<std::vector<Candidate>> families);

  const Tree& tree() const { return tree_; }
  const std::vector<std::vector<Candidate>>& families() const { return families_; }

 private:
  Tree tree_;
  std::vector<std::vector<Candidate>> families_;
};

/// Minimum-cardinality set of vertices meeting every family, found by
/// peeling leaves: a leaf is taken only when forced by a singleton family,
/// otherwise its parent covers everything it could.
std::vector<Candidate> tree_hitting_set(const HittingInstance& inst);

enum class CCVariant { utilitarian, egalitarian };

struct CCResult {
  Committee committee;
  Score score = 0;
  CCVariant variant = CCVariant::utilitarian;
  std::string algorithm;
};

struct CCOptions {
  /// Refuse brute force beyond this many committees unless force is set.
  long long max_committees = 10'000'000;
  bool force = false;
  int max_leaves = 8;
  int max_internal = 10;
};

/// Exhaustive committee search; ties go to the lexicographically smallest
/// member set. Serves as the oracle for all specialized routines.
CCResult brute_force_cc(const Profile& p, const ScoringFunction& mu, int k,
                        CCVariant variant, const CCOptions& options = {});

/// Egalitarian winner via a descending scan over attainable worst-case
/// utilities, checking each bound with a tree hitting set.
CCResult egalitarian_cc_tree(const Profile& p, const Tree& t,
                             const ScoringFunction& mu, int k);

/// Utilitarian winner by dynamic programming over rooted subtrees,
/// maximizing over anti-chains and slot divisions; exponential only in the
/// leaf count of t.
CCResult utilitarian_cc_few_leaves(const Profile& p, const Tree& t,
                                   const ScoringFunction& mu, int k,
                                   int max_leaves = 8);

/// Utilitarian winner for Borda-shaped positional scores by guessing, per
/// internal vertex, membership and a leaf quota filled greedily by
/// plurality; exponential only in the internal vertex count of t.
CCResult utilitarian_cc_few_internal_borda(const Profile& p, const Tree& t,
                                           const ScoringFunction& mu, int k,
                                           int max_internal = 10);

/// Recognition-backed dispatch: recognizes the profile, extracts a tree
/// fitting one of the parameterized algorithms, and falls back to guarded
/// brute force when none applies.
CCResult cc_auto(const Profile& p, const ScoringFunction& mu, int k,
                 CCVariant variant, const CCOptions& options = {});

/// Dispatch against a caller-supplied witnessing tree.
CCResult cc_with_tree(const Profile& p, const Tree& t, const ScoringFunction& mu,
                      int k, CCVariant variant, const CCOptions& options = {});

}  // namespace treepeak
