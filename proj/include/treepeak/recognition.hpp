#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treepeak/graph.hpp"
#include "treepeak/profile.hpp"

namespace treepeak {

/// The dag of all legal leaf-attachment choices of a profile. Every tree
/// the profile is single-peaked on corresponds to picking one outgoing arc
/// per non-sink vertex (an attachment function), and vice versa.
struct AttachmentDigraph {
  Digraph digraph;
  /// Peeling round in which each candidate was removed; the final remainder
  /// (one or two candidates) carries the last round index.
  std::vector<int> layers;
  int remainder_layer = 0;
  Candidate sink = 0;
  std::vector<Candidate> forced;  // out-degree <= 1, sorted
  std::vector<Candidate> free;    // out-degree >= 2, sorted

  bool is_forced(Candidate c) const;

  /// Checks the structural guarantees: dag with a unique sink, arcs point
  /// to later layers (final-pair arc exempt), circumtransitivity, the
  /// forced part forming a tree, and two adjacent forced out-neighbors per
  /// free vertex. Returns an explanation for the first violation found.
  std::optional<std::string> validate() const;
};

/// One outgoing-arc choice per non-sink vertex; mapping[sink] = -1.
struct AttachmentFunction {
  std::vector<Candidate> mapping;
};

/// Leaf-peeling recognition: returns a tree the profile is single-peaked
/// on (always attaching to the smallest-index legal neighbor), or absent
/// if no such tree exists.
std::optional<Tree> trick_recognize(const Profile& p);

/// Records every attachment choice the recognition could make; absent iff
/// the profile is not single-peaked on any tree.
std::optional<AttachmentDigraph> build_attachment_digraph(const Profile& p);

/// |T(P)|: the product of the out-degrees of the non-sink vertices.
mpz_class count_trees(const AttachmentDigraph& d);

Tree tree_from_attachment(const AttachmentDigraph& d, const AttachmentFunction& f);

/// Streams T(f) over all attachment functions in lexicographic order of
/// the per-vertex out-neighbor choices; O(m) state per yielded tree.
class TreeEnumerator {
 public:
  explicit TreeEnumerator(const AttachmentDigraph& d);

  std::optional<Tree> next();

 private:
  const AttachmentDigraph& d_;
  std::vector<Candidate> non_sink_;
  std::vector<int> choice_;
  bool exhausted_ = false;
};

/// All witnessing trees, at most `limit` of them if given.
std::vector<Tree> enumerate_trees(const AttachmentDigraph& d,
                                  std::optional<long long> limit = std::nullopt);

/// For a free vertex a, the lexicographically smallest pair of forced
/// vertices {b, c} (returned sorted by index) with arcs a->b, a->c and an
/// arc between b and c.
std::pair<Candidate, Candidate> two_forced_neighbors(const AttachmentDigraph& d,
                                                     Candidate a);

/// A uniformly random labeled tree plus n votes grown peak-outward along
/// it; the profile is single-peaked on the tree by construction and the
/// output is a deterministic function of the seed.
std::pair<Profile, Tree> random_sp_profile(int m, int n, std::uint64_t seed);

}  // namespace treepeak
