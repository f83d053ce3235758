#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "treepeak/errors.hpp"

namespace treepeak {

/// Candidates are dense 0-based indices internally; external file formats
/// are 1-based and converted on ingestion.
using Candidate = int;

/// A strict total order over all candidates, most-preferred first.
struct Vote {
  std::vector<Candidate> ranking;
};

enum class ProfileFormat { plain, soc };

/// An election: n strict total orders over the same m candidates.
/// Immutable after construction; per-voter position tables are precomputed
/// so rank lookups are O(1).
class Profile {
 public:
  Profile(int m, std::vector<Vote> votes,
          std::vector<std::string> names = {});

  int num_candidates() const { return m_; }
  int num_voters() const { return static_cast<int>(votes_.size()); }
  const std::vector<Vote>& votes() const { return votes_; }
  const Vote& vote(int i) const { return votes_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  /// 1-based rank of candidate a in vote i.
  int pos(int voter, Candidate a) const;

  /// Candidate at the given 1-based rank in vote i.
  Candidate at_rank(int voter, int rank) const;

  /// True iff voter i strictly prefers a to b.
  bool prefers(int voter, Candidate a, Candidate b) const {
    return pos(voter, a) < pos(voter, b);
  }

  Candidate top(int voter) const { return votes_[voter].ranking.front(); }
  Candidate bottom(int voter) const { return votes_[voter].ranking.back(); }

  /// Most-, second-most- (absent for singleton subsets) and least-preferred
  /// candidates of voter i within a non-empty subset.
  std::tuple<Candidate, std::optional<Candidate>, Candidate> top_second_bottom(
      int voter, const std::vector<Candidate>& subset) const;

  Candidate top_in(int voter, const std::vector<Candidate>& subset) const;
  Candidate bottom_in(int voter, const std::vector<Candidate>& subset) const;

  /// B(i, S, a): the candidates of S that could be the tree neighbor of a
  /// as far as voter i is concerned. If a is not i's favorite in S this is
  /// everyone i prefers to a within S; otherwise it is the singleton of
  /// i's runner-up in S. Returned sorted ascending.
  std::vector<Candidate> b_set(int voter, const std::vector<Candidate>& subset,
                               Candidate a) const;

 private:
  int m_;
  std::vector<Vote> votes_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> pos_;  // pos_[i][c] = 0-based rank
};

/// restrict() result: the reindexed sub-profile plus the index mapping back
/// to the parent profile (to_parent[new index] = old index).
struct Restriction {
  Profile profile;
  std::vector<Candidate> to_parent;
};

/// Profile over a non-empty candidate subset with relative orders kept and
/// indices re-densified.
Restriction restrict(const Profile& p, const std::vector<Candidate>& subset);

/// Parse a profile from text. "plain": header "m n" followed by n
/// permutations of 1..m; '#' lines and blank lines ignored. "soc": '#'
/// metadata lines, a candidate-count line, candidate-name lines, then
/// count-prefixed ranking lines "count: c1,c2,...,cm" which are expanded
/// into that many identical voters.
Profile parse_profile(const std::string& text, ProfileFormat format);

}  // namespace treepeak
