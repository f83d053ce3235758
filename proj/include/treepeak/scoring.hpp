#pragma once

#include <cstdint>
#include <vector>

#include "treepeak/profile.hpp"

namespace treepeak {

using Score = std::int64_t;

/// A committee of k distinct candidates, stored sorted by index.
struct Committee {
  std::vector<Candidate> members;
  int k = 0;
};

Committee make_committee(std::vector<Candidate> members);

/// Voter utilities, normalized so every voter's top candidate scores 0 and
/// everything else is non-positive. Either one positional vector shared by
/// all voters or a full per-voter table indexed by rank.
class ScoringFunction {
 public:
  static ScoringFunction positional(std::vector<Score> vector);
  static ScoringFunction borda(int m);
  static ScoringFunction approval(int m, int r);
  static ScoringFunction table(std::vector<std::vector<Score>> rows);

  bool is_positional() const { return table_.empty(); }
  const std::vector<Score>& vector() const { return vector_; }
  int positions() const;

  /// mu(i, a): the utility voter i derives from being represented by a.
  Score value(const Profile& p, int voter, Candidate a) const;

  /// True for positional vectors of the shape (0, -1, s3, ...) with
  /// s3 <= -2, the shape required by the plurality-driven committee rule.
  bool is_borda_like() const;

 private:
  ScoringFunction() = default;
  std::vector<Score> vector_;
  std::vector<std::vector<Score>> table_;
};

/// Sum over voters of the score of each voter's favorite committee member.
Score utilitarian_score(const Profile& p, const ScoringFunction& mu,
                        const Committee& w);

/// Score of the worst-off voter's favorite committee member.
Score egalitarian_score(const Profile& p, const ScoringFunction& mu,
                        const Committee& w);

}  // namespace treepeak
