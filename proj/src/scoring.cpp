#include "treepeak/scoring.hpp"

#include <algorithm>
#include <cstdlib>

namespace treepeak {

namespace {

// Bounds the magnitude of score entries so n * max|s| stays inside int64
// for profiles within the ingestion size guard.
constexpr Score kMaxScoreMagnitude = Score(1) << 31;

void check_row(const std::vector<Score>& row) {
  if (row.empty()) fail(ErrorCode::WrongScoringShape, "empty scoring vector");
  if (row[0] != 0)
    fail(ErrorCode::WrongScoringShape, "top position must score 0");
  for (size_t j = 1; j < row.size(); ++j) {
    if (row[j] > row[j - 1])
      fail(ErrorCode::WrongScoringShape, "scores must be non-increasing in rank");
    if (row[j] > 0)
      fail(ErrorCode::WrongScoringShape, "scores below the top must be <= 0");
    if (std::llabs(row[j]) > kMaxScoreMagnitude)
      fail(ErrorCode::TooLarge, "score magnitude exceeds the supported range");
  }
}

}  // namespace

Committee make_committee(std::vector<Candidate> members) {
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    fail(ErrorCode::MalformedInput, "committee has repeated members");
  Committee w;
  w.k = static_cast<int>(members.size());
  w.members = std::move(members);
  return w;
}

ScoringFunction ScoringFunction::positional(std::vector<Score> vector) {
  check_row(vector);
  ScoringFunction mu;
  mu.vector_ = std::move(vector);
  return mu;
}

ScoringFunction ScoringFunction::borda(int m) {
  std::vector<Score> s(m);
  for (int j = 0; j < m; ++j) s[j] = -static_cast<Score>(j);
  return positional(std::move(s));
}

ScoringFunction ScoringFunction::approval(int m, int r) {
  if (r < 1 || r > m) fail(ErrorCode::WrongScoringShape, "approval radius out of range");
  std::vector<Score> s(m, -1);
  std::fill(s.begin(), s.begin() + r, 0);
  return positional(std::move(s));
}

ScoringFunction ScoringFunction::table(std::vector<std::vector<Score>> rows) {
  if (rows.empty()) fail(ErrorCode::WrongScoringShape, "empty scoring table");
  for (const auto& row : rows) {
    check_row(row);
    if (row.size() != rows[0].size())
      fail(ErrorCode::SizeMismatch, "scoring table rows have unequal length");
  }
  ScoringFunction mu;
  mu.table_ = std::move(rows);
  return mu;
}

int ScoringFunction::positions() const {
  return static_cast<int>(is_positional() ? vector_.size() : table_[0].size());
}

Score ScoringFunction::value(const Profile& p, int voter, Candidate a) const {
  int rank = p.pos(voter, a);
  if (rank > positions())
    fail(ErrorCode::SizeMismatch, "scoring function shorter than the profile");
  if (is_positional()) return vector_[rank - 1];
  if (voter >= static_cast<int>(table_.size()))
    fail(ErrorCode::SizeMismatch, "scoring table has fewer rows than voters");
  return table_[voter][rank - 1];
}

bool ScoringFunction::is_borda_like() const {
  if (!is_positional()) return false;
  const auto& s = vector_;
  if (s.size() >= 2 && s[1] != -1) return false;
  if (s.size() >= 3 && s[2] > -2) return false;
  return true;
}

Score utilitarian_score(const Profile& p, const ScoringFunction& mu,
                        const Committee& w) {
  if (w.members.empty()) fail(ErrorCode::EmptySubset, "empty committee");
  Score total = 0;
  for (int i = 0; i < p.num_voters(); ++i)
    total += mu.value(p, i, p.top_in(i, w.members));
  return total;
}

Score egalitarian_score(const Profile& p, const ScoringFunction& mu,
                        const Committee& w) {
  if (w.members.empty()) fail(ErrorCode::EmptySubset, "empty committee");
  Score worst = 0;
  for (int i = 0; i < p.num_voters(); ++i)
    worst = std::min(worst, mu.value(p, i, p.top_in(i, w.members)));
  return worst;
}

}  // namespace treepeak
