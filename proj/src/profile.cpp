#include "treepeak/profile.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace treepeak {

namespace {

// Largest profile we accept: keeps n * m * |score| comfortably inside
// int64 for every scoring function the library validates.
constexpr long long kMaxCells = 100'000'000;

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<std::string> significant_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!is_blank_or_comment(line)) lines.push_back(line);
  }
  return lines;
}

long long parse_int(const std::string& token, const char* what) {
  long long value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    fail(ErrorCode::MalformedInput,
         std::string("expected integer for ") + what + ", got '" + token + "'");
  return value;
}

std::vector<long long> split_ints(const std::string& line, char sep) {
  std::vector<long long> out;
  std::string token;
  std::istringstream in(line);
  while (std::getline(in, token, sep)) {
    size_t b = token.find_first_not_of(" \t");
    size_t e = token.find_last_not_of(" \t");
    if (b == std::string::npos) fail(ErrorCode::MalformedInput, "empty field in '" + line + "'");
    out.push_back(parse_int(token.substr(b, e - b + 1), "ranking entry"));
  }
  return out;
}

Vote vote_from_one_based(const std::vector<long long>& entries, int m) {
  if (static_cast<int>(entries.size()) != m)
    fail(ErrorCode::NotAPermutation,
         "vote lists " + std::to_string(entries.size()) + " candidates, expected " +
             std::to_string(m));
  Vote v;
  v.ranking.reserve(m);
  std::vector<char> seen(m, 0);
  for (long long e : entries) {
    if (e < 1 || e > m)
      fail(ErrorCode::NotAPermutation,
           "candidate " + std::to_string(e) + " out of range 1.." + std::to_string(m));
    if (seen[e - 1])
      fail(ErrorCode::NotAPermutation, "candidate " + std::to_string(e) + " repeated in vote");
    seen[e - 1] = 1;
    v.ranking.push_back(static_cast<Candidate>(e - 1));
  }
  return v;
}

Profile parse_plain(const std::vector<std::string>& lines) {
  if (lines.empty()) fail(ErrorCode::EmptyProfile, "no input");
  std::istringstream header(lines[0]);
  std::string mtok, ntok, rest;
  if (!(header >> mtok >> ntok) || (header >> rest))
    fail(ErrorCode::MalformedInput, "header must be 'm n'");
  long long m = parse_int(mtok, "candidate count");
  long long n = parse_int(ntok, "voter count");
  if (m < 1 || n < 1) fail(ErrorCode::EmptyProfile, "profile needs m >= 1 and n >= 1");
  if (m * n > kMaxCells) fail(ErrorCode::TooLarge, "profile exceeds the supported size");
  if (static_cast<long long>(lines.size()) - 1 != n)
    fail(ErrorCode::MalformedInput,
         "expected " + std::to_string(n) + " vote lines, found " +
             std::to_string(lines.size() - 1));
  std::vector<Vote> votes;
  votes.reserve(n);
  for (long long i = 0; i < n; ++i) {
    std::istringstream in(lines[i + 1]);
    std::vector<long long> entries;
    std::string tok;
    while (in >> tok) entries.push_back(parse_int(tok, "ranking entry"));
    votes.push_back(vote_from_one_based(entries, static_cast<int>(m)));
  }
  return Profile(static_cast<int>(m), std::move(votes));
}

Profile parse_soc(const std::vector<std::string>& lines) {
  if (lines.empty()) fail(ErrorCode::EmptyProfile, "no input");
  long long m = parse_int(lines[0], "candidate count");
  if (m < 1) fail(ErrorCode::EmptyProfile, "candidate count must be >= 1");
  if (static_cast<long long>(lines.size()) < 1 + m)
    fail(ErrorCode::MalformedInput, "missing candidate name lines");
  std::vector<std::string> names;
  names.reserve(m);
  for (long long i = 0; i < m; ++i) {
    const std::string& line = lines[1 + i];
    // Accept either a bare name or the "index,name" convention.
    size_t comma = line.find(',');
    bool indexed = false;
    if (comma != std::string::npos) {
      std::string head = line.substr(0, comma);
      size_t b = head.find_first_not_of(" \t");
      size_t e = head.find_last_not_of(" \t");
      if (b != std::string::npos) {
        std::string tok = head.substr(b, e - b + 1);
        long long idx = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), idx);
        if (ec == std::errc() && ptr == tok.data() + tok.size() && idx == i + 1) indexed = true;
      }
    }
    std::string name = indexed ? line.substr(comma + 1) : line;
    size_t b = name.find_first_not_of(" \t");
    size_t e = name.find_last_not_of(" \t");
    names.push_back(b == std::string::npos ? std::string() : name.substr(b, e - b + 1));
  }
  std::vector<Vote> votes;
  for (size_t li = 1 + m; li < lines.size(); ++li) {
    const std::string& line = lines[li];
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      fail(ErrorCode::MalformedInput, "ranking line must be 'count: c1,c2,...': '" + line + "'");
    long long count = parse_int(
        [&] {
          std::string head = line.substr(0, colon);
          size_t hb = head.find_first_not_of(" \t");
          size_t he = head.find_last_not_of(" \t");
          return hb == std::string::npos ? std::string() : head.substr(hb, he - hb + 1);
        }(),
        "vote count");
    if (count < 1) fail(ErrorCode::MalformedInput, "vote count must be >= 1");
    Vote v = vote_from_one_based(split_ints(line.substr(colon + 1), ','),
                                 static_cast<int>(m));
    if ((static_cast<long long>(votes.size()) + count) * m > kMaxCells)
      fail(ErrorCode::TooLarge, "profile exceeds the supported size");
    for (long long c = 0; c < count; ++c) votes.push_back(v);
  }
  if (votes.empty()) fail(ErrorCode::EmptyProfile, "no votes");
  return Profile(static_cast<int>(m), std::move(votes), std::move(names));
}

}  // namespace

Profile::Profile(int m, std::vector<Vote> votes, std::vector<std::string> names)
    : m_(m), votes_(std::move(votes)), names_(std::move(names)) {
  if (m_ < 1 || votes_.empty())
    fail(ErrorCode::EmptyProfile, "profile needs m >= 1 and n >= 1");
  if (!names_.empty() && static_cast<int>(names_.size()) != m_)
    fail(ErrorCode::SizeMismatch, "name list does not match candidate count");
  pos_.assign(votes_.size(), std::vector<int>(m_, -1));
  for (size_t i = 0; i < votes_.size(); ++i) {
    const auto& r = votes_[i].ranking;
    if (static_cast<int>(r.size()) != m_)
      fail(ErrorCode::NotAPermutation, "vote " + std::to_string(i + 1) + " has wrong length");
    for (int rank = 0; rank < m_; ++rank) {
      Candidate c = r[rank];
      if (c < 0 || c >= m_ || pos_[i][c] != -1)
        fail(ErrorCode::NotAPermutation,
             "vote " + std::to_string(i + 1) + " is not a permutation");
      pos_[i][c] = rank;
    }
  }
}

int Profile::pos(int voter, Candidate a) const {
  if (voter < 0 || voter >= num_voters() || a < 0 || a >= m_)
    fail(ErrorCode::IndexOutOfRange, "pos(): voter or candidate out of range");
  return pos_[voter][a] + 1;
}

Candidate Profile::at_rank(int voter, int rank) const {
  if (voter < 0 || voter >= num_voters() || rank < 1 || rank > m_)
    fail(ErrorCode::IndexOutOfRange, "at_rank(): voter or rank out of range");
  return votes_[voter].ranking[rank - 1];
}

std::tuple<Candidate, std::optional<Candidate>, Candidate>
Profile::top_second_bottom(int voter, const std::vector<Candidate>& subset) const {
  if (subset.empty()) fail(ErrorCode::EmptySubset, "top_second_bottom(): empty subset");
  Candidate best = -1, second = -1, worst = -1;
  int best_r = 0, second_r = 0, worst_r = 0;
  for (Candidate c : subset) {
    int r = pos(voter, c);
    if (best == -1 || r < best_r) {
      second = best;
      second_r = best_r;
      best = c;
      best_r = r;
    } else if (second == -1 || r < second_r) {
      second = c;
      second_r = r;
    }
    if (worst == -1 || r > worst_r) {
      worst = c;
      worst_r = r;
    }
  }
  if (subset.size() == 1) return {best, std::nullopt, worst};
  return {best, second, worst};
}

Candidate Profile::top_in(int voter, const std::vector<Candidate>& subset) const {
  return std::get<0>(top_second_bottom(voter, subset));
}

Candidate Profile::bottom_in(int voter, const std::vector<Candidate>& subset) const {
  return std::get<2>(top_second_bottom(voter, subset));
}

std::vector<Candidate> Profile::b_set(int voter, const std::vector<Candidate>& subset,
                                      Candidate a) const {
  if (subset.size() < 2) fail(ErrorCode::EmptySubset, "b_set(): need |subset| >= 2");
  if (std::find(subset.begin(), subset.end(), a) == subset.end())
    fail(ErrorCode::CandidateNotInSubset, "b_set(): candidate not in subset");
  auto [top, second, bottom] = top_second_bottom(voter, subset);
  (void)bottom;
  if (top == a) return {*second};
  std::vector<Candidate> out;
  int ra = pos(voter, a);
  for (Candidate c : subset)
    if (pos(voter, c) < ra) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

Restriction restrict(const Profile& p, const std::vector<Candidate>& subset) {
  if (subset.empty()) fail(ErrorCode::EmptySubset, "restrict(): empty subset");
  std::vector<Candidate> to_parent(subset);
  std::sort(to_parent.begin(), to_parent.end());
  to_parent.erase(std::unique(to_parent.begin(), to_parent.end()), to_parent.end());
  std::vector<int> to_child(p.num_candidates(), -1);
  for (size_t i = 0; i < to_parent.size(); ++i) {
    Candidate c = to_parent[i];
    if (c < 0 || c >= p.num_candidates())
      fail(ErrorCode::IndexOutOfRange, "restrict(): candidate out of range");
    to_child[c] = static_cast<int>(i);
  }
  std::vector<Vote> votes(p.num_voters());
  for (int i = 0; i < p.num_voters(); ++i) {
    votes[i].ranking.reserve(to_parent.size());
    for (Candidate c : p.vote(i).ranking)
      if (to_child[c] != -1) votes[i].ranking.push_back(to_child[c]);
  }
  std::vector<std::string> names;
  if (!p.names().empty()) {
    names.reserve(to_parent.size());
    for (Candidate c : to_parent) names.push_back(p.names()[c]);
  }
  return Restriction{Profile(static_cast<int>(to_parent.size()), std::move(votes),
                             std::move(names)),
                     std::move(to_parent)};
}

Profile parse_profile(const std::string& text, ProfileFormat format) {
  auto lines = significant_lines(text);
  return format == ProfileFormat::plain ? parse_plain(lines) : parse_soc(lines);
}

}  // namespace treepeak
