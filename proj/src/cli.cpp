#include "treepeak/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "treepeak/committees.hpp"
#include "treepeak/graph.hpp"
#include "treepeak/nice_trees.hpp"
#include "treepeak/profile.hpp"
#include "treepeak/recognition.hpp"
#include "treepeak/scoring.hpp"

namespace treepeak::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooLarge:
    case ErrorCode::TooManyLeaves:
    case ErrorCode::TooManyInternal:
      return kExitGuard;
    default:
      return kExitUsage;
  }
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) fail(ErrorCode::MalformedInput, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

ProfileFormat parse_format(const std::string& name) {
  if (name == "plain") return ProfileFormat::plain;
  if (name == "soc") return ProfileFormat::soc;
  fail(ErrorCode::MalformedInput, "unknown format '" + name + "'");
}

Profile load_profile(const std::string& path, const std::string& format,
                     std::istream& in) {
  return parse_profile(read_input(path, in), parse_format(format));
}

Tree load_tree(const std::string& path, int m, std::istream& in) {
  std::istringstream text(read_input(path, in));
  std::string line;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(text, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    long long u, v;
    if (!(fields >> u)) continue;
    if (!(fields >> v)) fail(ErrorCode::MalformedInput, "tree line needs two vertices");
    if (u < 1 || u > m || v < 1 || v > m)
      fail(ErrorCode::IndexOutOfRange, "tree vertex out of range 1.." + std::to_string(m));
    edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  return Tree(m, std::move(edges));
}

ScoringFunction parse_score(const std::string& spec, int m) {
  if (spec == "borda") return ScoringFunction::borda(m);
  if (spec.rfind("approval:", 0) == 0) {
    int r = 0;
    try {
      r = std::stoi(spec.substr(9));
    } catch (const std::exception&) {
      fail(ErrorCode::MalformedInput, "bad approval radius in '" + spec + "'");
    }
    return ScoringFunction::approval(m, r);
  }
  if (spec.rfind("vector:", 0) == 0) {
    std::vector<Score> values;
    std::istringstream fields(spec.substr(7));
    std::string token;
    while (std::getline(fields, token, ',')) {
      try {
        values.push_back(std::stoll(token));
      } catch (const std::exception&) {
        fail(ErrorCode::MalformedInput, "bad score entry '" + token + "'");
      }
    }
    if (static_cast<int>(values.size()) != m)
      fail(ErrorCode::SizeMismatch, "score vector length must equal the candidate count");
    return ScoringFunction::positional(std::move(values));
  }
  fail(ErrorCode::MalformedInput, "unknown score '" + spec + "'");
}

json edges_json(const Tree& t) {
  json out = json::array();
  for (auto [u, v] : t.edges()) out.push_back({u + 1, v + 1});
  return out;
}

void print_tree(std::ostream& out, const Tree& t) {
  for (auto [u, v] : t.edges()) out << u + 1 << " " << v + 1 << "\n";
}

std::string tree_line(const Tree& t) {
  std::string line;
  for (auto [u, v] : t.edges()) {
    if (!line.empty()) line += ' ';
    line += std::to_string(u + 1) + "-" + std::to_string(v + 1);
  }
  return line;
}

void emit(std::ostream& out, bool as_json, const json& payload,
          const std::string& text) {
  if (as_json)
    out << payload.dump() << "\n";
  else
    out << text;
}

struct CommonArgs {
  std::string file;
  std::string format = "plain";
  bool as_json = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_file = true) {
  if (with_file)
    cmd->add_option("file", args.file, "profile file (stdin when omitted)");
  cmd->add_option("--format", args.format, "profile format: plain or soc")
      ->check(CLI::IsMember({"plain", "soc"}));
  cmd->add_flag("--json", args.as_json, "emit a single JSON object");
}

int cmd_recognize(const CommonArgs& args, std::istream& in, std::ostream& out) {
  Profile p = load_profile(args.file, args.format, in);
  auto tree = trick_recognize(p);
  if (!tree) {
    emit(out, args.as_json, json{{"tree_edges", nullptr}}, "none\n");
    return kExitNegative;
  }
  std::ostringstream text;
  print_tree(text, *tree);
  emit(out, args.as_json, json{{"tree_edges", edges_json(*tree)}}, text.str());
  return kExitOk;
}

int cmd_digraph(const CommonArgs& args, std::istream& in, std::ostream& out) {
  Profile p = load_profile(args.file, args.format, in);
  auto d = build_attachment_digraph(p);
  if (!d) {
    emit(out, args.as_json, json{{"arcs", nullptr}}, "none\n");
    return kExitNegative;
  }
  std::ostringstream text;
  json arcs = json::array();
  for (auto [a, b] : d->digraph.arcs()) {
    text << a + 1 << " -> " << b + 1 << "\n";
    arcs.push_back({a + 1, b + 1});
  }
  text << "sink: " << d->sink + 1 << "\n";
  auto list = [&text](const char* label, const std::vector<Candidate>& items) {
    text << label << ":";
    for (Candidate c : items) text << " " << c + 1;
    text << "\n";
  };
  list("forced", d->forced);
  list("free", d->free);
  json forced = json::array(), free_list = json::array();
  for (Candidate c : d->forced) forced.push_back(c + 1);
  for (Candidate c : d->free) free_list.push_back(c + 1);
  emit(out, args.as_json,
       json{{"arcs", arcs}, {"sink", d->sink + 1}, {"forced", forced}, {"free", free_list}},
       text.str());
  return kExitOk;
}

int cmd_count(const CommonArgs& args, std::istream& in, std::ostream& out) {
  Profile p = load_profile(args.file, args.format, in);
  auto d = build_attachment_digraph(p);
  std::string digits = d ? count_trees(*d).get_str() : "0";
  emit(out, args.as_json, json{{"count", digits}}, digits + "\n");
  return d ? kExitOk : kExitNegative;
}

int cmd_enumerate(const CommonArgs& args, long long limit, bool has_limit,
                  std::istream& in, std::ostream& out) {
  Profile p = load_profile(args.file, args.format, in);
  auto d = build_attachment_digraph(p);
  if (!d) {
    emit(out, args.as_json, json{{"trees", json::array()}}, "");
    return kExitNegative;
  }
  TreeEnumerator it(*d);
  json trees = json::array();
  std::ostringstream text;
  long long produced = 0;
  while (!has_limit || produced < limit) {
    auto t = it.next();
    if (!t) break;
    ++produced;
    if (args.as_json)
      trees.push_back(edges_json(*t));
    else
      text << tree_line(*t) << "\n";
  }
  emit(out, args.as_json, json{{"trees", trees}}, text.str());
  return kExitOk;
}

int cmd_find_tree(const CommonArgs& args, const std::string& objective,
                  std::istream& in, std::ostream& out) {
  Profile p = load_profile(args.file, args.format, in);
  std::optional<Tree> tree;
  std::optional<PathDecomposition> decomposition;
  if (objective == "star") {
    tree = find_star(p);
  } else if (objective == "path") {
    tree = find_path(p);
  } else {
    auto d = build_attachment_digraph(p);
    if (d) {
      if (objective == "min-leaves") tree = min_leaves_tree(*d);
      else if (objective == "min-internal") tree = min_internal_tree(*d);
      else if (objective == "min-diameter") tree = min_diameter_tree(*d);
      else if (objective == "min-degree") tree = min_max_degree_tree(*d).second;
      else if (objective == "caterpillar") tree = find_caterpillar(*d);
      else if (objective == "star-subdivision") tree = find_star_subdivision(*d);
      else if (objective == "min-pathwidth") {
        auto [t, dec] = min_pathwidth_tree(*d);
        tree = std::move(t);
        decomposition = std::move(dec);
      }
    }
  }
  if (!tree) {
    emit(out, args.as_json, json{{"tree_edges", nullptr}}, "none\n");
    return kExitNegative;
  }
  std::ostringstream text;
  print_tree(text, *tree);
  json payload{{"tree_edges", edges_json(*tree)}};
  if (decomposition) {
    text << "width: " << decomposition->width() << "\n";
    json bags = json::array();
    for (const auto& bag : decomposition->bags) {
      json jb = json::array();
      bool first = true;
      for (int v : bag) {
        text << (first ? "" : " ") << v + 1;
        first = false;
        jb.push_back(v + 1);
      }
      text << "\n";
      bags.push_back(jb);
    }
    payload["width"] = decomposition->width();
    payload["bags"] = bags;
  }
  emit(out, args.as_json, payload, text.str());
  return kExitOk;
}

int cmd_cc(const CommonArgs& args, const std::string& variant_name,
           const std::string& score_spec, int k, const std::string& tree_file,
           bool force, std::istream& in, std::ostream& out) {
  Profile p = load_profile(args.file, args.format, in);
  ScoringFunction mu = parse_score(score_spec, p.num_candidates());
  CCVariant variant = variant_name == "egalitarian" ? CCVariant::egalitarian
                                                    : CCVariant::utilitarian;
  CCOptions options;
  options.force = force;
  CCResult result;
  if (tree_file.empty()) {
    result = cc_auto(p, mu, k, variant, options);
  } else {
    Tree t = load_tree(tree_file, p.num_candidates(), in);
    result = cc_with_tree(p, t, mu, k, variant, options);
  }
  std::ostringstream text;
  text << "score: " << result.score << "\n";
  text << "committee:";
  json committee = json::array();
  for (Candidate c : result.committee.members) {
    text << " " << c + 1;
    committee.push_back(c + 1);
  }
  text << "\n";
  text << "algorithm: " << result.algorithm << "\n";
  emit(out, args.as_json,
       json{{"score", result.score}, {"committee", committee}, {"algorithm", result.algorithm}},
       text.str());
  return kExitOk;
}

int cmd_verify(const CommonArgs& args, const std::string& tree_file, std::istream& in,
               std::ostream& out) {
  Profile p = load_profile(args.file, args.format, in);
  Tree t = load_tree(tree_file, p.num_candidates(), in);
  bool ok = is_single_peaked_on(p, t);
  emit(out, args.as_json, json{{"single_peaked", ok}}, ok ? "yes\n" : "no\n");
  return ok ? kExitOk : kExitNegative;
}

int cmd_gen(bool as_json, int m, int n, std::uint64_t seed, std::ostream& out) {
  auto [p, t] = random_sp_profile(m, n, seed);
  if (as_json) {
    json votes = json::array();
    for (const Vote& v : p.votes()) {
      json ranking = json::array();
      for (Candidate c : v.ranking) ranking.push_back(c + 1);
      votes.push_back(ranking);
    }
    emit(out, true,
         json{{"m", m}, {"n", n}, {"votes", votes}, {"tree_edges", edges_json(t)}}, "");
    return kExitOk;
  }
  out << m << " " << n << "\n";
  for (const Vote& v : p.votes()) {
    bool first = true;
    for (Candidate c : v.ranking) {
      out << (first ? "" : " ") << c + 1;
      first = false;
    }
    out << "\n";
  }
  out << "# tree\n";
  for (auto [u, v] : t.edges()) out << "# " << u + 1 << " " << v + 1 << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"single-peaked-on-a-tree toolkit"};
  app.require_subcommand(1);

  CommonArgs recognize_args, digraph_args, count_args, enumerate_args, find_args,
      cc_args, verify_args;

  auto* recognize = app.add_subcommand("recognize", "find one witnessing tree");
  add_common(recognize, recognize_args);

  auto* digraph = app.add_subcommand("digraph", "dump the attachment digraph");
  add_common(digraph, digraph_args);

  auto* count = app.add_subcommand("count", "count all witnessing trees");
  add_common(count, count_args);

  auto* enumerate = app.add_subcommand("enumerate", "list witnessing trees");
  long long limit = 0;
  auto* limit_opt = enumerate->add_option("--limit", limit, "stop after N trees");
  add_common(enumerate, enumerate_args);

  auto* find = app.add_subcommand("find-tree", "extract an optimal witnessing tree");
  std::string objective;
  find->add_option("--objective", objective, "what to optimize or which class to find")
      ->required()
      ->check(CLI::IsMember({"min-leaves", "min-internal", "min-diameter", "min-degree",
                             "min-pathwidth", "path", "star", "caterpillar",
                             "star-subdivision"}));
  add_common(find, find_args);

  auto* cc = app.add_subcommand("cc", "Chamberlin-Courant winning committee");
  std::string variant = "utilitarian", score_spec = "borda", tree_file;
  int k = 0;
  bool force = false;
  cc->add_option("--variant", variant, "utilitarian or egalitarian")
      ->check(CLI::IsMember({"utilitarian", "egalitarian"}));
  cc->add_option("--score", score_spec, "borda, approval:R or vector:s1,s2,...");
  cc->add_option("--k", k, "committee size")->required();
  cc->add_option("--tree", tree_file, "witnessing tree file (skips recognition)");
  cc->add_flag("--force", force, "override the brute-force size guard");
  add_common(cc, cc_args);

  auto* verify = app.add_subcommand("verify", "check single-peakedness on a tree");
  std::string verify_tree;
  verify->add_option("--tree", verify_tree, "tree file")->required();
  add_common(verify, verify_args);

  auto* gen = app.add_subcommand("gen", "emit a random single-peaked profile");
  int gen_m = 0, gen_n = 0;
  std::uint64_t gen_seed = 0;
  bool gen_json = false;
  gen->add_option("--m", gen_m, "candidate count")->required();
  gen->add_option("--n", gen_n, "voter count")->required();
  gen->add_option("--seed", gen_seed, "random seed")->required();
  gen->add_flag("--json", gen_json, "emit a single JSON object");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "error: MalformedInput: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (recognize->parsed()) return cmd_recognize(recognize_args, in, out);
    if (digraph->parsed()) return cmd_digraph(digraph_args, in, out);
    if (count->parsed()) return cmd_count(count_args, in, out);
    if (enumerate->parsed())
      return cmd_enumerate(enumerate_args, limit, limit_opt->count() > 0, in, out);
    if (find->parsed()) return cmd_find_tree(find_args, objective, in, out);
    if (cc->parsed())
      return cmd_cc(cc_args, variant, score_spec, k, tree_file, force, in, out);
    if (verify->parsed()) return cmd_verify(verify_args, verify_tree, in, out);
    if (gen->parsed()) return cmd_gen(gen_json, gen_m, gen_n, gen_seed, out);
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: MalformedInput: no command\n";
  return kExitUsage;
}

}  // namespace treepeak::cli
