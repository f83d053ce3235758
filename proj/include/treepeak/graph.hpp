#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "treepeak/profile.hpp"

namespace treepeak {

/// An undirected labeled tree on vertices 0..m-1. Edges are canonicalized
/// as (min, max) pairs sorted ascending so identical trees compare equal
/// and all emitted output is stable.
class Tree {
 public:
  Tree(int m, std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return m_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(int u, int v) const;

  /// Vertices of the unique u-v path, endpoints included.
  std::vector<int> path_between(int u, int v) const;

  bool operator==(const Tree& other) const {
    return m_ == other.m_ && edges_ == other.edges_;
  }

 private:
  int m_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

/// A digraph on vertices 0..m-1 with no self-loops; arcs kept sorted.
class Digraph {
 public:
  Digraph(int m, std::vector<std::pair<int, int>> arcs);

  int num_vertices() const { return m_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  const std::vector<int>& out_neighbors(int v) const { return out_.at(v); }
  int out_degree(int v) const { return static_cast<int>(out_.at(v).size()); }
  bool has_arc(int u, int v) const;

  /// The undirected graph obtained by forgetting arc orientations.
  std::vector<std::pair<int, int>> underlying_edges() const;

 private:
  int m_;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<std::vector<int>> out_;
};

/// A sequence of bags witnessing a pathwidth bound.
struct PathDecomposition {
  std::vector<std::vector<int>> bags;

  int width() const;
};

bool is_connected_in_tree(const Tree& t, const std::vector<int>& subset);

/// True iff every voter's top-initial segments are all connected in t.
bool is_single_peaked_on(const Profile& p, const Tree& t);

int diameter(const Tree& t);
std::vector<int> leaves(const Tree& t);
std::vector<int> internal_vertices(const Tree& t);
int max_degree(const Tree& t);

/// Tree-class membership tags. Trees on at most two vertices belong to all
/// four named classes by degenerate convention; k_regular is reported only
/// when there is at least one internal vertex.
struct TreeClasses {
  bool path = false;
  bool star = false;
  bool caterpillar = false;
  bool star_subdivision = false;
  std::optional<int> k_regular;
};

TreeClasses classify(const Tree& t);

/// Checks the two path-decomposition conditions (every edge inside some
/// bag, per-vertex occurrences contiguous) plus full vertex coverage.
bool verify_path_decomposition(const Tree& t, const PathDecomposition& d);

/// Minimum pathwidth and a witnessing decomposition. The returned
/// decomposition has already been run through lemma1_transform, so every
/// edge has an endpoint in some bag of size <= width.
std::pair<int, PathDecomposition> pathwidth(const Tree& t);

/// Width-preserving rewrite that inserts, per edge, a shrunken copy of the
/// first bag containing the edge so that one endpoint lands in a bag of
/// size <= width.
PathDecomposition lemma1_transform(const Tree& t, const PathDecomposition& d);

/// Decode a Pruefer sequence (values in [0, m)) into the labeled tree it
/// encodes; the sequence must have length m - 2 for m >= 2.
Tree tree_from_pruefer(const std::vector<int>& seq, int m);

}  // namespace treepeak
