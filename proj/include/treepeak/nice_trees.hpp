#pragma once

#include <optional>
#include <utility>

#include "treepeak/graph.hpp"
#include "treepeak/recognition.hpp"

namespace treepeak {

/// Witnessing tree with the fewest internal vertices: forced vertices keep
/// their unique arc, free vertices are attached as leaves to an internal
/// vertex of the forced part.
Tree min_internal_tree(const AttachmentDigraph& d);

/// The same construction is diameter-optimal.
Tree min_diameter_tree(const AttachmentDigraph& d);

/// Witnessing tree with the fewest leaves, via a maximum matching between
/// attachable vertices and potential parents.
Tree min_leaves_tree(const AttachmentDigraph& d);

/// A witnessing tree with maximum degree <= k, or absent. Reduces to an
/// integral max-flow over the attachment choices.
std::optional<Tree> bounded_degree_tree(const AttachmentDigraph& d, int k);

/// Smallest achievable maximum degree and a witnessing tree.
std::pair<int, Tree> min_max_degree_tree(const AttachmentDigraph& d);

/// Witnessing tree of minimum pathwidth together with a decomposition of
/// that width, grown from a slack-aware decomposition of the forced part.
std::pair<Tree, PathDecomposition> min_pathwidth_tree(const AttachmentDigraph& d);

/// Class finders: absent when no witnessing tree of the class exists.
std::optional<Tree> find_path(const Profile& p);
std::optional<Tree> find_star(const Profile& p);
std::optional<Tree> find_caterpillar(const AttachmentDigraph& d);
std::optional<Tree> find_star_subdivision(const AttachmentDigraph& d);

}  // namespace treepeak
