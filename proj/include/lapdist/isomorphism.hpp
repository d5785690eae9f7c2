#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "lapdist/graph.hpp"

namespace lapdist {

/// Relabeling-invariant key of an isomorphism class: the graph6 string of
/// the relabeling whose upper-triangle adjacency bit string is
/// lexicographically smallest.
struct CanonicalForm {
  std::string bytes;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// perm with relabel(g, perm) equal to the canonical representative.
std::vector<Vertex> canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
/// The canonical representative itself (labels dropped).
Graph canonical_graph(const Graph& g);

/// Backtracking search for an isomorphism, pruned by degree and
/// neighbour-degree multisets. On success witness[v] is the image in h of g's vertex v.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);
bool are_isomorphic(const Graph& g, const Graph& h);
/// True iff `witness` maps g onto h edge for edge.
bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& witness);

}  // namespace lapdist
