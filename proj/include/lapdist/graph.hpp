#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lapdist {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Each row of the adjacency matrix is a bitset packed into 64-bit words.
/// Symmetry and loop-freeness are enforced on every mutation. Vertex labels
/// are optional metadata ("v3", "w1", ...) and never affect algorithms.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  bool has_edge(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<std::size_t> degree_sequence() const;
  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Packed adjacency row of v; bit (w % 64) of word (w / 64) is set iff vw is an edge.
  std::span<const std::uint64_t> row(Vertex v) const;
  std::size_t words_per_row() const noexcept { return words_; }

  // Mutation is only meant for building a graph before it is handed out.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Labels must be distinct and there must be exactly one per vertex.
  void set_labels(std::vector<std::string> labels);
  void clear_labels() noexcept { labels_.clear(); }
  /// Vertex carrying `label`; throws std::out_of_range when absent.
  Vertex vertex(std::string_view label) const;
  std::string label(Vertex v) const;

  /// Structural equality: same order and same edge set. Labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void check_vertex(Vertex v) const;
  std::uint64_t* row_ptr(Vertex v) { return bits_.data() + v * words_; }
  const std::uint64_t* row_ptr(Vertex v) const { return bits_.data() + v * words_; }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
};

// Constructors ---------------------------------------------------------------

Graph path(std::size_t n);
Graph complete(std::size_t n);
Graph empty_graph(std::size_t n);
/// K_{1,n-1} with the center at vertex 0.
Graph star(std::size_t n);
Graph from_edges(std::size_t n, std::span<const Edge> edges);

// Combinators ----------------------------------------------------------------

/// Vertices of h follow those of g (h's vertex i becomes g.order() + i).
/// Labels survive only when both inputs are labelled and the union stays unique.
Graph disjoint_union(const Graph& g, const Graph& h);
/// Disjoint union plus every edge between g and h.
Graph join(const Graph& g, const Graph& h);
Graph add_edges(const Graph& g, std::span<const Edge> pairs);
Graph delete_edge(const Graph& g, Edge e);
/// Subgraph induced by `vertices`, reindexed in the given order. Labels are kept.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
/// G - S for a vertex set S.
Graph delete_vertices(const Graph& g, std::span<const Vertex> vertices);
Graph complement(const Graph& g);
/// Graph h with h.has_edge(perm[u], perm[v]) iff g.has_edge(u, v).
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// Metrics --------------------------------------------------------------------

class DistanceMatrix {
 public:
  static constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t at(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  void set(Vertex u, Vertex v, std::size_t value) { d_[u * n_ + v] = value; }

 private:
  std::size_t n_;
  std::vector<std::size_t> d_;
};

DistanceMatrix distances(const Graph& g);
bool is_connected(const Graph& g);
std::size_t component_count(const Graph& g);
/// Throws std::domain_error for a disconnected graph.
std::size_t diameter(const Graph& g);

/// True iff every edge uv of g maps to an edge of h under `correspondence`
/// (g's vertex v corresponds to h's vertex correspondence[v]). An empty
/// correspondence means identity.
bool is_spanning_subgraph(const Graph& g, const Graph& h,
                          std::span<const Vertex> correspondence = {});

// graph6 ----------------------------------------------------------------------

inline constexpr std::size_t kGraph6MaxOrder = 258047;

std::string graph6_encode(const Graph& g);
/// Accepts an optional ">>graph6<<" prefix and trailing newline.
/// Throws std::invalid_argument on malformed input.
Graph graph6_decode(std::string_view line);

}  // namespace lapdist
