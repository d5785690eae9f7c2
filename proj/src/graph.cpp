#include "lapdist/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace lapdist {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

}  // namespace

Graph::Graph(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(n_));
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (row_ptr(u)[v / kWordBits] >> (v % kWordBits)) & 1U;
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(row_ptr(v)[w]);
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t word = row_ptr(v)[w];
    while (word != 0) {
      out.push_back(w * kWordBits + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> out(n_);
  for (Vertex v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  check_vertex(v);
  return {row_ptr(v), words_};
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) {
    throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " already present");
  }
  row_ptr(u)[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
  row_ptr(v)[u / kWordBits] |= std::uint64_t{1} << (u % kWordBits);
  ++m_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !has_edge(u, v)) {
    throw std::invalid_argument("no edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  row_ptr(u)[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
  row_ptr(v)[u / kWordBits] &= ~(std::uint64_t{1} << (u % kWordBits));
  --m_;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (labels.size() != n_) {
    throw std::invalid_argument("expected " + std::to_string(n_) + " labels, got " +
                                std::to_string(labels.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate vertex label '" + l + "'");
  }
  labels_ = std::move(labels);
}

Vertex Graph::vertex(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("no vertex labelled '" + std::string(label) + "'");
  return static_cast<Vertex>(it - labels_.begin());
}

std::string Graph::label(Vertex v) const {
  check_vertex(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

// Constructors ---------------------------------------------------------------

Graph path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path: order must be positive");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete(std::size_t n) {
  if (n == 0) throw std::invalid_argument("complete: order must be positive");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph star(std::size_t n) {
  if (n == 0) throw std::invalid_argument("star: order must be positive");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// Combinators ----------------------------------------------------------------

Graph disjoint_union(const Graph& g, const Graph& h) {
  const std::size_t off = g.order();
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + off, v + off);
  if (g.has_labels() && h.has_labels()) {
    std::vector<std::string> labels = g.labels();
    labels.insert(labels.end(), h.labels().begin(), h.labels().end());
    try {
      out.set_labels(std::move(labels));
    } catch (const std::invalid_argument&) {
      // Colliding labels: drop them rather than invent new names.
    }
  }
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

Graph add_edges(const Graph& g, std::span<const Edge> pairs) {
  Graph out = g;
  for (auto [u, v] : pairs) out.add_edge(u, v);
  return out;
}

Graph delete_edge(const Graph& g, Edge e) {
  Graph out = g;
  out.remove_edge(e.first, e.second);
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : vertices) {
    if (v >= g.order()) {
      throw std::out_of_range("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    }
    if (seen[v]) throw std::invalid_argument("induced_subgraph: repeated vertex");
    seen[v] = true;
  }
  Graph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
  if (g.has_labels()) {
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (Vertex v : vertices) labels.push_back(g.labels()[v]);
    out.set_labels(std::move(labels));
  }
  return out;
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<bool> drop(g.order(), false);
  for (Vertex v : vertices) {
    if (v >= g.order()) throw std::out_of_range("delete_vertices: vertex out of range");
    drop[v] = true;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!drop[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  if (g.has_labels()) out.set_labels(g.labels());
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<bool> hit(g.order(), false);
  for (Vertex v : perm) {
    if (v >= g.order() || hit[v]) throw std::invalid_argument("relabel: not a permutation");
    hit[v] = true;
  }
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  if (g.has_labels()) {
    std::vector<std::string> labels(g.order());
    for (Vertex v = 0; v < g.order(); ++v) labels[perm[v]] = g.labels()[v];
    out.set_labels(std::move(labels));
  }
  return out;
}

// Metrics --------------------------------------------------------------------

DistanceMatrix distances(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t words = g.words_per_row();
  DistanceMatrix dist(n);
  std::vector<std::uint64_t> visited(words), frontier(words), next(words);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    visited[s / kWordBits] = frontier[s / kWordBits] = std::uint64_t{1} << (s % kWordBits);
    dist.set(s, s, 0);
    for (std::size_t level = 1;; ++level) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t word = frontier[w];
        while (word != 0) {
          const Vertex v = w * kWordBits + std::countr_zero(word);
          word &= word - 1;
          auto r = g.row(v);
          for (std::size_t k = 0; k < words; ++k) next[k] |= r[k];
        }
      }
      bool any = false;
      for (std::size_t w = 0; w < words; ++w) {
        next[w] &= ~visited[w];
        visited[w] |= next[w];
        any = any || next[w] != 0;
        std::uint64_t word = next[w];
        while (word != 0) {
          dist.set(s, w * kWordBits + std::countr_zero(word), level);
          word &= word - 1;
        }
      }
      if (!any) break;
      frontier.swap(next);
    }
  }
  return dist;
}

std::size_t component_count(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::deque<Vertex> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::size_t diameter(const Graph& g) {
  if (g.order() == 0) throw std::domain_error("diameter: graph of order 0");
  const DistanceMatrix dist = distances(g);
  std::size_t best = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (dist.at(u, v) == DistanceMatrix::kUnreachable) {
        throw std::domain_error("diameter: graph is disconnected");
      }
      best = std::max(best, dist.at(u, v));
    }
  }
  return best;
}

bool is_spanning_subgraph(const Graph& g, const Graph& h, std::span<const Vertex> correspondence) {
  if (g.order() != h.order()) {
    throw std::invalid_argument("is_spanning_subgraph: orders differ (" + std::to_string(g.order()) +
                                " vs " + std::to_string(h.order()) + ")");
  }
  std::vector<Vertex> map(correspondence.begin(), correspondence.end());
  if (map.empty()) {
    map.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) map[v] = v;
  }
  if (map.size() != g.order()) throw std::invalid_argument("is_spanning_subgraph: bad correspondence");
  std::vector<bool> hit(g.order(), false);
  for (Vertex v : map) {
    if (v >= g.order() || hit[v]) {
      throw std::invalid_argument("is_spanning_subgraph: correspondence is not a bijection");
    }
    hit[v] = true;
  }
  for (auto [u, v] : g.edges())
    if (!h.has_edge(map[u], map[v])) return false;
  return true;
}

// graph6 ----------------------------------------------------------------------
//
// Header N(n): one byte n+63 for n <= 62, otherwise '~' followed by three
// 6-bit groups. Body: bits x(i,j) for 0 <= i < j < n ordered by j then i,
// packed six to a byte, big-endian within the byte, zero padded, each byte + 63.

std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw std::invalid_argument("graph6_encode: order too large");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph graph6_decode(std::string_view line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw std::invalid_argument("graph6: empty line");
  for (char ch : line) {
    if (ch < 63 || ch > 126) throw std::invalid_argument("graph6: byte outside printable range 63..126");
  }
  auto value = [&](std::size_t i) { return static_cast<std::size_t>(line[i] - 63); };

  std::size_t n = 0;
  std::size_t pos = 0;
  if (line[0] != '~') {
    n = value(0);
    pos = 1;
  } else {
    if (line.size() < 4) throw std::invalid_argument("graph6: truncated order header");
    if (line[1] == '~') throw std::invalid_argument("graph6: orders above 258047 are not supported");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    if (n <= 62) throw std::invalid_argument("graph6: non-minimal order header");
    pos = 4;
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes) {
    throw std::invalid_argument("graph6: expected " + std::to_string(bytes) + " body bytes for order " +
                                std::to_string(n) + ", got " + std::to_string(line.size() - pos));
  }
  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t byte = value(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t pad_mask = (std::size_t{1} << (6 - bits % 6)) - 1;
    if (value(pos + bytes - 1) & pad_mask) throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return g;
}

}  // namespace lapdist
