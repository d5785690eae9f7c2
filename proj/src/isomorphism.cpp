#include "lapdist/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

namespace lapdist {

namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;
using Bits = std::vector<std::uint64_t>;

std::size_t count_in(const Graph& g, Vertex v, const Bits& mask) {
  auto r = g.row(v);
  std::size_t c = 0;
  for (std::size_t w = 0; w < mask.size(); ++w) c += std::popcount(r[w] & mask[w]);
  return c;
}

// Split cells by the number of neighbours each vertex has in every cell,
// until the ordered partition is equitable. Every choice depends only on
// the graph and the cell order, never on vertex numbering.
void refine(const Graph& g, Partition& cells) {
  const std::size_t words = g.words_per_row();
  while (true) {
    std::vector<Bits> masks(cells.size(), Bits(words, 0));
    for (std::size_t ci = 0; ci < cells.size(); ++ci)
      for (Vertex v : cells[ci]) masks[ci][v / 64] |= std::uint64_t{1} << (v % 64);

    Partition next;
    next.reserve(cells.size());
    bool changed = false;
    for (const Cell& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<std::size_t>, Vertex>> keyed;
      keyed.reserve(cell.size());
      for (Vertex v : cell) {
        std::vector<std::size_t> sig(cells.size());
        for (std::size_t cj = 0; cj < cells.size(); ++cj) sig[cj] = count_in(g, v, masks[cj]);
        keyed.emplace_back(std::move(sig), v);
      }
      std::sort(keyed.begin(), keyed.end());
      std::size_t start = 0;
      for (std::size_t i = 1; i <= keyed.size(); ++i) {
        if (i == keyed.size() || keyed[i].first != keyed[start].first) {
          Cell part;
          for (std::size_t k = start; k < i; ++k) part.push_back(keyed[k].second);
          next.push_back(std::move(part));
          start = i;
        }
      }
      changed = changed || next.back().size() != cell.size();
    }
    cells = std::move(next);
    if (!changed) return;
  }
}

// Upper-triangle adjacency bits in graph6 order, packed most significant first.
Bits code_of(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = order.size();
  const std::size_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  Bits code((bits + 63) / 64, 0);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if (g.has_edge(order[i], order[j])) code[k / 64] |= std::uint64_t{1} << (63 - k % 64);
    }
  }
  return code;
}

struct Search {
  const Graph& g;
  bool have_best = false;
  Bits best_code;
  std::vector<Vertex> best_order;

  void run(Partition cells) {
    refine(g, cells);
    auto open = std::find_if(cells.begin(), cells.end(), [](const Cell& c) { return c.size() > 1; });
    if (open == cells.end()) {
      std::vector<Vertex> order;
      order.reserve(cells.size());
      for (const Cell& c : cells) order.push_back(c.front());
      Bits code = code_of(g, order);
      if (!have_best || code < best_code) {
        have_best = true;
        best_code = std::move(code);
        best_order = std::move(order);
      }
      return;
    }
    const std::size_t idx = static_cast<std::size_t>(open - cells.begin());
    const Cell cell = *open;
    for (Vertex v : cell) {
      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<long>(idx));
      child.push_back({v});
      Cell rest;
      for (Vertex w : cell)
        if (w != v) rest.push_back(w);
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + static_cast<long>(idx) + 1, cells.end());
      run(std::move(child));
    }
  }
};

// (degree, sorted neighbour degrees)
using Invariant = std::pair<std::size_t, std::vector<std::size_t>>;

std::vector<Invariant> invariants(const Graph& g) {
  const auto deg = g.degree_sequence();
  std::vector<Invariant> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    out[v].first = deg[v];
    for (Vertex w : g.neighbors(v)) out[v].second.push_back(deg[w]);
    std::sort(out[v].second.begin(), out[v].second.end());
  }
  return out;
}

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return {};
  // Initial cells by degree, ascending; refinement takes it from there.
  std::map<std::size_t, Cell> by_degree;
  for (Vertex v = 0; v < n; ++v) by_degree[g.degree(v)].push_back(v);
  Partition cells;
  for (auto& [deg, cell] : by_degree) cells.push_back(std::move(cell));

  Search search{g, false, {}, {}};
  search.run(std::move(cells));
  std::vector<Vertex> perm(n);
  for (std::size_t pos = 0; pos < n; ++pos) perm[search.best_order[pos]] = pos;
  return perm;
}

Graph canonical_graph(const Graph& g) {
  Graph plain = g;
  plain.clear_labels();
  return relabel(plain, canonical_labeling(plain));
}

CanonicalForm canonical_form(const Graph& g) { return {graph6_encode(canonical_graph(g))}; }

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& witness) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count() || witness.size() != g.order()) return false;
  std::vector<bool> hit(h.order(), false);
  for (Vertex v : witness) {
    if (v >= h.order() || hit[v]) return false;
    hit[v] = true;
  }
  for (auto [u, v] : g.edges())
    if (!h.has_edge(witness[u], witness[v])) return false;
  return true;
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  const std::size_t n = g.order();
  if (n != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (n == 0) return std::vector<Vertex>{};

  const auto inv_g = invariants(g);
  const auto inv_h = invariants(h);
  {
    auto a = inv_g, b = inv_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Candidate images per vertex of g.
  std::vector<std::vector<Vertex>> candidates(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex x = 0; x < n; ++x)
      if (inv_g[u] == inv_h[x]) candidates[u].push_back(x);

  // Match order: start from the vertex with fewest candidates and grow
  // along edges so every later vertex is constrained by a matched neighbour.
  std::vector<Vertex> order;
  std::vector<bool> placed(n, false);
  while (order.size() < n) {
    Vertex root = n;
    for (Vertex u = 0; u < n; ++u) {
      if (!placed[u] && (root == n || candidates[u].size() < candidates[root].size())) root = u;
    }
    std::deque<Vertex> queue{root};
    placed[root] = true;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      order.push_back(u);
      auto nb = g.neighbors(u);
      std::stable_sort(nb.begin(), nb.end(),
                       [&](Vertex a, Vertex b) { return candidates[a].size() < candidates[b].size(); });
      for (Vertex w : nb) {
        if (!placed[w]) {
          placed[w] = true;
          queue.push_back(w);
        }
      }
    }
  }

  std::vector<Vertex> map(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const Vertex u = order[depth];
    for (Vertex x : candidates[u]) {
      if (used[x]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Vertex w = order[k];
        ok = g.has_edge(u, w) == h.has_edge(x, map[w]);
      }
      if (!ok) continue;
      map[u] = x;
      used[x] = true;
      if (extend(depth + 1)) return true;
      used[x] = false;
    }
    map[u] = n;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace lapdist
