#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "lapdist/graph.hpp"

using namespace lapdist;

namespace {

// Reference all-pairs distances by Floyd-Warshall, independent of the bitset BFS.
std::vector<std::vector<std::size_t>> floyd(const Graph& g) {
  const std::size_t n = g.order(), inf = DistanceMatrix::kUnreachable;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (g.has_edge(i, j)) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] != inf && d[k][j] != inf) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("path and complete constructors") {
  CHECK(path(1).order() == 1);
  CHECK(path(1).edge_count() == 0);
  CHECK(path(5).edge_count() == 4);
  CHECK(diameter(path(5)) == 4);
  CHECK(path(4).degree_sequence() == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(complete(4).edge_count() == 6);
  CHECK(complete(2).edge_count() == 1);
  for (std::size_t v = 0; v < 5; ++v) CHECK(complete(5).degree(v) == 4);
  CHECK_THROWS_AS(path(0), std::invalid_argument);
  CHECK_THROWS_AS(complete(0), std::invalid_argument);
  CHECK(star(4).degree(0) == 3);
  CHECK(empty_graph(3).edge_count() == 0);
}

TEST_CASE("mutation keeps the adjacency symmetric and rejects bad edges") {
  Graph g(70);
  g.add_edge(3, 68);
  CHECK(g.has_edge(68, 3));
  CHECK(g.degree(68) == 1);
  CHECK_THROWS_AS(g.add_edge(3, 68), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 70), std::out_of_range);
  CHECK_THROWS_AS(g.remove_edge(1, 2), std::invalid_argument);
  g.remove_edge(68, 3);
  CHECK(g.edge_count() == 0);
  CHECK(g == Graph(70));
}

TEST_CASE("disjoint union and join") {
  const Graph two_k2 = disjoint_union(path(2), path(2));
  CHECK(two_k2.order() == 4);
  CHECK(two_k2.edge_count() == 2);
  CHECK_FALSE(is_connected(two_k2));
  CHECK(disjoint_union(complete(3), complete(1)).edge_count() == 3);
  const Graph g = path(4);
  CHECK(disjoint_union(g, Graph(0)) == g);

  CHECK(join(complete(1), complete(1)) == complete(2));
  const Graph p3 = join(disjoint_union(complete(1), complete(1)), complete(1));
  CHECK(p3.edge_count() == 2);
  CHECK(p3.degree(2) == 2);
  CHECK(diameter(p3) == 2);

  // join(K_a + K_b, K_c) against a brute-force count of adjacent pairs.
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = 1; b <= 4; ++b) {
      for (std::size_t c = 1; c <= 4; ++c) {
        const Graph j = join(disjoint_union(complete(a), complete(b)), complete(c));
        std::size_t pairs = 0;
        for (std::size_t u = 0; u < j.order(); ++u)
          for (std::size_t v = u + 1; v < j.order(); ++v) pairs += j.has_edge(u, v) ? 1 : 0;
        const std::size_t formula = a * (a - 1) / 2 + b * (b - 1) / 2 + c * (c - 1) / 2 + c * (a + b);
        CHECK(j.edge_count() == pairs);
        CHECK(pairs == formula);
      }
    }
  }
}

TEST_CASE("edge deletion, induced subgraphs and complements") {
  const Graph k4e = delete_edge(complete(4), {0, 1});
  auto degs = k4e.degree_sequence();
  std::sort(degs.rbegin(), degs.rend());
  CHECK(degs == std::vector<std::size_t>{3, 3, 2, 2});
  const Edge e{1, 3};
  CHECK(delete_edge(add_edges(path(4), std::vector<Edge>{e}), e) == path(4));
  CHECK_FALSE(is_connected(delete_edge(path(3), {0, 1})));
  CHECK_THROWS_AS(delete_edge(path(3), {0, 2}), std::invalid_argument);

  CHECK(induced_subgraph(complete(5), std::vector<Vertex>{0, 2, 4}) == complete(3));
  CHECK(induced_subgraph(path(5), std::vector<Vertex>{0, 2, 4}).edge_count() == 0);
  CHECK(induced_subgraph(path(5), std::vector<Vertex>{0, 1, 2, 3, 4}) == path(5));
  CHECK_THROWS(induced_subgraph(path(3), std::vector<Vertex>{}));
  CHECK(delete_vertices(path(5), std::vector<Vertex>{4}) == path(4));

  CHECK(complement(complete(6)).edge_count() == 0);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(9, 0.4, rng);
    CHECK(complement(complement(g)) == g);
    CHECK(g.edge_count() + complement(g).edge_count() == 36);
  }
  // complement(P4) is the path 1-3-0-2.
  CHECK(complement(path(4)) == from_edges(4, std::vector<Edge>{{1, 3}, {0, 3}, {0, 2}}));
}

TEST_CASE("labels travel with induced subgraphs and relabeling") {
  Graph g = path(3);
  g.set_labels({"a", "b", "c"});
  CHECK(g.vertex("c") == 2);
  CHECK_THROWS_AS(g.vertex("z"), std::out_of_range);
  CHECK_THROWS_AS(g.set_labels({"a", "a", "b"}), std::invalid_argument);
  const Graph sub = induced_subgraph(g, std::vector<Vertex>{1, 2});
  CHECK(sub.label(0) == "b");
  const Graph r = relabel(g, std::vector<Vertex>{2, 1, 0});
  CHECK(r.label(0) == "c");
  CHECK(r == g);  // P3 reversed is P3
}

TEST_CASE("distances agree with Floyd-Warshall") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const Graph g = random_graph(n, 0.3, rng);
    const auto ref = floyd(g);
    const DistanceMatrix dm = distances(g);
    bool connected = true;
    std::size_t diam = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(dm.at(i, j) == ref[i][j]);
        if (ref[i][j] == DistanceMatrix::kUnreachable) {
          connected = false;
        } else {
          diam = std::max(diam, ref[i][j]);
        }
      }
    }
    CHECK(is_connected(g) == connected);
    if (connected) {
      CHECK(diameter(g) == diam);
    } else {
      CHECK_THROWS_AS(diameter(g), std::domain_error);
    }
  }
  CHECK(component_count(disjoint_union(path(2), complete(3))) == 2);
}

TEST_CASE("spanning subgraphs") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(is_spanning_subgraph(path(n), complete(n)));
  for (std::size_t n = 3; n <= 6; ++n) CHECK_FALSE(is_spanning_subgraph(complete(n), path(n)));
  CHECK_THROWS(is_spanning_subgraph(path(3), path(4)));
  const Graph g = complete(4);
  CHECK(is_spanning_subgraph(delete_edge(g, {0, 3}), g));
  // Explicit correspondence: the reversed path inside P4.
  CHECK(is_spanning_subgraph(path(4), path(4), std::vector<Vertex>{3, 2, 1, 0}));
  CHECK_FALSE(is_spanning_subgraph(path(4), path(4), std::vector<Vertex>{1, 0, 2, 3}));
}

TEST_CASE("graph6 strings match a reference encoder") {
  CHECK(graph6_encode(complete(1)) == "@");
  CHECK(graph6_encode(path(2)) == "A_");
  CHECK(graph6_encode(path(4)) == "Ch");
  CHECK(graph6_encode(from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})) == "Dhc");
  CHECK(graph6_encode(complete(5)) == "D~{");
  CHECK(graph6_encode(star(4)) == "Cs");
  CHECK(graph6_encode(Graph(0)) == "?");
  const std::string p70 = graph6_encode(path(70));
  CHECK(p70.size() == 407);
  CHECK(p70.substr(0, 12) == "~?@EhCGGC@?G");
  CHECK(graph6_encode(complete(63)).substr(0, 6) == "~??~~~");

  const Graph petersen = graph6_decode("IheA@GUAo");
  CHECK(petersen.order() == 10);
  CHECK(petersen.edge_count() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);
  CHECK(diameter(petersen) == 2);
}

TEST_CASE("graph6 round trip and malformed input") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {0, 1, 2, 5, 6, 7, 13, 62, 63, 64, 100}) {
    const Graph g = random_graph(n, 0.5, rng);
    CHECK(graph6_decode(graph6_encode(g)) == g);
  }
  CHECK(graph6_decode(">>graph6<<A_\n") == path(2));
  CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
  CHECK_THROWS_AS(graph6_decode("A"), std::invalid_argument);       // body too short
  CHECK_THROWS_AS(graph6_decode("A__"), std::invalid_argument);     // body too long
  CHECK_THROWS_AS(graph6_decode("A`"), std::invalid_argument);      // nonzero padding
  CHECK_THROWS_AS(graph6_decode("A "), std::invalid_argument);      // byte below 63
  CHECK_THROWS_AS(graph6_decode("~??A"), std::invalid_argument);    // long header for n < 63
}
