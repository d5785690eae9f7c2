#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lapdist/families.hpp"
#include "lapdist/isomorphism.hpp"

using namespace lapdist;

namespace {

std::size_t choose2(std::size_t k) { return k * (k - 1) / 2; }

bool adjacent(const Graph& g, const std::string& a, const std::string& b) { return g.has_edge(g.vertex(a), g.vertex(b)); }

}  // namespace

TEST_CASE("validation names the violated bound") {
  CHECK_NOTHROW(validate(gndt_spec(6, 3, 2)));
  try {
    validate(gndt_spec(5, 5, 2));
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("d <= n-2") != std::string::npos);
  }
  CHECK_FALSE(is_valid(gndt_spec(6, 1, 2)));
  CHECK_FALSE(is_valid(gndt_spec(6, 3, 4)));
  CHECK_FALSE(is_valid(gndra_spec(6, 2, 2, 1)));
  CHECK_FALSE(is_valid(gndra_spec(7, 3, 3, 1)));
  CHECK_FALSE(is_valid(gndra_spec(7, 3, 2, 3)));
  CHECK(is_valid(hab_spec(9, 5, 3, 1, 2)));
  CHECK_FALSE(is_valid(hab_spec(9, 5, 3, 1, 1)));
  CHECK_FALSE(is_valid(hab_spec(9, 5, 4, 1, 2)));
  CHECK(is_valid(habc_spec(10, 5, 3, 1, 1, 2)));
  CHECK_FALSE(is_valid(habc_spec(10, 5, 3, 1, 1, 1)));
  CHECK(is_valid(pplusplus_spec(5, 2)));
  CHECK_FALSE(is_valid(pplusplus_spec(5, 3)));
  CHECK_THROWS_AS(build_gndt(5, 5, 2), std::invalid_argument);
}

TEST_CASE("text form round trips") {
  CHECK(to_string(gndt_spec(9, 4, 3)) == "gndt:n=9,d=4,t=3");
  CHECK(to_string(gndra_spec(10, 5, 2, 3)) == "gndra:n=10,d=5,r=2,a=3");
  for (FamilyKind kind : {FamilyKind::gndt, FamilyKind::gndra, FamilyKind::hab, FamilyKind::habc,
                          FamilyKind::pplusplus}) {
    for (const FamilySpec& s : valid_specs(kind, 10)) CHECK(parse_family_spec(to_string(s)) == s);
  }
  CHECK(parse_family_spec("gndt:t=3,n=9,d=4") == gndt_spec(9, 4, 3));
  CHECK_THROWS_AS(parse_family_spec("gndt:n=9,d=4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("gndt:n=9,d=4,t=3,t=3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("gndt:n=9,d=4,t=3,q=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("gnd:n=9,d=4,t=3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("n=9,d=4,t=3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("gndt:n=9,d=x,t=3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("gndt:n=5,d=5,t=2"), std::invalid_argument);
}

TEST_CASE("gndt structure") {
  CHECK(are_isomorphic(build_gndt(5, 2, 2), delete_edge(complete(5), {0, 1})));
  for (std::size_t n = 4; n <= 9; ++n) CHECK(are_isomorphic(build_gndt(n, 2, 2), delete_edge(complete(n), {0, 1})));
  CHECK(diameter(build_gndt(9, 4, 3)) == 4);
  for (const FamilySpec& s : valid_specs(FamilyKind::gndt, 10)) {
    const Graph g = build(s);
    const std::size_t k = s.n - s.d - 1;
    CHECK(g.order() == s.n);
    CHECK(diameter(g) == s.d);
    CHECK(g.edge_count() == s.d + choose2(k) + 3 * k);
    if (s.d >= 3) CHECK(g.max_degree() == s.n - s.d + 1);
    const std::string vt = "v" + std::to_string(s.t);
    CHECK(adjacent(g, "w1", vt));
    CHECK(adjacent(g, "w1", "v" + std::to_string(s.t - 1)));
    CHECK(adjacent(g, "w1", "v" + std::to_string(s.t + 1)));
  }
}

TEST_CASE("gndra structure") {
  const Graph g = build_gndra(6, 3, 2, 1);
  CHECK(g.order() == 6);
  for (const char* w : {"w1", "w2"}) {
    CHECK(adjacent(g, w, "v2"));
    CHECK(adjacent(g, w, "v3"));
  }
  CHECK(adjacent(g, "w1", "v1"));
  CHECK_FALSE(adjacent(g, "w1", "v4"));
  CHECK(adjacent(g, "w2", "v4"));
  CHECK_FALSE(adjacent(g, "w2", "v1"));
  CHECK(diameter(build_gndra(10, 5, 3, 2)) == 5);

  for (const FamilySpec& s : valid_specs(FamilyKind::gndra, 10)) {
    const Graph h = build(s);
    const std::size_t k = s.n - s.d - 1;
    CHECK(diameter(h) == s.d);
    CHECK(h.edge_count() == s.d + choose2(k) + 3 * k);
    std::size_t prev = 0, next = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      const std::string w = "w" + std::to_string(i);
      CHECK(adjacent(h, w, "v" + std::to_string(s.t)));
      CHECK(adjacent(h, w, "v" + std::to_string(s.t + 1)));
      prev += adjacent(h, w, "v" + std::to_string(s.t - 1)) ? 1 : 0;
      next += adjacent(h, w, "v" + std::to_string(s.t + 2)) ? 1 : 0;
    }
    CHECK(prev == s.a);
    CHECK(next == k - s.a);
  }
}

TEST_CASE("H families") {
  const Graph h = build_h_ab(9, 5, 3, 1, 2);
  CHECK(diameter(h) == 5);
  for (const char* v : {"v1", "v2", "v3"}) CHECK(adjacent(h, "a1", v));
  CHECK_FALSE(adjacent(h, "a1", "v4"));
  for (const char* b : {"b1", "b2"})
    for (const char* v : {"v3", "v4", "v5"}) CHECK(adjacent(h, b, v));
  CHECK_FALSE(adjacent(h, "a1", "b1"));

  for (const FamilySpec& s : valid_specs(FamilyKind::hab, 11)) {
    const Graph g = build(s);
    CHECK(diameter(g) == s.d);
    CHECK(g.edge_count() == s.d + choose2(s.a) + choose2(s.b) + 3 * (s.a + s.b));
  }

  const Graph c = build_h_abc(10, 5, 3, 1, 1, 2);
  CHECK(c.order() == 10);
  CHECK(diameter(c) == 5);
  CHECK_FALSE(adjacent(c, "a1", "b1"));
  for (const char* k : {"c1", "c2"}) {
    CHECK(adjacent(c, "a1", k));
    CHECK(adjacent(c, "b1", k));
    for (const char* v : {"v2", "v3", "v4"}) CHECK(adjacent(c, k, v));
  }
  for (const FamilySpec& s : valid_specs(FamilyKind::habc, 11)) {
    const Graph g = build(s);
    CHECK(diameter(g) == s.d);
    std::vector<Vertex> cs;
    for (std::size_t i = 1; i <= s.c; ++i) cs.push_back(g.vertex("c" + std::to_string(i)));
    CHECK(are_isomorphic(delete_vertices(g, cs), build_h_ab(s.n - s.c, s.d, s.t, s.a, s.b)));
  }
}

TEST_CASE("P++ family") {
  for (const FamilySpec& s : valid_specs(FamilyKind::pplusplus, 11)) {
    const Graph g = build(s);
    const Vertex u = g.vertex("u");
    CHECK(g.degree(u) == 2);
    CHECK(adjacent(g, "u", "v" + std::to_string(s.t)));
    CHECK(adjacent(g, "u", "v" + std::to_string(s.t + 2)));
    if (s.t == 1) CHECK(are_isomorphic(delete_edge(g, {u, g.vertex("v3")}), path(s.n)));
    Graph plus = g;
    plus.add_edge(u, g.vertex("v" + std::to_string(s.t + 1)));
    CHECK(are_isomorphic(plus, build_gndt(s.n, s.n - 2, s.t + 1)));
  }
}

TEST_CASE("mirror symmetry and canonical representatives") {
  CHECK(canonicalize(gndt_spec(9, 4, 4)) == gndt_spec(9, 4, 2));
  CHECK(canonicalize(gndt_spec(9, 4, 3)) == gndt_spec(9, 4, 3));
  CHECK(canonicalize(gndra_spec(10, 5, 4, 1)) == gndra_spec(10, 5, 2, 3));
  CHECK_THROWS_AS(canonicalize(hab_spec(9, 5, 3, 1, 2)), std::invalid_argument);

  for (FamilyKind kind : {FamilyKind::gndt, FamilyKind::gndra}) {
    for (const FamilySpec& s : valid_specs(kind, 10)) {
      CHECK(is_valid(mirror(s)));
      CHECK(mirror(mirror(s)) == s);
      CHECK(are_isomorphic(build(s), build(mirror(s))));
      const FamilySpec c = canonicalize(s);
      CHECK(is_canonical(c));
      CHECK(canonicalize(c) == c);
      CHECK(are_isomorphic(build(s), build(c)));
    }
  }
}

TEST_CASE("canonical equality parameter sets") {
  CHECK(canonical_equality_specs(5, 2) == std::vector<FamilySpec>{gndt_spec(5, 2, 2)});
  CHECK(canonical_equality_specs(6, 3) == std::vector<FamilySpec>{gndt_spec(6, 3, 2), gndra_spec(6, 3, 2, 1)});
  CHECK(canonical_equality_specs(7, 4) ==
        std::vector<FamilySpec>{gndt_spec(7, 4, 2), gndt_spec(7, 4, 3), gndra_spec(7, 4, 2, 1)});
  for (std::size_t n = 4; n <= 10; ++n) {
    for (std::size_t d = 2; d + 2 <= n; ++d) {
      for (const FamilySpec& s : canonical_equality_specs(n, d)) {
        CHECK(is_valid(s));
        CHECK(is_canonical(s));
      }
    }
  }
}
