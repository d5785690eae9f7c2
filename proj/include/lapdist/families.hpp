#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lapdist/graph.hpp"

namespace lapdist {

/// The extremal and auxiliary constructions around the diameter bound.
///
///   gndt      G(n,d,t)       path v1..v_{d+1}, clique K_{n-d-1} joined to v_{t-1}, v_t, v_{t+1}
///   gndra     G(n,d,r,a)     clique joined to v_r, v_{r+1}; a clique vertices also to
///                            v_{r-1}, the others to v_{r+2}
///   hab       H(n,d,t;a,b)   K_a joined to v_{t-2..t}, K_b joined to v_{t..t+2}
///   habc      H(n,d,t;a,b,c) hab on K_a, K_b plus K_c joined to both and to v_{t-1..t+1}
///   pplusplus P++(n,t)       path v1..v_{n-1} plus u adjacent to v_t and v_{t+2}
enum class FamilyKind { gndt, gndra, hab, habc, pplusplus };

/// Parameters of one construction. For gndra the field `t` holds r.
/// Unused fields stay zero.
struct FamilySpec {
  FamilyKind kind = FamilyKind::gndt;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t t = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
  friend auto operator<=>(const FamilySpec&, const FamilySpec&) = default;
};

FamilySpec gndt_spec(std::size_t n, std::size_t d, std::size_t t);
FamilySpec gndra_spec(std::size_t n, std::size_t d, std::size_t r, std::size_t a);
FamilySpec hab_spec(std::size_t n, std::size_t d, std::size_t t, std::size_t a, std::size_t b);
FamilySpec habc_spec(std::size_t n, std::size_t d, std::size_t t, std::size_t a, std::size_t b, std::size_t c);
FamilySpec pplusplus_spec(std::size_t n, std::size_t t);

std::string_view kind_name(FamilyKind kind);

/// Throws std::invalid_argument naming the first violated bound.
void validate(const FamilySpec& spec);
bool is_valid(const FamilySpec& spec) noexcept;

/// Stable text form, e.g. "gndt:n=9,d=4,t=3" or "gndra:n=10,d=5,r=2,a=3".
std::string to_string(const FamilySpec& spec);
/// Inverse of to_string. Parameters may appear in any order; the spec is validated.
FamilySpec parse_family_spec(std::string_view text);

// Constructors. Path vertices come first (indices 0..d, labels v1..v{d+1}),
// then the attached vertices (w1.. for gndt/gndra, a1../b1../c1.. for the H
// families, u for P++).
Graph build_gndt(std::size_t n, std::size_t d, std::size_t t);
Graph build_gndra(std::size_t n, std::size_t d, std::size_t r, std::size_t a);
Graph build_h_ab(std::size_t n, std::size_t d, std::size_t t, std::size_t a, std::size_t b);
Graph build_h_abc(std::size_t n, std::size_t d, std::size_t t, std::size_t a, std::size_t b, std::size_t c);
Graph build_p_plusplus(std::size_t n, std::size_t t);
Graph build(const FamilySpec& spec);

/// Mirror image of a gndt/gndra spec (the path read backwards).
FamilySpec mirror(const FamilySpec& spec);
/// Representative with t <= floor(d/2)+1 (gndt) or r <= floor((d+1)/2) (gndra).
/// Throws std::invalid_argument for other kinds.
FamilySpec canonicalize(const FamilySpec& spec);
bool is_canonical(const FamilySpec& spec);

/// The canonical parameter set for order n and diameter d, in order:
/// gndt by t, then gndra by (r, a).
std::vector<FamilySpec> canonical_equality_specs(std::size_t n, std::size_t d);

/// Every valid spec of `kind` with order at most max_n.
std::vector<FamilySpec> valid_specs(FamilyKind kind, std::size_t max_n);

struct FamilyMatch {
  std::optional<FamilySpec> spec;
  /// witness[v] is the vertex of build(*spec) matched with v.
  std::vector<Vertex> witness;

  bool matched() const noexcept { return spec.has_value(); }
};

}  // namespace lapdist
