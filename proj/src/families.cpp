#include "lapdist/families.hpp"

#include <array>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lapdist {

namespace {

struct KindInfo {
  FamilyKind kind;
  std::string_view name;
  std::vector<std::string_view> keys;
};

const std::array<KindInfo, 5>& kind_table() {
  static const std::array<KindInfo, 5> table{{
      {FamilyKind::gndt, "gndt", {"n", "d", "t"}},
      {FamilyKind::gndra, "gndra", {"n", "d", "r", "a"}},
      {FamilyKind::hab, "hab", {"n", "d", "t", "a", "b"}},
      {FamilyKind::habc, "habc", {"n", "d", "t", "a", "b", "c"}},
      {FamilyKind::pplusplus, "pplusplus", {"n", "t"}},
  }};
  return table;
}

const KindInfo& info(FamilyKind kind) {
  for (const auto& k : kind_table())
    if (k.kind == kind) return k;
  throw std::logic_error("unknown family kind");
}

std::size_t field(const FamilySpec& s, std::string_view key) {
  if (key == "n") return s.n;
  if (key == "d") return s.d;
  if (key == "t" || key == "r") return s.t;
  if (key == "a") return s.a;
  if (key == "b") return s.b;
  return s.c;
}

void set_field(FamilySpec& s, std::string_view key, std::size_t v) {
  if (key == "n") s.n = v;
  else if (key == "d") s.d = v;
  else if (key == "t" || key == "r") s.t = v;
  else if (key == "a") s.a = v;
  else if (key == "b") s.b = v;
  else s.c = v;
}

[[noreturn]] void violated(const FamilySpec& spec, const std::string& bound) {
  throw std::invalid_argument(std::string(kind_name(spec.kind)) + ": requires " + bound + " (got " +
                              to_string(spec) + ")");
}

void require(bool ok, const FamilySpec& spec, const std::string& bound) {
  if (!ok) violated(spec, bound);
}

// Path v1..v_{len} on vertices 0..len-1 of g.
void lay_path(Graph& g, std::size_t len) {
  for (Vertex v = 0; v + 1 < len; ++v) g.add_edge(v, v + 1);
}

void lay_clique(Graph& g, std::size_t first, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) g.add_edge(first + i, first + j);
}

std::vector<std::string> labels_for(std::size_t path_len,
                                    std::initializer_list<std::pair<char, std::size_t>> groups) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= path_len; ++i) labels.push_back("v" + std::to_string(i));
  for (auto [prefix, count] : groups) {
    for (std::size_t i = 1; i <= count; ++i) labels.push_back(std::string(1, prefix) + std::to_string(i));
  }
  return labels;
}

// Index of path vertex v_i (1-based).
constexpr Vertex v_(std::size_t i) { return i - 1; }

}  // namespace

FamilySpec gndt_spec(std::size_t n, std::size_t d, std::size_t t) { return {FamilyKind::gndt, n, d, t, 0, 0, 0}; }
FamilySpec gndra_spec(std::size_t n, std::size_t d, std::size_t r, std::size_t a) {
  return {FamilyKind::gndra, n, d, r, a, 0, 0};
}
FamilySpec hab_spec(std::size_t n, std::size_t d, std::size_t t, std::size_t a, std::size_t b) {
  return {FamilyKind::hab, n, d, t, a, b, 0};
}
FamilySpec habc_spec(std::size_t n, std::size_t d, std::size_t t, std::size_t a, std::size_t b, std::size_t c) {
  return {FamilyKind::habc, n, d, t, a, b, c};
}
FamilySpec pplusplus_spec(std::size_t n, std::size_t t) { return {FamilyKind::pplusplus, n, 0, t, 0, 0, 0}; }

std::string_view kind_name(FamilyKind kind) { return info(kind).name; }

void validate(const FamilySpec& s) {
  // Signed copies keep expressions such as n - d - 2 meaningful.
  const long n = static_cast<long>(s.n), d = static_cast<long>(s.d), t = static_cast<long>(s.t);
  const long a = static_cast<long>(s.a), b = static_cast<long>(s.b), c = static_cast<long>(s.c);
  switch (s.kind) {
    case FamilyKind::gndt:
      require(d >= 2, s, "d >= 2");
      require(d <= n - 2, s, "d <= n-2");
      require(t >= 2 && t <= d, s, "2 <= t <= d");
      break;
    case FamilyKind::gndra:
      require(d >= 3, s, "d >= 3");
      require(d <= n - 2, s, "d <= n-2");
      require(t >= 2 && t <= d - 1, s, "2 <= r <= d-1");
      require(a >= 1 && a <= n - d - 2, s, "1 <= a <= n-d-2");
      break;
    case FamilyKind::hab:
      require(t >= 3 && t <= d - 2, s, "3 <= t <= d-2");
      require(d <= n - 3, s, "d <= n-3");
      require(a >= 1 && b >= 1, s, "a, b >= 1");
      require(a + b == n - d - 1, s, "a+b = n-d-1");
      break;
    case FamilyKind::habc:
      require(t >= 3 && t <= d - 2, s, "3 <= t <= d-2");
      require(d <= n - 3, s, "d <= n-3");
      require(a >= 1 && b >= 1 && c >= 1, s, "a, b, c >= 1");
      require(a + b + c == n - d - 1, s, "a+b+c = n-d-1");
      break;
    case FamilyKind::pplusplus:
      require(t >= 1 && t <= n - 3, s, "1 <= t <= n-3");
      break;
  }
}

bool is_valid(const FamilySpec& spec) noexcept {
  try {
    validate(spec);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::string to_string(const FamilySpec& spec) {
  const auto& k = info(spec.kind);
  std::ostringstream os;
  os << k.name << ':';
  bool first = true;
  for (auto key : k.keys) {
    if (!first) os << ',';
    first = false;
    os << key << '=' << field(spec, key);
  }
  return os.str();
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("family spec '" + std::string(text) + "' lacks 'kind:' prefix");
  }
  const std::string_view name = text.substr(0, colon);
  const KindInfo* kind = nullptr;
  for (const auto& k : kind_table())
    if (k.name == name) kind = &k;
  if (kind == nullptr) throw std::invalid_argument("unknown family kind '" + std::string(name) + "'");

  FamilySpec spec;
  spec.kind = kind->kind;
  std::map<std::string, bool, std::less<>> seen;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("malformed parameter '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const std::string_view val = item.substr(eq + 1);
    bool known = false;
    for (auto k : kind->keys) known = known || k == key;
    if (!known) {
      throw std::invalid_argument("parameter '" + std::string(key) + "' not used by " + std::string(kind->name));
    }
    if (seen.count(key) != 0) throw std::invalid_argument("parameter '" + std::string(key) + "' repeated");
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc{} || ptr != val.data() + val.size()) {
      throw std::invalid_argument("parameter '" + std::string(key) + "' is not a nonnegative integer");
    }
    set_field(spec, key, v);
    seen.emplace(std::string(key), true);
  }
  for (auto k : kind->keys) {
    if (seen.count(k) == 0) throw std::invalid_argument("missing parameter '" + std::string(k) + "'");
  }
  validate(spec);
  return spec;
}

// Constructors ---------------------------------------------------------------

Graph build_gndt(std::size_t n, std::size_t d, std::size_t t) {
  validate(gndt_spec(n, d, t));
  Graph g(n);
  lay_path(g, d + 1);
  const std::size_t k = n - d - 1;
  lay_clique(g, d + 1, k);
  for (std::size_t w = d + 1; w < n; ++w)
    for (std::size_t i = t - 1; i <= t + 1; ++i) g.add_edge(w, v_(i));
  g.set_labels(labels_for(d + 1, {{'w', k}}));
  return g;
}

Graph build_gndra(std::size_t n, std::size_t d, std::size_t r, std::size_t a) {
  validate(gndra_spec(n, d, r, a));
  Graph g(n);
  lay_path(g, d + 1);
  const std::size_t k = n - d - 1;
  lay_clique(g, d + 1, k);
  for (std::size_t j = 0; j < k; ++j) {
    const Vertex w = d + 1 + j;
    g.add_edge(w, v_(r));
    g.add_edge(w, v_(r + 1));
    g.add_edge(w, j < a ? v_(r - 1) : v_(r + 2));
  }
  g.set_labels(labels_for(d + 1, {{'w', k}}));
  return g;
}

Graph build_h_ab(std::size_t n, std::size_t d, std::size_t t, std::size_t a, std::size_t b) {
  validate(hab_spec(n, d, t, a, b));
  Graph g(n);
  lay_path(g, d + 1);
  const std::size_t first_a = d + 1, first_b = d + 1 + a;
  lay_clique(g, first_a, a);
  lay_clique(g, first_b, b);
  for (std::size_t j = 0; j < a; ++j)
    for (std::size_t i = t - 2; i <= t; ++i) g.add_edge(first_a + j, v_(i));
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t i = t; i <= t + 2; ++i) g.add_edge(first_b + j, v_(i));
  g.set_labels(labels_for(d + 1, {{'a', a}, {'b', b}}));
  return g;
}

Graph build_h_abc(std::size_t n, std::size_t d, std::size_t t, std::size_t a, std::size_t b, std::size_t c) {
  validate(habc_spec(n, d, t, a, b, c));
  Graph g(n);
  lay_path(g, d + 1);
  const std::size_t first_a = d + 1, first_b = first_a + a, first_c = first_b + b;
  lay_clique(g, first_a, a);
  lay_clique(g, first_b, b);
  lay_clique(g, first_c, c);
  for (std::size_t k = 0; k < c; ++k) {
    for (std::size_t j = 0; j < a + b; ++j) g.add_edge(first_c + k, first_a + j);
    for (std::size_t i = t - 1; i <= t + 1; ++i) g.add_edge(first_c + k, v_(i));
  }
  for (std::size_t j = 0; j < a; ++j)
    for (std::size_t i = t - 2; i <= t; ++i) g.add_edge(first_a + j, v_(i));
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t i = t; i <= t + 2; ++i) g.add_edge(first_b + j, v_(i));
  g.set_labels(labels_for(d + 1, {{'a', a}, {'b', b}, {'c', c}}));
  return g;
}

Graph build_p_plusplus(std::size_t n, std::size_t t) {
  validate(pplusplus_spec(n, t));
  Graph g(n);
  lay_path(g, n - 1);
  const Vertex u = n - 1;
  g.add_edge(u, v_(t));
  g.add_edge(u, v_(t + 2));
  auto labels = labels_for(n - 1, {});
  labels.emplace_back("u");
  g.set_labels(std::move(labels));
  return g;
}

Graph build(const FamilySpec& s) {
  switch (s.kind) {
    case FamilyKind::gndt: return build_gndt(s.n, s.d, s.t);
    case FamilyKind::gndra: return build_gndra(s.n, s.d, s.t, s.a);
    case FamilyKind::hab: return build_h_ab(s.n, s.d, s.t, s.a, s.b);
    case FamilyKind::habc: return build_h_abc(s.n, s.d, s.t, s.a, s.b, s.c);
    case FamilyKind::pplusplus: return build_p_plusplus(s.n, s.t);
  }
  throw std::logic_error("unknown family kind");
}

// Mirror symmetry -------------------------------------------------------------

FamilySpec mirror(const FamilySpec& spec) {
  validate(spec);
  FamilySpec out = spec;
  switch (spec.kind) {
    case FamilyKind::gndt:
      out.t = spec.d + 2 - spec.t;
      return out;
    case FamilyKind::gndra:
      out.t = spec.d + 1 - spec.t;
      out.a = spec.n - spec.d - 1 - spec.a;
      return out;
    default:
      throw std::invalid_argument("mirror: only gndt and gndra specs have a mirror form");
  }
}

bool is_canonical(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::gndt: return spec.t <= spec.d / 2 + 1;
    case FamilyKind::gndra: return spec.t <= (spec.d + 1) / 2;
    default: throw std::invalid_argument("is_canonical: only gndt and gndra specs are canonicalized");
  }
}

FamilySpec canonicalize(const FamilySpec& spec) {
  if (spec.kind != FamilyKind::gndt && spec.kind != FamilyKind::gndra) {
    throw std::invalid_argument("canonicalize: only gndt and gndra specs are canonicalized");
  }
  validate(spec);
  return is_canonical(spec) ? spec : mirror(spec);
}

std::vector<FamilySpec> canonical_equality_specs(std::size_t n, std::size_t d) {
  std::vector<FamilySpec> out;
  if (d < 2 || d + 2 > n) return out;
  for (std::size_t t = 2; t <= d / 2 + 1; ++t) out.push_back(gndt_spec(n, d, t));
  if (d >= 3) {
    for (std::size_t r = 2; r <= (d + 1) / 2; ++r)
      for (std::size_t a = 1; a + d + 2 <= n; ++a) out.push_back(gndra_spec(n, d, r, a));
  }
  return out;
}

std::vector<FamilySpec> valid_specs(FamilyKind kind, std::size_t max_n) {
  std::vector<FamilySpec> out;
  auto keep = [&](const FamilySpec& s) {
    if (is_valid(s)) out.push_back(s);
  };
  for (std::size_t n = 1; n <= max_n; ++n) {
    switch (kind) {
      case FamilyKind::gndt:
        for (std::size_t d = 2; d <= n; ++d)
          for (std::size_t t = 2; t <= d; ++t) keep(gndt_spec(n, d, t));
        break;
      case FamilyKind::gndra:
        for (std::size_t d = 3; d <= n; ++d)
          for (std::size_t r = 2; r < d; ++r)
            for (std::size_t a = 1; a <= n; ++a) keep(gndra_spec(n, d, r, a));
        break;
      case FamilyKind::hab:
        for (std::size_t d = 1; d <= n; ++d)
          for (std::size_t t = 3; t <= d; ++t)
            for (std::size_t a = 1; a <= n; ++a)
              for (std::size_t b = 1; b <= n; ++b) keep(hab_spec(n, d, t, a, b));
        break;
      case FamilyKind::habc:
        for (std::size_t d = 1; d <= n; ++d)
          for (std::size_t t = 3; t <= d; ++t)
            for (std::size_t a = 1; a <= n; ++a)
              for (std::size_t b = 1; b <= n; ++b)
                for (std::size_t c = 1; c <= n; ++c) keep(habc_spec(n, d, t, a, b, c));
        break;
      case FamilyKind::pplusplus:
        for (std::size_t t = 1; t <= n; ++t) keep(pplusplus_spec(n, t));
        break;
    }
  }
  return out;
}

}  // namespace lapdist
