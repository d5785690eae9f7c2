#include "lapdist/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lapdist/isomorphism.hpp"

namespace lapdist {

namespace {

constexpr std::uint64_t kChunk = std::uint64_t{1} << 14;

struct PairTable {
  std::vector<std::pair<unsigned, unsigned>> pairs;  // graph6 bit order
};

PairTable pair_table(std::size_t n) {
  PairTable t;
  for (unsigned j = 1; j < n; ++j)
    for (unsigned i = 0; i < j; ++i) t.pairs.emplace_back(i, j);
  return t;
}

bool rows_connected(const std::uint32_t* rows, std::size_t n) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= rows[__builtin_ctz(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (std::uint32_t{1} << n) - 1;
}

// Canonical graph6 strings of the labeled graphs with masks in [lo, hi).
// Only masks whose degrees are nonincreasing in vertex order are kept; every
// class has such a labeling, so nothing is lost.
std::set<std::string> sweep_range(std::size_t n, const PairTable& table, std::uint64_t lo, std::uint64_t hi,
                                  bool connected_only) {
  std::set<std::string> forms;
  std::uint32_t rows[32];
  unsigned deg[32];
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    std::fill(rows, rows + n, 0U);
    std::fill(deg, deg + n, 0U);
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      const auto [i, j] = table.pairs[static_cast<std::size_t>(__builtin_ctzll(m))];
      rows[i] |= 1U << j;
      rows[j] |= 1U << i;
      ++deg[i];
      ++deg[j];
    }
    bool sorted = true;
    for (std::size_t v = 1; v < n && sorted; ++v) sorted = deg[v - 1] >= deg[v];
    if (!sorted) continue;
    if (connected_only && !rows_connected(rows, n)) continue;
    Graph g(n);
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      const auto [i, j] = table.pairs[static_cast<std::size_t>(__builtin_ctzll(m))];
      g.add_edge(i, j);
    }
    forms.insert(canonical_form(g).bytes);
  }
  return forms;
}

std::vector<Graph> labeled_sweep(std::size_t n, std::size_t workers, bool connected_only) {
  const PairTable table = pair_table(n);
  const std::uint64_t total = std::uint64_t{1} << table.pairs.size();
  const std::size_t chunks = static_cast<std::size_t>((total + kChunk - 1) / kChunk);
  auto parts = parallel_map<std::set<std::string>>(chunks, workers, [&](std::size_t c) {
    const std::uint64_t lo = c * kChunk;
    return sweep_range(n, table, lo, std::min(total, lo + kChunk), connected_only);
  });
  std::set<std::string> merged;
  for (auto& part : parts) merged.merge(part);
  std::vector<Graph> out;
  out.reserve(merged.size());
  for (const auto& s : merged) out.push_back(graph6_decode(s));
  return out;
}

// Order 8: every connected graph has a vertex whose removal leaves it
// connected, so adding one vertex to each connected 7-vertex class in every
// possible way reaches every class.
std::vector<Graph> extend_by_one(const std::vector<Graph>& base, std::size_t workers) {
  auto parts = parallel_map<std::set<std::string>>(base.size(), workers, [&](std::size_t idx) {
    const Graph& h = base[idx];
    const std::size_t m = h.order();
    std::set<std::string> forms;
    for (std::uint32_t nb = 1; nb < (1U << m); ++nb) {
      Graph g(m + 1);
      for (auto [u, v] : h.edges()) g.add_edge(u, v);
      for (std::uint32_t s = nb; s != 0; s &= s - 1) g.add_edge(static_cast<Vertex>(__builtin_ctz(s)), m);
      forms.insert(canonical_form(g).bytes);
    }
    return forms;
  });
  std::set<std::string> merged;
  for (auto& part : parts) merged.merge(part);
  std::vector<Graph> out;
  out.reserve(merged.size());
  for (const auto& s : merged) out.push_back(graph6_decode(s));
  return out;
}

void check_order(std::size_t n, bool allow_8, bool connected) {
  const std::size_t max = (allow_8 && connected) ? kOptInEnumerationOrder : kMaxEnumerationOrder;
  if (n < 1 || n > max) {
    std::string msg = "enumeration supports 1 <= n <= " + std::to_string(max) + " (got n=" + std::to_string(n) + ")";
    if (connected && n == kOptInEnumerationOrder) msg += "; order 8 needs the opt-in flag";
    throw std::out_of_range(msg);
  }
}

}  // namespace

std::vector<Graph> enumerate_connected(std::size_t n, const EnumerationOptions& opts) {
  check_order(n, opts.allow_order_8, true);
  if (n == kOptInEnumerationOrder) return extend_by_one(enumerate_connected(n - 1, opts), opts.workers);
  return labeled_sweep(n, opts.workers, true);
}

std::vector<Graph> enumerate_graphs(std::size_t n, const EnumerationOptions& opts) {
  check_order(n, false, false);
  return labeled_sweep(n, opts.workers, false);
}

std::vector<Graph> read_graph6_corpus(const std::string& text) {
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    try {
      out.push_back(graph6_decode(line));
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

BoundSweep sweep_bound(const std::vector<Graph>& graphs, EngineMode mode, std::size_t workers) {
  struct Item {
    bool connected = false;
    BoundVerdict verdict;
  };
  auto items = parallel_map<Item>(graphs.size(), workers, [&](std::size_t i) {
    Item it;
    it.connected = graphs[i].order() > 0 && is_connected(graphs[i]);
    if (it.connected) it.verdict = check_bound(graphs[i], mode);
    return it;
  });
  BoundSweep out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!items[i].connected) {
      ++out.disconnected_skipped;
      continue;
    }
    const BoundVerdict& v = items[i].verdict;
    BoundTally& t = out.tallies[{v.n, v.d}];
    ++t.total;
    switch (v.status) {
      case BoundStatus::strict: ++t.strict; break;
      case BoundStatus::equality:
        ++t.equality;
        t.equality_graphs.push_back(graph6_encode(graphs[i]));
        out.equality_graphs.push_back(t.equality_graphs.back());
        break;
      case BoundStatus::violation:
        ++t.violations;
        out.violation_graphs.push_back(graph6_encode(graphs[i]));
        break;
      case BoundStatus::not_applicable: ++t.not_applicable; break;
    }
    if (!v.engines_agree()) out.engine_mismatches.push_back(graph6_encode(graphs[i]));
  }
  return out;
}

CensusRecord extremal_census(std::size_t n, std::size_t d, const EnumerationOptions& opts) {
  if (d < 2 || d + 2 > n) {
    throw std::out_of_range("census requires 2 <= d <= n-2 (got n=" + std::to_string(n) +
                            ", d=" + std::to_string(d) + ")");
  }
  return extremal_census(enumerate_connected(n, opts), n, d, opts.workers);
}

CensusRecord extremal_census(const std::vector<Graph>& universe, std::size_t n, std::size_t d,
                             std::size_t workers) {
  if (d < 2 || d + 2 > n) {
    throw std::out_of_range("census requires 2 <= d <= n-2 (got n=" + std::to_string(n) +
                            ", d=" + std::to_string(d) + ")");
  }
  // Distinct classes of the right order, connectivity and diameter.
  std::set<std::string> seen;
  std::vector<Graph> pool;
  for (const Graph& g : universe) {
    if (g.order() != n || !is_connected(g) || diameter(g) != d) continue;
    Graph c = canonical_graph(g);
    if (seen.insert(graph6_encode(c)).second) pool.push_back(std::move(c));
  }
  std::sort(pool.begin(), pool.end(),
            [](const Graph& a, const Graph& b) { return graph6_encode(a) < graph6_encode(b); });

  struct Item {
    BoundVerdict verdict;
    FamilyMatch match;
  };
  auto items = parallel_map<Item>(pool.size(), workers, [&](std::size_t i) {
    Item it;
    it.verdict = check_bound(pool[i], EngineMode::both);
    if (it.verdict.status == BoundStatus::equality) it.match = classify_equality(pool[i]);
    return it;
  });

  CensusRecord rec;
  rec.n = n;
  rec.d = d;
  rec.total = pool.size();
  std::set<std::string> equality_forms;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const std::string g6 = graph6_encode(pool[i]);
    const Item& it = items[i];
    if (!it.verdict.engines_agree()) rec.engine_mismatches.push_back(g6);
    switch (it.verdict.status) {
      case BoundStatus::strict: ++rec.strict; break;
      case BoundStatus::violation: rec.violations.push_back(g6); break;
      case BoundStatus::equality:
        rec.equality.push_back(g6);
        equality_forms.insert(g6);
        if (it.match.matched()) {
          rec.matches.emplace_back(g6, *it.match.spec);
        } else {
          rec.unmatched.push_back(g6);
        }
        break;
      case BoundStatus::not_applicable: break;
    }
  }

  std::set<std::string> expected;
  for (const FamilySpec& spec : canonical_equality_specs(n, d)) {
    const std::string form = canonical_form(build(spec)).bytes;
    expected.insert(form);
    if (!equality_forms.count(form)) rec.missing.push_back(spec);
  }
  rec.expected_classes = expected.size();
  for (const std::string& g6 : rec.equality) {
    if (!expected.count(g6) &&
        std::find(rec.unmatched.begin(), rec.unmatched.end(), g6) == rec.unmatched.end()) {
      rec.unmatched.push_back(g6);
    }
  }
  return rec;
}

}  // namespace lapdist
