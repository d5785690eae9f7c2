#include "lapdist/lemma_suite.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "lapdist/enumeration.hpp"
#include "lapdist/families.hpp"

namespace lapdist {

namespace {

constexpr std::size_t kEdgeSuiteMaxOrder = 6;
constexpr std::size_t kComplementSuiteMaxOrder = 7;
constexpr std::size_t kRandomSuiteMaxOrder = 8;
constexpr std::int64_t kRandomEntryBound = 5;

template <typename Item, typename Fn>
std::vector<LemmaReport> run_all(const std::vector<Item>& items, std::size_t workers, Fn fn) {
  return parallel_map<LemmaReport>(items.size(), workers, [&](std::size_t i) { return fn(items[i]); });
}

IntegerSymmetricMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> entry(-kRandomEntryBound, kRandomEntryBound);
  IntegerSymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, entry(rng));
  return m;
}

std::vector<Graph> all_graphs_up_to(std::size_t max_n, std::size_t workers, bool connected_only) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto part = connected_only ? enumerate_connected(n, {workers, false}) : enumerate_graphs(n, {workers, false});
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<LemmaReport> family_suite(std::string_view id, FamilyKind kind, const SuiteOptions& opts) {
  return run_all(valid_specs(kind, opts.max_n), opts.workers,
                 [&](const FamilySpec& s) { return verify_family_lemma(id, s); });
}

std::vector<LemmaReport> edge_suite(std::string_view id, FamilyKind kind, const SuiteOptions& opts) {
  std::vector<std::pair<FamilySpec, EdgeClass>> items;
  for (const FamilySpec& s : valid_specs(kind, opts.max_n)) {
    if (s.d + 3 > s.n) continue;
    for (EdgeClass c : edge_classes(id)) items.emplace_back(s, c);
  }
  return run_all(items, opts.workers, [&](const auto& item) {
    return verify_edge_deleted_lemma(id, item.first, item.second);
  });
}

}  // namespace

std::vector<std::string> lemma_suite_ids() {
  return {"2.1", "path-count", "2.2", "2.3", "2.4", "2.5", "complement",
          "2.6", "2.7",        "4.1", "4.2", "4.3", "4.4", "4.5"};
}

std::string canonical_suite_id(std::string_view id) {
  if (id == "weyl") return "2.3";
  if (id == "interlacing") return "2.4";
  for (const std::string& known : lemma_suite_ids())
    if (known == id) return known;
  throw std::invalid_argument("unknown lemma id '" + std::string(id) + "'");
}

std::vector<LemmaReport> run_lemma_suite(std::string_view raw_id, const SuiteOptions& opts) {
  const std::string id = canonical_suite_id(raw_id);
  if (opts.max_n < 1) throw std::invalid_argument("max-n must be at least 1");
  std::vector<std::size_t> orders(opts.max_n);
  for (std::size_t n = 1; n <= opts.max_n; ++n) orders[n - 1] = n;

  if (id == "2.1") return run_all(orders, opts.workers, path_closed_form_check);
  if (id == "path-count") return run_all(orders, opts.workers, path_interval_check);
  if (id == "2.2") {
    std::vector<Graph> graphs;
    for (Graph& g : all_graphs_up_to(std::min(opts.max_n, kEdgeSuiteMaxOrder), opts.workers, true))
      if (g.edge_count() > 0) graphs.push_back(std::move(g));
    return run_all(graphs, opts.workers, max_degree_bound_check);
  }
  if (id == "2.3" || id == "2.4") {
    if (opts.max_n < 2) throw std::invalid_argument("random matrix suites need max-n >= 2");
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> order(2, std::min(opts.max_n, kRandomSuiteMaxOrder));
    if (id == "2.3") {
      // Each trial checks every admissible (i, j) and reports the tightest.
      std::vector<std::pair<IntegerSymmetricMatrix, IntegerSymmetricMatrix>> trials(opts.trials);
      for (auto& [a, b] : trials) {
        const std::size_t n = order(rng);
        a = random_matrix(n, rng);
        b = random_matrix(n, rng);
      }
      return run_all(trials, opts.workers, [](const auto& t) {
        const std::size_t n = t.first.order();
        LemmaReport worst;
        bool first = true, all = true;
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t j = 1; i + j - 1 <= n; ++j) {
            LemmaReport r = weyl_check(t.first, t.second, i, j);
            all = all && r.pass;
            if (first || r.margin < worst.margin) worst = std::move(r);
            first = false;
          }
        }
        worst.pass = all;
        return worst;
      });
    }
    // Laplacians of random connected graphs, random nonempty row sets.
    struct Trial {
      IntegerSymmetricMatrix m;
      std::vector<std::size_t> rows;
    };
    std::vector<Trial> trials(opts.trials);
    std::bernoulli_distribution coin(0.5);
    for (Trial& t : trials) {
      const std::size_t n = order(rng);
      Graph g(n);
      do {
        g = Graph(n);
        for (std::size_t j = 1; j < n; ++j)
          for (std::size_t i = 0; i < j; ++i)
            if (coin(rng)) g.add_edge(i, j);
      } while (!is_connected(g));
      t.m = laplacian(g);
      for (std::size_t r = 0; r < n; ++r)
        if (coin(rng)) t.rows.push_back(r);
      if (t.rows.empty()) t.rows.push_back(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    }
    return run_all(trials, opts.workers,
                   [](const Trial& t) { return submatrix_interlacing_check(t.m, t.rows); });
  }
  if (id == "2.5") {
    std::vector<std::pair<Graph, Edge>> items;
    for (const Graph& g : all_graphs_up_to(std::min(opts.max_n, kEdgeSuiteMaxOrder), opts.workers, false))
      for (Edge e : g.edges()) items.emplace_back(g, e);
    return run_all(items, opts.workers, [](const auto& it) { return edge_interlacing_check(it.first, it.second); });
  }
  if (id == "complement") {
    std::vector<Graph> graphs;
    for (Graph& g : all_graphs_up_to(std::min(opts.max_n, kComplementSuiteMaxOrder), opts.workers, false))
      if (g.order() >= 2) graphs.push_back(std::move(g));
    return run_all(graphs, opts.workers, complement_identity_check);
  }
  if (id == "2.6") return family_suite(id, FamilyKind::gndt, opts);
  if (id == "2.7") return family_suite(id, FamilyKind::gndra, opts);
  if (id == "4.1") return family_suite(id, FamilyKind::hab, opts);
  if (id == "4.2") return family_suite(id, FamilyKind::habc, opts);
  if (id == "4.3") return family_suite(id, FamilyKind::pplusplus, opts);
  if (id == "4.4") return edge_suite(id, FamilyKind::gndt, opts);
  return edge_suite(id, FamilyKind::gndra, opts);
}

}  // namespace lapdist
