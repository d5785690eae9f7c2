#include "lapdist/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "lapdist/enumeration.hpp"
#include "lapdist/families.hpp"
#include "lapdist/lemma_suite.hpp"
#include "lapdist/spectra.hpp"
#include "lapdist/theorem_lab.hpp"

namespace lapdist::cli {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for bad input after CLI11 has accepted the flags.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string mode_text = "both";
  std::string format = "table";
  std::string out_path;
  std::size_t workers = 1;
  bool workers_given = false;
  double tol = kDefaultSolverTol;

  std::string family;
  std::string graph6;
  std::string input;
  std::size_t n = 0;
  std::size_t d = 0;
  bool allow_n8 = false;

  std::string lemma_id;
  std::size_t max_n = 10;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
};

struct Report {
  Json doc;
  std::string table;
  bool pass = true;
};

// Ten decimal places: below the solver accuracy, and keeps reports free of
// 3.9999999999999996 and 7e-17.
double rounded(double v) {
  if (!std::isfinite(v)) return v;
  const double r = std::round(v * 1e10) / 1e10;
  return r == 0.0 ? 0.0 : r;
}

std::string show(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << rounded(v);
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::size_t resolve_workers(const RunConfig& cfg) {
  if (cfg.workers_given) {
    if (cfg.workers < 1) throw UsageError("--workers must be at least 1");
    return cfg.workers;
  }
  if (const char* env = std::getenv("LAPDIST_WORKERS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw UsageError("LAPDIST_WORKERS must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return 1;
}

Json config_json(const RunConfig& cfg) {
  Json c;
  c["mode"] = cfg.mode_text;
  if (cfg.command == "spectrum") {
    if (!cfg.family.empty()) c["family"] = cfg.family;
    if (!cfg.graph6.empty()) c["graph6"] = cfg.graph6;
    c["tol"] = cfg.tol;
  } else if (cfg.command == "verify" || cfg.command == "extremal") {
    if (!cfg.input.empty()) {
      c["input"] = cfg.input;
    } else {
      c["n"] = cfg.n;
    }
    if (cfg.command == "extremal") c["d"] = cfg.d;
  } else if (cfg.command == "lemmas") {
    c["id"] = cfg.lemma_id.empty() ? Json("all") : Json(cfg.lemma_id);
    c["max_n"] = cfg.max_n;
    c["trials"] = cfg.trials;
    c["seed"] = cfg.seed;
  }
  return c;
}

// spectrum --------------------------------------------------------------------

Report cmd_spectrum(const RunConfig& cfg, EngineMode mode) {
  Graph g;
  std::string source;
  if (!cfg.family.empty()) {
    FamilySpec spec;
    try {
      spec = parse_family_spec(cfg.family);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    g = build(spec);
    source = to_string(spec);
  } else {
    try {
      g = graph6_decode(cfg.graph6);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad graph6 input: ") + e.what());
    }
    source = cfg.graph6;
  }
  if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
  if (g.order() == 0) throw UsageError("graph has no vertices");

  const std::size_t n = g.order();
  const Spectrum s = laplacian_spectrum(g, cfg.tol);
  const bool connected = is_connected(g);

  Json r;
  r["input"] = source;
  r["graph6"] = graph6_encode(g);
  r["order"] = n;
  r["edges"] = g.edge_count();
  r["connected"] = connected;
  r["diameter"] = connected ? Json(diameter(g)) : Json(nullptr);
  Json values = Json::array();
  for (double v : s.values) values.push_back(rounded(v));
  r["spectrum"] = values;

  std::ostringstream t;
  t << "graph   " << source << " (" << graph6_encode(g) << ")\n";
  t << "order   " << n << "  edges " << g.edge_count() << "  diameter "
    << (connected ? std::to_string(diameter(g)) : std::string("inf (disconnected)")) << "\n";
  t << "mu      ";
  for (std::size_t k = 1; k <= n; ++k) t << (k > 1 ? " " : "") << show(s(k));
  t << "\n";

  if (mode != EngineMode::numeric) {
    const ExactSpectrum ex(g);
    r["char_poly"] = ex.polynomial().to_string();
    Json ints = Json::array();
    t << "integer eigenvalues (exact):";
    for (auto [value, mult] : integer_eigenvalues(ex)) {
      ints.push_back(Json{{"value", value}, {"multiplicity", mult}});
      t << " " << value << "^" << mult;
    }
    t << "\n";
    r["integer_eigenvalues"] = ints;
  }

  if (connected && diameter(g) >= 2) {
    const BoundVerdict v = check_bound(g, mode);
    const std::size_t lo = v.n - v.d + 2;
    Json m;
    m["a"] = lo;
    m["b"] = v.n;
    if (v.exact_m) m["exact"] = *v.exact_m;
    if (v.numeric_m) m["numeric"] = *v.numeric_m;
    m["bound"] = v.bound;
    m["status"] = std::string(to_string(v.status));
    if (!v.reason.empty()) m["reason"] = v.reason;
    r["interval_count"] = m;
    t << "m[" << lo << "," << v.n << "] = " << *v.m << "  (bound n-d = " << v.bound << ", "
      << to_string(v.status) << (v.reason.empty() ? "" : ": " + v.reason) << ")\n";
    if (!v.engines_agree()) {
      t << "engines disagree: exact " << *v.exact_m << ", numeric " << *v.numeric_m << "\n";
    }
  }

  Report rep;
  const bool agree = !r.contains("interval_count") || !r["interval_count"].contains("exact") ||
                     !r["interval_count"].contains("numeric") ||
                     r["interval_count"]["exact"] == r["interval_count"]["numeric"];
  const bool violation = r.contains("interval_count") && r["interval_count"]["status"] == "violation";
  rep.pass = agree && !violation;
  rep.doc["results"] = Json::array({r});
  rep.doc["summary"] = Json{{"pass", rep.pass}, {"counts", Json{{"graphs", 1}}}};
  rep.table = t.str();
  return rep;
}

// verify ----------------------------------------------------------------------

std::vector<Graph> load_universe(const RunConfig& cfg, std::size_t workers) {
  if (!cfg.input.empty()) {
    try {
      return read_graph6_corpus(read_file(cfg.input));
    } catch (const std::invalid_argument& e) {
      throw UsageError(cfg.input + ": " + e.what());
    }
  }
  try {
    return enumerate_connected(cfg.n, {workers, cfg.allow_n8});
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

Report cmd_verify(const RunConfig& cfg, EngineMode mode, std::size_t workers) {
  const std::vector<Graph> graphs = load_universe(cfg, workers);
  const BoundSweep sweep = sweep_bound(graphs, mode, workers);

  Report rep;
  Json results = Json::array();
  std::ostringstream t;
  t << std::left << std::setw(4) << "n" << std::setw(4) << "d" << std::setw(8) << "total" << std::setw(8)
    << "strict" << std::setw(10) << "equality" << std::setw(8) << "n/a" << "violations\n";
  BoundTally sum;
  for (const auto& [key, tally] : sweep.tallies) {
    results.push_back(Json{{"n", key.first},
                           {"d", key.second},
                           {"total", tally.total},
                           {"strict", tally.strict},
                           {"equality", tally.equality},
                           {"not_applicable", tally.not_applicable},
                           {"violations", tally.violations},
                           {"equality_graphs", tally.equality_graphs}});
    t << std::setw(4) << key.first << std::setw(4) << key.second << std::setw(8) << tally.total << std::setw(8)
      << tally.strict << std::setw(10) << tally.equality << std::setw(8) << tally.not_applicable
      << tally.violations << "\n";
    sum.total += tally.total;
    sum.strict += tally.strict;
    sum.equality += tally.equality;
    sum.not_applicable += tally.not_applicable;
    sum.violations += tally.violations;
  }
  rep.pass = sweep.ok();
  Json counts{{"graphs", graphs.size()},
              {"connected", sum.total},
              {"disconnected_skipped", sweep.disconnected_skipped},
              {"strict", sum.strict},
              {"equality", sum.equality},
              {"not_applicable", sum.not_applicable},
              {"violations", sum.violations},
              {"engine_mismatches", sweep.engine_mismatches.size()}};
  rep.doc["results"] = results;
  rep.doc["summary"] = Json{{"pass", rep.pass},
                            {"counts", counts},
                            {"violation_graphs", sweep.violation_graphs},
                            {"engine_mismatches", sweep.engine_mismatches}};
  t << "connected graphs " << sum.total << ", violations " << sum.violations << ", engine mismatches "
    << sweep.engine_mismatches.size();
  if (sweep.disconnected_skipped > 0) t << ", disconnected skipped " << sweep.disconnected_skipped;
  t << "\n";
  for (const auto& g6 : sweep.violation_graphs) t << "VIOLATION " << g6 << "\n";
  for (const auto& g6 : sweep.engine_mismatches) t << "ENGINE MISMATCH " << g6 << "\n";
  t << (rep.pass ? "PASS" : "FAIL") << "\n";
  rep.table = t.str();
  return rep;
}

// extremal --------------------------------------------------------------------

Report cmd_extremal(const RunConfig& cfg, std::size_t workers) {
  if (cfg.d < 2 || cfg.d + 2 > cfg.n) {
    throw UsageError("extremal requires 2 <= d <= n-2 (got n=" + std::to_string(cfg.n) +
                     ", d=" + std::to_string(cfg.d) + ")");
  }
  const std::vector<Graph> universe = load_universe(cfg, workers);
  const CensusRecord rec = extremal_census(universe, cfg.n, cfg.d, workers);

  Json matches = Json::array();
  for (const auto& [g6, spec] : rec.matches) matches.push_back(Json{{"graph6", g6}, {"family", to_string(spec)}});
  Json missing = Json::array();
  for (const auto& spec : rec.missing) missing.push_back(to_string(spec));
  Json r{{"n", rec.n},
         {"d", rec.d},
         {"total", rec.total},
         {"strict", rec.strict},
         {"expected_classes", rec.expected_classes},
         {"equality_graphs", rec.equality},
         {"matches", matches},
         {"unmatched", rec.unmatched},
         {"missing", missing},
         {"violations", rec.violations},
         {"engine_mismatches", rec.engine_mismatches},
         {"pass", rec.ok()}};

  Report rep;
  rep.pass = rec.ok();
  rep.doc["results"] = Json::array({r});
  rep.doc["summary"] = Json{{"pass", rep.pass},
                            {"counts", Json{{"classes", rec.total},
                                            {"equality", rec.equality.size()},
                                            {"matched", rec.matches.size()},
                                            {"expected", rec.expected_classes},
                                            {"unmatched", rec.unmatched.size()},
                                            {"missing", rec.missing.size()},
                                            {"violations", rec.violations.size()}}}};
  std::ostringstream t;
  t << "n=" << rec.n << " d=" << rec.d << ": " << rec.total << " connected classes, " << rec.equality.size()
    << " equality classes, " << rec.expected_classes << " expected\n";
  for (const auto& [g6, spec] : rec.matches) t << "  " << std::left << std::setw(12) << g6 << to_string(spec) << "\n";
  for (const auto& g6 : rec.unmatched) t << "  UNMATCHED " << g6 << "\n";
  for (const auto& spec : rec.missing) t << "  MISSING " << to_string(spec) << "\n";
  for (const auto& g6 : rec.violations) t << "  VIOLATION " << g6 << "\n";
  for (const auto& g6 : rec.engine_mismatches) t << "  ENGINE MISMATCH " << g6 << "\n";
  t << (rep.pass ? "PASS" : "FAIL") << "\n";
  rep.table = t.str();
  return rep;
}

// lemmas ----------------------------------------------------------------------

Report cmd_lemmas(const RunConfig& cfg, std::size_t workers) {
  std::vector<std::string> ids;
  try {
    ids = cfg.lemma_id.empty() ? lemma_suite_ids() : std::vector<std::string>{canonical_suite_id(cfg.lemma_id)};
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()) + " (known: " + [] {
      std::string all;
      for (const auto& id : lemma_suite_ids()) all += (all.empty() ? "" : ", ") + id;
      return all + ", weyl, interlacing";
    }() + ")");
  }
  if (cfg.max_n < 1) throw UsageError("--max-n must be at least 1");
  SuiteOptions opts{cfg.max_n, cfg.trials, cfg.seed, workers};

  Report rep;
  Json results = Json::array();
  Json per_lemma = Json::object();
  std::ostringstream t;
  std::size_t total = 0, failed = 0;
  for (const std::string& id : ids) {
    if ((id == "2.3" || id == "2.4") && cfg.max_n < 2) continue;
    const auto reports = run_lemma_suite(id, opts);
    std::size_t pass = 0;
    for (const LemmaReport& lr : reports) {
      Json j{{"lemma", lr.lemma},       {"params", lr.params},
             {"relation", lr.relation}, {"lhs", rounded(lr.lhs)},
             {"rhs", rounded(lr.rhs)},  {"margin", rounded(lr.margin)},
             {"exact", lr.exact ? Json(*lr.exact) : Json(nullptr)},
             {"detail", lr.detail},     {"pass", lr.pass}};
      results.push_back(std::move(j));
      if (lr.pass) {
        ++pass;
      } else {
        t << "FAIL " << lr.lemma << " " << lr.params << ": " << lr.relation << " lhs=" << show(lr.lhs)
          << " rhs=" << show(lr.rhs) << (lr.detail.empty() ? "" : " (" + lr.detail + ")") << "\n";
      }
    }
    double min_margin = 0.0;
    if (!reports.empty()) {
      min_margin = std::min_element(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
                     return a.margin < b.margin;
                   })->margin;
    }
    per_lemma[id] = Json{{"instances", reports.size()}, {"passed", pass}, {"min_margin", rounded(min_margin)}};
    t << std::left << std::setw(12) << id << std::setw(8) << reports.size() << " instances, " << pass
      << " passed, min margin " << show(min_margin) << "\n";
    total += reports.size();
    failed += reports.size() - pass;
  }
  rep.pass = failed == 0;
  rep.doc["results"] = results;
  rep.doc["summary"] =
      Json{{"pass", rep.pass}, {"counts", Json{{"instances", total}, {"failed", failed}, {"lemmas", per_lemma}}}};
  t << (rep.pass ? "PASS" : "FAIL") << "\n";
  rep.table = t.str();
  return rep;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Laplacian eigenvalue distribution checks: m_G[n-d+2, n] <= n-d and its extremal graphs"};
  app.name("lapdist");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode_text, "exact, numeric or both")
        ->check(CLI::IsMember({"exact", "numeric", "both"}));
    sub->add_option("--format", cfg.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--out", cfg.out_path, "write the report here instead of stdout");
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "worker threads (default: LAPDIST_WORKERS or 1)")
        ->each([&](const std::string&) { cfg.workers_given = true; });
  };

  auto* spectrum = app.add_subcommand("spectrum", "Print the Laplacian spectrum of one graph");
  add_common(spectrum);
  auto* fam = spectrum->add_option("--family", cfg.family, "family spec, e.g. gndt:n=6,d=3,t=2");
  auto* g6 = spectrum->add_option("--graph6", cfg.graph6, "graph6 string");
  fam->excludes(g6);
  spectrum->add_option("--tol", cfg.tol, "Jacobi convergence tolerance");

  auto* verify = app.add_subcommand("verify", "Check m[n-d+2, n] <= n-d on every connected graph");
  add_common(verify);
  add_workers(verify);
  auto* vn = verify->add_option("--n", cfg.n, "order to enumerate");
  auto* vin = verify->add_option("--input", cfg.input, "graph6 corpus file");
  vn->excludes(vin);
  verify->add_flag("--allow-n8", cfg.allow_n8, "allow n = 8");

  auto* extremal = app.add_subcommand("extremal", "Census of the graphs attaining the bound");
  add_common(extremal);
  add_workers(extremal);
  extremal->add_option("--n", cfg.n, "order")->required();
  extremal->add_option("--d", cfg.d, "diameter")->required();
  extremal->add_option("--input", cfg.input, "graph6 corpus used instead of enumeration");
  extremal->add_flag("--allow-n8", cfg.allow_n8, "allow n = 8");

  auto* lemmas = app.add_subcommand("lemmas", "Run the lemma suites");
  add_common(lemmas);
  add_workers(lemmas);
  lemmas->add_option("--id", cfg.lemma_id, "suite id (default: all)");
  lemmas->add_option("--max-n", cfg.max_n, "largest order in the grids");
  lemmas->add_option("--trials", cfg.trials, "random instances for weyl / interlacing");
  lemmas->add_option("--seed", cfg.seed, "seed for the random suites");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (spectrum->parsed()) {
      cfg.command = "spectrum";
      if (cfg.family.empty() && cfg.graph6.empty()) throw UsageError("spectrum needs --family or --graph6");
    } else if (verify->parsed()) {
      cfg.command = "verify";
      if (vn->count() == 0 && vin->count() == 0) throw UsageError("verify needs --n or --input");
    } else if (extremal->parsed()) {
      cfg.command = "extremal";
    } else {
      cfg.command = "lemmas";
    }
    const EngineMode mode = parse_engine_mode(cfg.mode_text);
    const std::size_t workers = resolve_workers(cfg);

    Report rep;
    if (cfg.command == "spectrum") {
      rep = cmd_spectrum(cfg, mode);
    } else if (cfg.command == "verify") {
      rep = cmd_verify(cfg, mode, workers);
    } else if (cfg.command == "extremal") {
      rep = cmd_extremal(cfg, workers);
    } else {
      rep = cmd_lemmas(cfg, workers);
    }

    std::string text;
    if (cfg.format == "json") {
      Json doc;
      doc["command"] = cfg.command;
      doc["config"] = config_json(cfg);
      doc["results"] = rep.doc["results"];
      doc["summary"] = rep.doc["summary"];
      text = doc.dump(2) + "\n";
    } else {
      text = rep.table;
    }
    if (cfg.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + cfg.out_path + "'");
      file << text;
    }
    return rep.pass ? kExitPass : kExitViolation;
  } catch (const UsageError& e) {
    err << "lapdist: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "lapdist: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "lapdist: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace lapdist::cli
