#include "hamex/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "hamex/errors.hpp"
#include "hamex/posa.hpp"
#include "hamex/random_graphs.hpp"
#include "hamex/rng.hpp"

namespace hamex {

Graph petersen_graph() {
  // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
    edges.push_back(make_edge(i, i + 5));
  }
  return Graph::build(10, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n - 1; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph::build(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(n, edges);
}

Graph star_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::build(n, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph::build(a + b, edges);
}

std::vector<double> ExperimentConfig::resolve_p(int n) const {
  if (!p_values.empty()) return p_values;
  std::vector<double> out;
  out.reserve(offsets_c.size());
  for (double c : offsets_c) out.push_back(threshold_offset_p(n, c));
  return out;
}

namespace {

// Blocked parallel map with deterministic result placement; the first
// exception thrown by any worker is rethrown on the caller thread.
void parallel_for(long long count, int workers,
                  const std::function<void(long long)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
  const int w = static_cast<int>(std::min<long long>(workers, count));
  std::vector<std::thread> threads;
  std::mutex mu;
  std::exception_ptr first_error;
  for (int t = 0; t < w; ++t) {
    threads.emplace_back([&, t]() {
      try {
        for (long long i = t; i < count; i += w) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

// Prints the value or an empty cell for "not applicable" (negative sentinel).
std::string fmt_opt(double x) { return x < 0 ? std::string() : fmt_double(x); }

std::string timestamp_comment() {
  std::time_t now = std::time(nullptr);
  char buf[64];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return std::string("# generated_at: ") + buf + "\n";
}

struct SampleVerdict {
  bool lowdeg = false;
  int outcome = 2;  // 0 = definite negative, 1 = definite positive, 2 = unknown
};

}  // namespace

RatioResult ratio_experiment(const ExperimentConfig& cfg) {
  if (cfg.kind != ExperimentConfig::Kind::ratio_ham &&
      cfg.kind != ExperimentConfig::Kind::ratio_pm)
    throw input_error("ratio_experiment: wrong config kind");
  const bool pm = cfg.kind == ExperimentConfig::Kind::ratio_pm;
  const int threshold = pm ? 1 : 2;
  RatioResult result;

  std::ostringstream body;
  body << "n,p,samples,count_" << (pm ? "no_pm" : "not_ham")
       << ",count_lowdeg,count_unknown,ratio_point,ratio_wilson_lo,"
          "ratio_wilson_hi,sandwich_lower,sandwich_upper\n";

  std::ostringstream wall_comment;
  for (size_t ni = 0; ni < cfg.n_values.size(); ++ni) {
    const int n = cfg.n_values[ni];
    const std::vector<double> ps = cfg.resolve_p(n);
    for (size_t pi = 0; pi < ps.size(); ++pi) {
      const double p = ps[pi];
      const std::string purpose = std::string(pm ? "ratio_pm" : "ratio_ham") +
                                  ":" + std::to_string(n) + ":" +
                                  std::to_string(pi);
      RegimeParams params = regime_params(n, p, cfg.overrides);
      std::vector<SampleVerdict> verdicts(cfg.samples);
      const auto start = std::chrono::steady_clock::now();
      parallel_for(cfg.samples, cfg.workers, [&](long long idx) {
        Graph g = sample_gnp(
            n, p, derive_seed(cfg.master_seed, purpose + ":g", idx));
        SampleVerdict v;
        auto prof = degree_profile(g);
        v.lowdeg = prof.min < threshold;
        std::uint64_t solve_seed =
            derive_seed(cfg.master_seed, purpose + ":solve", idx);
        if (pm) {
          PMCertificate cert = solve_pm(g, params, cfg.mode, solve_seed);
          v.outcome = cert.kind == PMKind::perfect  ? 1
                      : cert.kind == PMKind::none   ? 0
                                                    : 2;
        } else {
          HamCertificate cert =
              solve_hamilton(g, params, cfg.mode, solve_seed,
                             cfg.oracle_budget);
          v.outcome = cert.kind == HamKind::cycle  ? 1
                      : cert.kind == HamKind::none ? 0
                                                   : 2;
        }
        if (v.lowdeg && v.outcome == 1)
          throw invariant_error(
              "ratio_experiment: positive certificate on a graph with "
              "delta below threshold (n=" +
              std::to_string(n) + ", sample " + std::to_string(idx) + ")");
        verdicts[idx] = v;
      });
      const double wall =
          std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                        start)
              .count();

      RatioRow row;
      row.n = n;
      row.p = p;
      row.samples = cfg.samples;
      for (const SampleVerdict& v : verdicts) {
        if (v.lowdeg) ++row.count_lowdeg;
        if (v.outcome == 0) ++row.count_negative;
        if (v.outcome == 2) ++row.count_unknown;
      }
      row.wall_time_s = wall;
      if (row.count_lowdeg > 0) {
        row.ratio_point = static_cast<double>(row.count_negative) /
                          static_cast<double>(row.count_lowdeg);
        Interval neg_lo = wilson_interval(row.count_negative, cfg.samples);
        Interval neg_hi = wilson_interval(
            row.count_negative + row.count_unknown, cfg.samples);
        Interval low = wilson_interval(row.count_lowdeg, cfg.samples);
        if (low.hi > 0) row.ratio_wilson_lo = neg_lo.lo / low.hi;
        if (low.lo > 0) row.ratio_wilson_hi = neg_hi.hi / low.lo;
      }
      if (p > 0.0 && p < 1.0 && n >= 3) {
        ProbabilitySandwich s = min_degree_prob_sandwich(n, p, threshold);
        row.sandwich_lower = s.lower;
        row.sandwich_upper = s.upper;
      }
      result.rows.push_back(row);

      body << n << ',' << fmt_double(p) << ',' << cfg.samples << ','
           << row.count_negative << ',' << row.count_lowdeg << ','
           << row.count_unknown << ',' << fmt_opt(row.ratio_point) << ','
           << fmt_opt(row.ratio_wilson_lo) << ','
           << fmt_opt(row.ratio_wilson_hi) << ','
           << fmt_opt(row.sandwich_lower) << ','
           << fmt_opt(row.sandwich_upper) << '\n';
      wall_comment << "# wall_time_s n=" << n << " p=" << fmt_double(p)
                   << ": " << fmt_double(wall) << "\n";
    }
  }

  std::ostringstream csv;
  csv << "# hamex " << (pm ? "ratio_pm" : "ratio_ham") << " v1\n"
      << "# samples_per_cell=" << cfg.samples << " seed=" << cfg.master_seed
      << " mode=" << to_string(cfg.mode) << " workers=" << cfg.workers
      << "\n"
      << timestamp_comment() << wall_comment.str() << body.str();
  result.csv = csv.str();
  return result;
}

HittingResult hitting_experiment(const ExperimentConfig& cfg) {
  HittingResult result;
  std::ostringstream body;
  body << "n,sample,tau_d1,tau_d2,tau_pm,tau_ham\n";
  std::map<std::pair<std::string, long long>, long long> hist;

  for (int n : cfg.n_values) {
    if (n > cfg.oracle_budget.max_n_dp)
      throw budget_error(
          "hitting_experiment: n exceeds the exact-oracle reach");
    const std::string purpose = "hitting:" + std::to_string(n);
    std::vector<HittingRow> rows(cfg.samples);
    parallel_for(cfg.samples, cfg.workers, [&](long long idx) {
      EdgeOrdering ord =
          sample_process(n, derive_seed(cfg.master_seed, purpose, idx));
      HittingRow row;
      row.n = n;
      row.sample = idx;
      row.tau_d1 = hitting_time(ord, GraphProperty::D1, [](const Graph& g) {
        return degree_profile(g).min >= 1;
      });
      row.tau_d2 = hitting_time(ord, GraphProperty::D2, [](const Graph& g) {
        return degree_profile(g).min >= 2;
      });
      row.tau_pm = hitting_time(ord, GraphProperty::PM, [](const Graph& g) {
        return g.vertex_count() % 2 == 0 &&
               max_matching(g).size() * 2 == g.vertex_count();
      });
      const OracleBudget& ob = cfg.oracle_budget;
      row.tau_ham = hitting_time(ord, GraphProperty::HAM, [&ob](const Graph& g) {
        return exact_hamiltonicity(g, ob).hamiltonian;
      });
      if (row.tau_d2 > row.tau_ham)
        throw invariant_error("hitting_experiment: tau_D2 > tau_HAM");
      if (row.tau_d1 > row.tau_pm)
        throw invariant_error("hitting_experiment: tau_D1 > tau_PM");
      rows[idx] = row;
    });

    HittingSummary summary;
    summary.n = n;
    summary.samples = cfg.samples;
    for (const HittingRow& row : rows) {
      if (row.tau_d2 == row.tau_ham) ++summary.eq_d2_ham;
      if (row.tau_d1 == row.tau_pm) ++summary.eq_d1_pm;
      body << row.n << ',' << row.sample << ',' << row.tau_d1 << ','
           << row.tau_d2 << ',' << row.tau_pm << ',' << row.tau_ham << '\n';
      hist[{"tau_d1:" + std::to_string(n), row.tau_d1}]++;
      hist[{"tau_d2:" + std::to_string(n), row.tau_d2}]++;
      hist[{"tau_pm:" + std::to_string(n), row.tau_pm}]++;
      hist[{"tau_ham:" + std::to_string(n), row.tau_ham}]++;
      result.rows.push_back(row);
    }
    summary.ci_d2_ham = wilson_interval(summary.eq_d2_ham, cfg.samples);
    summary.ci_d1_pm = wilson_interval(summary.eq_d1_pm, cfg.samples);
    result.summaries.push_back(summary);
  }

  std::ostringstream csv;
  csv << "# hamex hitting v1\n"
      << "# samples_per_n=" << cfg.samples << " seed=" << cfg.master_seed
      << " workers=" << cfg.workers << "\n"
      << timestamp_comment();
  for (const HittingSummary& s : result.summaries)
    csv << "# summary n=" << s.n << " eq_d2_ham=" << s.eq_d2_ham << "/"
        << s.samples << " ci=[" << fmt_double(s.ci_d2_ham.lo) << ","
        << fmt_double(s.ci_d2_ham.hi) << "]"
        << " eq_d1_pm=" << s.eq_d1_pm << "/" << s.samples << " ci=["
        << fmt_double(s.ci_d1_pm.lo) << "," << fmt_double(s.ci_d1_pm.hi)
        << "]\n";
  csv << body.str();
  result.csv = csv.str();

  std::ostringstream hist_csv;
  hist_csv << "stat,tau,count\n";
  for (const auto& [key, count] : hist)
    hist_csv << key.first << ',' << key.second << ',' << count << '\n';
  result.hist_csv = hist_csv.str();
  return result;
}

PropsAuditResult props_audit(const ExperimentConfig& cfg) {
  PropsAuditResult result;
  std::ostringstream body;
  body << "n,p,label,mode,samples,violations,unknowns,freq,wilson_lo,"
          "wilson_hi,bound_lower,bound_upper,exact_prob\n";

  for (int n : cfg.n_values) {
    for (double p : cfg.resolve_p(n)) {
      RegimeParams params = regime_params(n, p, cfg.overrides);
      const std::string purpose =
          "props:" + std::to_string(n) + ":" + fmt_double(p);
      struct Tally {
        long long violated = 0, unknown = 0;
        CheckMode mode = CheckMode::exact;
      };
      std::vector<std::map<std::string, Tally>> partial(cfg.samples);
      parallel_for(cfg.samples, cfg.workers, [&](long long idx) {
        Graph g = sample_gnp(n, p,
                             derive_seed(cfg.master_seed, purpose, idx));
        CheckOptions opts = cfg.props_opts;
        opts.seed = derive_seed(cfg.master_seed, purpose + ":check", idx);
        PropertySuiteResult suite = check_suite(g, params, opts);
        for (const PropertyReport& r : suite.reports) {
          Tally& t = partial[idx][to_string(r.label)];
          if (r.verdict == Verdict::violated) t.violated++;
          if (r.verdict == Verdict::unknown) t.unknown++;
          t.mode = r.mode;
        }
      });
      std::map<std::string, Tally> totals;
      for (const auto& m : partial)
        for (const auto& [label, t] : m) {
          totals[label].violated += t.violated;
          totals[label].unknown += t.unknown;
          totals[label].mode = t.mode;
        }

      double exact_p0 = -1.0;
      if (n <= cfg.oracle_budget.max_n_enum && p > 0.0 && p < 1.0) {
        auto profile = exact_gnp_profile(
            n, [](const Graph& g) { return degree_profile(g).min < 2; },
            cfg.oracle_budget);
        exact_p0 = exact_gnp_probability(p, n, profile);
      }

      for (const auto& [label, t] : totals) {
        PropsAuditRow row;
        row.n = n;
        row.p = p;
        row.label = label;
        row.mode = to_string(t.mode);
        row.samples = cfg.samples;
        row.violations = t.violated;
        row.unknowns = t.unknown;
        row.freq = static_cast<double>(t.violated) /
                   static_cast<double>(cfg.samples);
        row.ci = wilson_interval(t.violated, cfg.samples);
        const bool is_mindeg = label == "P0" || label == "Q0" || label == "R0";
        if (is_mindeg && p > 0.0 && p < 1.0 && n >= 3) {
          ProbabilitySandwich s = min_degree_prob_sandwich(n, p, 2);
          row.bound_lower = s.lower;
          row.bound_upper = s.upper;
          row.exact_prob = exact_p0;
        }
        result.rows.push_back(row);
        body << n << ',' << fmt_double(p) << ',' << label << ',' << row.mode
             << ',' << cfg.samples << ',' << t.violated << ',' << t.unknown
             << ',' << fmt_double(row.freq) << ',' << fmt_double(row.ci.lo)
             << ',' << fmt_double(row.ci.hi) << ','
             << fmt_opt(row.bound_lower) << ',' << fmt_opt(row.bound_upper)
             << ',' << fmt_opt(row.exact_prob) << '\n';
      }
    }
  }

  std::ostringstream csv;
  csv << "# hamex props_audit v1\n"
      << "# samples_per_cell=" << cfg.samples << " seed=" << cfg.master_seed
      << " workers=" << cfg.workers << "\n"
      << timestamp_comment() << body.str();
  result.csv = csv.str();
  return result;
}

// ---------------------------------------------------------------------------
// corpora

namespace {

bool no_perfect_matching(const Graph& g) {
  return max_matching(g).size() * 2 != g.vertex_count();
}

}  // namespace

std::vector<Graph> expander_corpus_ham(int k, std::uint64_t seed, int want) {
  std::vector<Graph> corpus;
  CheckOptions exact_opts;
  auto qualifies = [&](const Graph& g) {
    if (g.vertex_count() > 12 || !is_connected(g)) return false;
    if (exact_hamiltonicity(g).hamiltonian) return false;
    return is_expander(g, k, 2.0, exact_opts).verdict == Verdict::holds;
  };
  for (const Graph& g :
       {petersen_graph(), complete_bipartite(4, 5), complete_bipartite(4, 6),
        complete_bipartite(5, 6)})
    if (qualifies(g)) corpus.push_back(g);
  // filtered random graphs
  for (int i = 0; static_cast<int>(corpus.size()) < want && i < 4000; ++i) {
    std::uint64_t s = derive_seed(seed, "corpus:ham", i);
    Rng rng(s);
    int n = 8 + static_cast<int>(rng.below(5));  // 8..12
    double p = 0.3 + 0.05 * static_cast<double>(rng.below(7));
    Graph g = sample_gnp(n, p, derive_seed(s, "g", i));
    if (qualifies(g)) corpus.push_back(g);
  }
  return corpus;
}

std::vector<Graph> expander_corpus_pm(int k, std::uint64_t seed, int want) {
  std::vector<Graph> corpus;
  CheckOptions exact_opts;
  auto qualifies = [&](const Graph& g) {
    if (g.vertex_count() > 12 || g.vertex_count() % 2 != 0) return false;
    if (!no_perfect_matching(g)) return false;
    return is_expander(g, k, 1.0, exact_opts).verdict == Verdict::holds;
  };
  for (const Graph& g :
       {complete_bipartite(2, 4), complete_bipartite(3, 5),
        complete_bipartite(2, 6), complete_bipartite(4, 6),
        complete_bipartite(3, 7), complete_bipartite(5, 7)})
    if (qualifies(g)) corpus.push_back(g);
  for (int i = 0; static_cast<int>(corpus.size()) < want && i < 4000; ++i) {
    std::uint64_t s = derive_seed(seed, "corpus:pm", i);
    Rng rng(s);
    int n = 6 + 2 * static_cast<int>(rng.below(4));  // 6..12 even
    double p = 0.2 + 0.05 * static_cast<double>(rng.below(8));
    Graph g = sample_gnp(n, p, derive_seed(s, "g", i));
    if (qualifies(g)) corpus.push_back(g);
  }
  return corpus;
}

// ---------------------------------------------------------------------------
// oracle_check

namespace {

// Naive longest path by DFS over all simple paths (independent of the DP).
int naive_longest_path(const Graph& g) {
  const int n = g.vertex_count();
  int best = n > 0 ? 1 : 0;
  std::vector<char> on(n, 0);
  std::function<void(Vertex, int)> dfs = [&](Vertex v, int len) {
    best = std::max(best, len);
    for (Vertex w : g.neighbors(v))
      if (!on[w]) {
        on[w] = 1;
        dfs(w, len + 1);
        on[w] = 0;
      }
  };
  for (Vertex v = 0; v < n; ++v) {
    on[v] = 1;
    dfs(v, 1);
    on[v] = 0;
  }
  return best;
}

// Naive Hamiltonicity by rooted DFS over permutations.
bool naive_hamiltonian(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3) return false;
  std::vector<char> on(n, 0);
  bool found = false;
  std::function<void(Vertex, int)> dfs = [&](Vertex v, int len) {
    if (found) return;
    if (len == n) {
      if (g.has_edge(v, 0)) found = true;
      return;
    }
    for (Vertex w : g.neighbors(v))
      if (!on[w]) {
        on[w] = 1;
        dfs(w, len + 1);
        on[w] = 0;
      }
  };
  on[0] = 1;
  dfs(0, 1);
  return found;
}

}  // namespace

bool OracleCheckResult::all_pass() const {
  for (const Item& item : items)
    if (!item.pass) return false;
  return true;
}

std::string OracleCheckResult::report() const {
  std::ostringstream out;
  for (const Item& item : items)
    out << (item.pass ? "[PASS] " : "[FAIL] ") << item.name
        << (item.detail.empty() ? "" : ": " + item.detail) << "\n";
  return out.str();
}

OracleCheckResult oracle_check(std::uint64_t seed) {
  OracleCheckResult out;
  auto add = [&](const std::string& name, bool pass,
                 const std::string& detail) {
    out.items.push_back({name, pass, detail});
  };

  // 1. DP longest path vs naive DFS search, n <= 9
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 60 && ok; ++i) {
      Rng rng(derive_seed(seed, "oc:longest", i));
      int n = 4 + static_cast<int>(rng.below(6));
      Graph g = sample_gnp(n, 0.15 + 0.1 * static_cast<double>(rng.below(7)),
                           derive_seed(seed, "oc:longest:g", i));
      int dp = exact_longest_path(g).length;
      int naive = naive_longest_path(g);
      if (dp != naive) {
        ok = false;
        detail = "mismatch at sample " + std::to_string(i) + ": dp=" +
                 std::to_string(dp) + " naive=" + std::to_string(naive);
      }
    }
    add("dp_longest_vs_naive", ok, detail);
  }

  // 2. exact_hamiltonicity vs naive permutation search, n <= 8
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 60 && ok; ++i) {
      Rng rng(derive_seed(seed, "oc:ham", i));
      int n = 4 + static_cast<int>(rng.below(5));
      Graph g = sample_gnp(n, 0.3 + 0.1 * static_cast<double>(rng.below(5)),
                           derive_seed(seed, "oc:ham:g", i));
      if (exact_hamiltonicity(g).hamiltonian != naive_hamiltonian(g)) {
        ok = false;
        detail = "mismatch at sample " + std::to_string(i);
      }
    }
    add("ham_dp_vs_naive", ok, detail);
  }

  // 3. blossom vs brute-force matching, n <= 12
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 200 && ok; ++i) {
      Rng rng(derive_seed(seed, "oc:nu", i));
      int n = 2 + static_cast<int>(rng.below(11));
      Graph g = sample_gnp(n, 0.1 + 0.08 * static_cast<double>(rng.below(9)),
                           derive_seed(seed, "oc:nu:g", i));
      if (max_matching(g).size() != brute_matching(g)) {
        ok = false;
        detail = "mismatch at sample " + std::to_string(i);
      }
    }
    add("blossom_vs_brute", ok, detail);
  }

  // 4. Posa booster bound on certified (k,2)-expanders
  for (int k : {2, 3}) {
    auto corpus = expander_corpus_ham(k, seed, 6);
    bool ok = true;
    std::string detail = std::to_string(corpus.size()) + " instances";
    const long long need = (static_cast<long long>(k + 1) * (k + 1) + 1) / 2;
    for (const Graph& g : corpus) {
      long long count = static_cast<long long>(enumerate_boosters(g).size());
      if (count < need) {
        ok = false;
        detail = "count " + std::to_string(count) + " < " +
                 std::to_string(need);
        break;
      }
    }
    add("posa_booster_bound_k" + std::to_string(k), ok, detail);
  }

  // 5. staple bound on certified (k,1)-expanders without perfect matchings
  for (int k : {2, 3}) {
    auto corpus = expander_corpus_pm(k, seed, 6);
    bool ok = true;
    std::string detail = std::to_string(corpus.size()) + " instances";
    const long long need = static_cast<long long>(k + 1) * k / 2;
    for (const Graph& g : corpus) {
      long long count = static_cast<long long>(enumerate_staples(g).size());
      if (count < need) {
        ok = false;
        detail = "count " + std::to_string(count) + " < " +
                 std::to_string(need);
        break;
      }
    }
    add("staple_bound_k" + std::to_string(k), ok, detail);
  }

  // 6. min-degree sandwich brackets the exact tiny-n probability
  {
    bool ok = true;
    std::string detail;
    for (int threshold : {1, 2}) {
      for (int n = 3; n <= 5 && ok; ++n) {
        auto profile = exact_gnp_profile(n, [threshold](const Graph& g) {
          return degree_profile(g).min < threshold;
        });
        for (double p : {0.2, 0.5, 0.8}) {
          double exact = exact_gnp_probability(p, n, profile);
          ProbabilitySandwich s = min_degree_prob_sandwich(n, p, threshold);
          if (!(s.lower <= exact + 1e-12 && exact <= s.upper + 1e-12)) {
            ok = false;
            detail = "n=" + std::to_string(n) + " p=" + fmt_double(p) +
                     " threshold=" + std::to_string(threshold);
            break;
          }
        }
      }
    }
    add("min_degree_sandwich_brackets", ok, detail);
  }

  // 7. bound domination over the grid
  {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 30 && ok; ++n) {
      for (double p : {0.1, 0.3, 0.5, 0.9}) {
        for (int k = 1; k <= n && ok; ++k) {
          auto tb = binom_tail_bounds(n, p, k);
          double tail = binomial_tail_exact(n, p, k);
          double point = binomial_tail_exact(n, p, k) -
                         binomial_tail_exact(n, p, k + 1);
          if (tb.tail_upper < tail - 1e-9 || tb.point_upper < point - 1e-9) {
            ok = false;
            detail = "binom_tail n=" + std::to_string(n) + " k=" +
                     std::to_string(k) + " p=" + fmt_double(p);
          }
        }
      }
    }
    add("tail_bound_domination", ok, detail);
  }

  // 8. tiny-n probabilities form a distribution
  {
    auto profile = exact_gnp_profile(4, [](const Graph&) { return true; });
    double total = exact_gnp_probability(0.37, 4, profile);
    bool ok = std::abs(total - 1.0) < 1e-12;
    add("gnp_total_probability", ok, ok ? "" : fmt_double(total));
  }

  return out;
}

}  // namespace hamex
