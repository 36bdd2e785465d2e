#include "hamex/properties.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>

#include <json.hpp>

#include "hamex/errors.hpp"
#include "hamex/rng.hpp"

namespace hamex {

std::string to_string(PropertyLabel label) {
  switch (label) {
    case PropertyLabel::P0: return "P0";
    case PropertyLabel::P1: return "P1";
    case PropertyLabel::P2: return "P2";
    case PropertyLabel::P3: return "P3";
    case PropertyLabel::P4: return "P4";
    case PropertyLabel::P5: return "P5";
    case PropertyLabel::P6: return "P6";
    case PropertyLabel::P7: return "P7";
    case PropertyLabel::Q0: return "Q0";
    case PropertyLabel::Q1: return "Q1";
    case PropertyLabel::Q2: return "Q2";
    case PropertyLabel::Q3: return "Q3";
    case PropertyLabel::Q4: return "Q4";
    case PropertyLabel::Q5: return "Q5";
    case PropertyLabel::R0: return "R0";
    case PropertyLabel::R1: return "R1";
    case PropertyLabel::R2: return "R2";
    case PropertyLabel::R3: return "R3";
    case PropertyLabel::EXPANDER: return "EXPANDER";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

std::string to_string(CheckMode m) {
  return m == CheckMode::exact ? "exact" : "randomized";
}

SmallSet small_vertices(const Graph& g, double threshold) {
  if (threshold < 0) throw input_error("small_vertices: threshold < 0");
  std::vector<Vertex> members;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) <= threshold) members.push_back(v);
  return {threshold, VertexSet(std::move(members))};
}

namespace {

// Incremental statistics for a growing/shrinking subset S:
//   cnt[w]   = number of neighbours of w inside S
//   e_within = e(S)
//   external_nbrs() = |N(S)|
struct SubsetScan {
  explicit SubsetScan(const Graph& g)
      : g(g), cnt(g.vertex_count(), 0), in_s(g.vertex_count(), 0) {}

  void push(Vertex v) {
    e_within += cnt[v];
    in_s[v] = 1;
    if (cnt[v] > 0) ++pos_in_s;
    for (Vertex w : g.neighbors(v))
      if (cnt[w]++ == 0) {
        ++n_pos;
        if (in_s[w]) ++pos_in_s;
      }
    members.push_back(v);
  }

  void pop() {
    Vertex v = members.back();
    members.pop_back();
    for (Vertex w : g.neighbors(v))
      if (--cnt[w] == 0) {
        --n_pos;
        if (in_s[w]) --pos_in_s;
      }
    in_s[v] = 0;
    if (cnt[v] > 0) --pos_in_s;
    e_within -= cnt[v];
  }

  int size() const { return static_cast<int>(members.size()); }
  int external_nbrs() const { return n_pos - pos_in_s; }

  const Graph& g;
  std::vector<int> cnt;
  std::vector<char> in_s;
  std::vector<Vertex> members;
  long long e_within = 0;
  int n_pos = 0;      // vertices with cnt > 0
  int pos_in_s = 0;   // members with cnt > 0
};

// Sum over the k outside vertices with the largest (resp. smallest) cnt;
// `largest` skips zero counts since they cannot raise the sum.
struct Selection {
  long long sum = 0;
  std::vector<Vertex> picked;
};

Selection select_outside(const SubsetScan& scan, int k, bool largest) {
  std::vector<std::pair<int, Vertex>> counts;
  counts.reserve(scan.g.vertex_count());
  for (Vertex w = 0; w < scan.g.vertex_count(); ++w) {
    if (scan.in_s[w]) continue;
    if (largest && scan.cnt[w] == 0) continue;
    counts.emplace_back(scan.cnt[w], w);
  }
  if (largest)
    std::sort(counts.begin(), counts.end(),
              [](auto a, auto b) { return a > b; });
  else
    std::sort(counts.begin(), counts.end());
  Selection sel;
  for (int i = 0; i < k && i < static_cast<int>(counts.size()); ++i) {
    sel.sum += counts[i].first;
    sel.picked.push_back(counts[i].second);
  }
  return sel;
}

// sum_{j=lo..hi} C(n,j), clamped at cap+1.
long long subset_count(int n, int hi, long long cap) {
  long long total = 0;
  double c = 1.0;
  for (int j = 1; j <= hi && j <= n; ++j) {
    c = c * (n - j + 1) / j;
    if (c > static_cast<double>(cap) - total) return cap + 1;
    total += static_cast<long long>(c);
    if (total > cap) return cap + 1;
  }
  return total;
}

using SubsetCheck =
    std::function<std::optional<Witness>(const SubsetScan&)>;

// Lexicographic DFS over subsets of size in [1, hi]; check runs on every
// visited subset of size in [lo, hi]; the first witness (lexicographically
// first violator) is returned.
std::optional<Witness> enumerate_lex(const Graph& g, int lo, int hi,
                                     const SubsetCheck& check) {
  SubsetScan scan(g);
  std::optional<Witness> found;
  std::function<bool(Vertex)> dfs = [&](Vertex next_min) -> bool {
    if (scan.size() >= lo) {
      if (auto w = check(scan)) {
        found = std::move(w);
        return false;
      }
    }
    if (scan.size() == hi) return true;
    for (Vertex v = next_min; v < g.vertex_count(); ++v) {
      scan.push(v);
      bool keep_going = dfs(v + 1);
      scan.pop();
      if (!keep_going) return false;
    }
    return true;
  };
  dfs(0);
  return found;
}

// Randomized refutation: alternating uniform subsets and clustered sets
// grown from low-degree seeds.
std::optional<Witness> randomized_search(const Graph& g, int lo, int hi,
                                         long long trials, Rng& rng,
                                         const SubsetCheck& check) {
  const int n = g.vertex_count();
  if (lo > n || lo < 1 || hi < lo) return std::nullopt;
  SubsetScan scan(g);
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  for (long long t = 0; t < trials; ++t) {
    int target = lo + static_cast<int>(rng.below(
                          static_cast<std::uint64_t>(hi - lo + 1)));
    target = std::min(target, n);
    if (t % 2 == 0) {
      // uniform subset via partial shuffle
      for (int i = 0; i < target; ++i) {
        int j = i + static_cast<int>(rng.below(
                        static_cast<std::uint64_t>(n - i)));
        std::swap(ids[i], ids[j]);
        scan.push(ids[i]);
      }
    } else {
      // clustered growth from a low-degree seed
      Vertex seed = static_cast<Vertex>(rng.below(n));
      for (int c = 0; c < 2; ++c) {
        Vertex alt = static_cast<Vertex>(rng.below(n));
        if (g.degree(alt) < g.degree(seed)) seed = alt;
      }
      scan.push(seed);
      while (scan.size() < target) {
        Vertex grow_from =
            scan.members[rng.below(scan.members.size())];
        const auto& nbrs = g.neighbors(grow_from);
        Vertex pick = -1;
        if (!nbrs.empty()) {
          Vertex cand = nbrs[rng.below(nbrs.size())];
          if (!scan.in_s[cand]) pick = cand;
        }
        if (pick < 0) {
          Vertex cand = static_cast<Vertex>(rng.below(n));
          if (scan.in_s[cand]) {
            // fall back to first free id
            for (Vertex v = 0; v < n; ++v)
              if (!scan.in_s[v]) {
                cand = v;
                break;
              }
          }
          pick = cand;
        }
        scan.push(pick);
      }
    }
    auto w = check(scan);
    while (scan.size() > 0) scan.pop();
    if (w) return w;
  }
  return std::nullopt;
}

struct SubsetProperty {
  PropertyLabel label;
  int lo = 1, hi = 0;        // subset size range; empty => vacuous
  std::string vacuous_note;  // set when the rounded range is empty
  SubsetCheck check;
};

PropertyReport run_subset_property(const Graph& g, const SubsetProperty& prop,
                                   const CheckOptions& opts,
                                   std::uint64_t salt) {
  PropertyReport report;
  report.label = prop.label;
  if (prop.hi < prop.lo || prop.lo < 1 || prop.lo > g.vertex_count()) {
    report.verdict = Verdict::holds;
    report.mode = CheckMode::exact;
    report.note = prop.vacuous_note.empty()
                      ? "vacuous: quantifier range empty"
                      : prop.vacuous_note;
    return report;
  }
  const long long work =
      subset_count(g.vertex_count(), prop.hi, opts.subset_budget);
  const bool exact_feasible =
      opts.mode == CheckMode::exact && work <= opts.subset_budget;
  if (exact_feasible) {
    report.mode = CheckMode::exact;
    auto w = enumerate_lex(g, prop.lo, prop.hi, prop.check);
    report.verdict = w ? Verdict::violated : Verdict::holds;
    report.witness = std::move(w);
  } else {
    report.mode = CheckMode::randomized;
    report.trials = opts.trials;
    if (opts.mode == CheckMode::exact)
      report.note = "exact enumeration over budget; randomized refutation";
    Rng rng(derive_seed(opts.seed, "props:" + to_string(prop.label), salt));
    auto w = randomized_search(g, prop.lo, prop.hi, opts.trials, rng,
                               prop.check);
    report.verdict = w ? Verdict::violated : Verdict::unknown;
    report.witness = std::move(w);
  }
  return report;
}

PropertyReport min_degree_report(PropertyLabel label, const Graph& g) {
  PropertyReport r{label, Verdict::holds, CheckMode::exact, 0, {}, {}};
  auto prof = degree_profile(g);
  if (g.vertex_count() == 0 || prof.min >= 2) return r;
  Vertex v = static_cast<Vertex>(
      std::min_element(prof.degrees.begin(), prof.degrees.end()) -
      prof.degrees.begin());
  r.verdict = Verdict::violated;
  r.witness = Witness{VertexSet{v}, std::nullopt, prof.min,
                      "vertex of degree " + std::to_string(prof.min)};
  return r;
}

PropertyReport max_degree_report(PropertyLabel label, const Graph& g,
                                 double bound) {
  PropertyReport r{label, Verdict::holds, CheckMode::exact, 0, {}, {}};
  auto prof = degree_profile(g);
  if (g.vertex_count() == 0 || prof.max <= bound) return r;
  Vertex v = static_cast<Vertex>(
      std::max_element(prof.degrees.begin(), prof.degrees.end()) -
      prof.degrees.begin());
  r.verdict = Verdict::violated;
  r.witness = Witness{VertexSet{v}, std::nullopt, prof.max,
                      "vertex of degree " + std::to_string(prof.max) +
                          " > bound"};
  return r;
}

PropertyReport small_count_report(PropertyLabel label, const Graph& g,
                                  double threshold, double cap) {
  PropertyReport r{label, Verdict::holds, CheckMode::exact, 0, {}, {}};
  SmallSet small = small_vertices(g, threshold);
  if (small.members.size() <= cap) return r;
  r.verdict = Verdict::violated;
  r.witness = Witness{small.members, std::nullopt, small.members.size(),
                      "low-degree vertices exceed cap"};
  return r;
}

// P3: no two SMALL vertices within distance 4 of each other.
PropertyReport small_distance_report(const Graph& g, double threshold) {
  PropertyReport r{PropertyLabel::P3, Verdict::holds, CheckMode::exact, 0,
                   {}, {}};
  SmallSet small = small_vertices(g, threshold);
  std::vector<int> dist(g.vertex_count());
  for (Vertex s : small.members) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      if (dist[x] == 4) continue;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        if (y > s && small.members.contains(y)) {
          r.verdict = Verdict::violated;
          r.witness = Witness{VertexSet{s, y}, std::nullopt, dist[y],
                              "SMALL vertices at distance " +
                                  std::to_string(dist[y])};
          return r;
        }
        queue.push_back(y);
      }
    }
  }
  return r;
}

}  // namespace

PropertySuiteResult check_suite(const Graph& g, const RegimeParams& params,
                                const CheckOptions& opts) {
  if (g.vertex_count() != params.n)
    throw input_error("check_suite: params.n != graph size");
  PropertySuiteResult out;
  out.regime = params.regime;

  // regime/params consistency warnings (never fatal)
  {
    RegimeOverrides ov;
    ov.omega_min = params.omega_min;
    ov.paper_mode = params.paper_mode;
    Regime expected = regime_params(params.n, params.p, ov).regime;
    if (expected != params.regime)
      out.warnings.push_back("regime/params mismatch: boundaries give " +
                             to_string(expected) + ", params carry " +
                             to_string(params.regime));
  }
  if (params.regime == Regime::very_sparse)
    out.warnings.push_back(
        "very_sparse regime: sparse suite (P0-P6) applied as a diagnostic");

  const int n = params.n;
  const double ln_n = std::log(static_cast<double>(n));

  auto add = [&](PropertyReport r) { out.reports.push_back(std::move(r)); };

  if (params.regime == Regime::sparse || params.regime == Regime::very_sparse) {
    add(min_degree_report(PropertyLabel::P0, g));
    add(max_degree_report(PropertyLabel::P1, g, params.max_degree_bound));
    add(small_count_report(PropertyLabel::P2, g, params.d0,
                           std::pow(static_cast<double>(n), 0.3)));
    add(small_distance_report(g, params.d0));

    const int s46 = static_cast<int>(std::floor(params.subset_size_p46()));
    const double c4 = std::pow(ln_n, 0.75);
    SubsetProperty p4;
    p4.label = PropertyLabel::P4;
    p4.lo = 1;
    p4.hi = std::min(s46, n);
    p4.check = [c4](const SubsetScan& scan) -> std::optional<Witness> {
      if (static_cast<double>(scan.e_within) >= scan.size() * c4)
        return Witness{VertexSet(scan.members), std::nullopt, scan.e_within,
                       "e(U) >= |U| ln^{3/4} n"};
      return std::nullopt;
    };
    add(run_subset_property(g, p4, opts, 4));

    const double w_factor = std::pow(ln_n, 0.25);
    const double d0 = params.d0;
    SubsetProperty p5;
    p5.label = PropertyLabel::P5;
    p5.lo = 1;
    p5.hi = std::min(s46, n);
    p5.check = [w_factor, d0](const SubsetScan& scan)
        -> std::optional<Witness> {
      int cap = static_cast<int>(std::floor(scan.size() * w_factor));
      if (cap < 1) return std::nullopt;
      Selection sel = select_outside(scan, cap, /*largest=*/true);
      if (static_cast<double>(sel.sum) >= d0 * scan.size() / 2.0 &&
          !sel.picked.empty())
        return Witness{VertexSet(scan.members), VertexSet(sel.picked),
                       sel.sum, "e(U,W) >= d0 |U| / 2"};
      return std::nullopt;
    };
    add(run_subset_property(g, p5, opts, 5));

    SubsetProperty p6;
    p6.label = PropertyLabel::P6;
    if (s46 >= 1 && 2 * s46 <= n) {
      p6.lo = p6.hi = s46;
    } else {
      p6.lo = 1;
      p6.hi = 0;
      p6.vacuous_note =
          "vacuous: two disjoint sets of size " + std::to_string(s46) +
          " do not fit in n=" + std::to_string(n);
    }
    const double half_n = n / 2.0;
    p6.check = [s46, half_n](const SubsetScan& scan)
        -> std::optional<Witness> {
      Selection sel = select_outside(scan, s46, /*largest=*/false);
      if (static_cast<int>(sel.picked.size()) < s46) return std::nullopt;
      if (static_cast<double>(sel.sum) < half_n)
        return Witness{VertexSet(scan.members), VertexSet(sel.picked),
                       sel.sum, "e(U,W) < n/2"};
      return std::nullopt;
    };
    add(run_subset_property(g, p6, opts, 6));
  } else if (params.regime == Regime::dense) {
    add(min_degree_report(PropertyLabel::Q0, g));
    add(max_degree_report(PropertyLabel::Q1, g, params.max_degree_bound));
    add(small_count_report(PropertyLabel::Q2, g, params.t0, 1.0));

    const int m3 = static_cast<int>(std::floor(params.small_pair_size_q()));
    SubsetProperty q3;
    q3.label = PropertyLabel::Q3;
    if (m3 >= 1 && 2 * m3 <= n) {
      q3.lo = q3.hi = m3;
    } else {
      q3.lo = 1;
      q3.hi = 0;
      q3.vacuous_note = "vacuous: 1e-13 n rounds to " + std::to_string(m3);
    }
    const double q3_bound = 1e-27 * static_cast<double>(n) * n * params.p;
    q3.check = [m3, q3_bound](const SubsetScan& scan)
        -> std::optional<Witness> {
      Selection sel = select_outside(scan, m3, /*largest=*/false);
      if (static_cast<int>(sel.picked.size()) < m3) return std::nullopt;
      if (static_cast<double>(sel.sum) < q3_bound)
        return Witness{VertexSet(scan.members), VertexSet(sel.picked),
                       sel.sum, "e(U,W) < 1e-27 n^2 p"};
      return std::nullopt;
    };
    add(run_subset_property(g, q3, opts, 3));

    const double t0 = params.t0;
    SubsetProperty q4;
    q4.label = PropertyLabel::Q4;
    int k_lo = std::max(1, static_cast<int>(std::ceil(t0 / 3.0 - 1.0)));
    int k_hi = m3;
    if (k_lo <= k_hi) {
      q4.lo = k_lo;
      q4.hi = k_hi;
    } else {
      q4.lo = 1;
      q4.hi = 0;
      q4.vacuous_note = "vacuous: [ceil(t0/3-1), floor(1e-13 n)] is empty";
    }
    q4.check = [t0, n](const SubsetScan& scan) -> std::optional<Witness> {
      const int wsize = 2 * scan.size() + 3;
      if (scan.size() + wsize > n) return std::nullopt;
      Selection sel = select_outside(scan, wsize, /*largest=*/true);
      // W has exact size 2|U|+3; zero-count vertices may pad it.
      long long value = sel.sum + scan.e_within;
      if (static_cast<double>(value) >= t0 * scan.size()) {
        std::vector<Vertex> w = sel.picked;
        for (Vertex v = 0; static_cast<int>(w.size()) < wsize &&
                           v < scan.g.vertex_count();
             ++v)
          if (!scan.in_s[v] &&
              std::find(w.begin(), w.end(), v) == w.end())
            w.push_back(v);
        return Witness{VertexSet(scan.members), VertexSet(std::move(w)),
                       value, "e(U,W) + e(U) >= t0 |U|"};
      }
      return std::nullopt;
    };
    add(run_subset_property(g, q4, opts, 44));
  } else {  // very_dense
    add(min_degree_report(PropertyLabel::R0, g));
    {
      PropertyReport r{PropertyLabel::R1, Verdict::holds, CheckMode::exact,
                       0, {}, {}};
      SmallSet low = small_vertices(g, params.low_degree_r1());
      if (low.members.size() > 1) {
        r.verdict = Verdict::violated;
        r.witness = Witness{low.members, std::nullopt, low.members.size(),
                            "more than one vertex of degree <= np/10"};
      }
      add(std::move(r));
    }

    const int m2 = static_cast<int>(std::floor(params.cross_size_r2()));
    SubsetProperty r2;
    r2.label = PropertyLabel::R2;
    if (m2 >= 1 && 2 * m2 <= n) {
      r2.lo = r2.hi = m2;
    } else {
      r2.lo = 1;
      r2.hi = 0;
      r2.vacuous_note = "vacuous: np/30 rounds to " + std::to_string(m2);
    }
    r2.check = [m2](const SubsetScan& scan) -> std::optional<Witness> {
      Selection sel = select_outside(scan, m2, /*largest=*/false);
      if (static_cast<int>(sel.picked.size()) < m2) return std::nullopt;
      if (sel.sum == 0)
        return Witness{VertexSet(scan.members), VertexSet(sel.picked), 0,
                       "e(U,W) = 0"};
      return std::nullopt;
    };
    add(run_subset_property(g, r2, opts, 2));

    {
      PropertyReport r{PropertyLabel::R3, Verdict::holds, CheckMode::exact,
                       0, {}, {}};
      const double cap = params.indep_cap_r3();
      IndependenceResult ir =
          independence_number(g, opts.independence_exact_limit);
      if (ir.exact) {
        if (ir.value > cap) {
          r.verdict = Verdict::violated;
          r.witness = Witness{ir.witness, std::nullopt, ir.value,
                              "independent set larger than np/40"};
        }
      } else {
        r.mode = CheckMode::randomized;
        if (ir.value > cap) {
          r.verdict = Verdict::violated;
          r.witness = Witness{ir.witness, std::nullopt, ir.value,
                              "greedy independent set larger than np/40"};
        } else {
          r.verdict = Verdict::unknown;
          r.note = "alpha(G) above exact limit; greedy bound " +
                   std::to_string(ir.value) + " does not refute";
        }
      }
      add(std::move(r));
    }
  }
  return out;
}

PropertyReport is_expander(const Graph& g, int k, double alpha,
                           const CheckOptions& opts) {
  if (k > g.vertex_count()) throw input_error("is_expander: k > n");
  PropertyReport report;
  report.label = PropertyLabel::EXPANDER;
  SubsetCheck check = [alpha](const SubsetScan& scan)
      -> std::optional<Witness> {
    int ext = scan.external_nbrs();
    if (static_cast<double>(ext) < alpha * scan.size())
      return Witness{VertexSet(scan.members), std::nullopt, ext,
                     "|N(W)| < alpha |W|"};
    return std::nullopt;
  };
  if (k < 1) {
    report.verdict = Verdict::holds;
    report.note = "vacuous: k < 1";
    return report;
  }
  const long long work = subset_count(g.vertex_count(), k, opts.subset_budget);
  if (opts.mode == CheckMode::exact && work <= opts.subset_budget) {
    report.mode = CheckMode::exact;
    auto w = enumerate_lex(g, 1, k, check);
    report.verdict = w ? Verdict::violated : Verdict::holds;
    report.witness = std::move(w);
  } else {
    report.mode = CheckMode::randomized;
    report.trials = opts.trials;
    if (opts.mode == CheckMode::exact)
      report.note = "exact enumeration over budget; randomized refutation";
    Rng rng(derive_seed(opts.seed, "props:EXPANDER", 7));
    auto w = randomized_search(g, 1, k, opts.trials, rng, check);
    report.verdict = w ? Verdict::violated : Verdict::unknown;
    report.witness = std::move(w);
  }
  return report;
}

namespace {

// Max-flow with unit vertex capacities (vertex splitting); value equals the
// number of internally vertex-disjoint s-t paths.
struct FlowNet {
  struct Arc {
    int to, rev, cap;
  };
  std::vector<std::vector<Arc>> arcs;
  explicit FlowNet(int nodes) : arcs(nodes) {}
  void add(int a, int b, int cap) {
    arcs[a].push_back({b, static_cast<int>(arcs[b].size()), cap});
    arcs[b].push_back({a, static_cast<int>(arcs[a].size()) - 1, 0});
  }
  int augment(int s, int t) {
    std::vector<int> prev_node(arcs.size(), -1), prev_arc(arcs.size(), -1);
    std::deque<int> queue{s};
    prev_node[s] = s;
    while (!queue.empty() && prev_node[t] < 0) {
      int x = queue.front();
      queue.pop_front();
      for (size_t i = 0; i < arcs[x].size(); ++i) {
        const Arc& a = arcs[x][i];
        if (a.cap <= 0 || prev_node[a.to] >= 0) continue;
        prev_node[a.to] = x;
        prev_arc[a.to] = static_cast<int>(i);
        queue.push_back(a.to);
      }
    }
    if (prev_node[t] < 0) return 0;
    for (int x = t; x != s; x = prev_node[x]) {
      Arc& a = arcs[prev_node[x]][prev_arc[x]];
      a.cap -= 1;
      arcs[x][a.rev].cap += 1;
    }
    return 1;
  }
  int max_flow(int s, int t, int stop_at) {
    int flow = 0;
    while (flow < stop_at && augment(s, t)) ++flow;
    return flow;
  }
};

int local_connectivity(const Graph& g, Vertex s, Vertex t, int stop_at) {
  const int n = g.vertex_count();
  FlowNet net(2 * n);
  auto v_in = [](Vertex v) { return 2 * v; };
  auto v_out = [](Vertex v) { return 2 * v + 1; };
  const int big = n + 1;
  for (Vertex v = 0; v < n; ++v)
    net.add(v_in(v), v_out(v), (v == s || v == t) ? big : 1);
  for (Edge e : g.edges()) {
    net.add(v_out(e.first), v_in(e.second), big);
    net.add(v_out(e.second), v_in(e.first), big);
  }
  return net.max_flow(v_out(s), v_in(t), stop_at);
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw input_error("vertex_connectivity: need n >= 2");
  if (g.edge_count() == pair_count(n)) return n - 1;  // complete graph
  if (!is_connected(g)) return 0;
  int best = degree_profile(g).min;  // kappa <= delta
  for (Vertex s = 0; s < n && best > 0; ++s)
    for (Vertex t = s + 1; t < n && best > 0; ++t) {
      if (g.has_edge(s, t)) continue;
      best = std::min(best, local_connectivity(g, s, t, best));
    }
  return best;
}

namespace {

struct MisSearch {
  const std::vector<std::uint64_t>& adj;
  int best = 0;
  std::uint64_t best_set = 0;

  void go(std::uint64_t cand, int size, std::uint64_t chosen) {
    if (size + std::popcount(cand) <= best) return;
    if (cand == 0) {
      best = size;
      best_set = chosen;
      return;
    }
    // pivot on the candidate with most candidate-neighbours
    int pivot = -1, pivot_deg = -1;
    for (std::uint64_t m = cand; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      int d = std::popcount(adj[v] & cand);
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = v;
      }
    }
    std::uint64_t bit = std::uint64_t{1} << pivot;
    go((cand & ~bit) & ~adj[pivot], size + 1, chosen | bit);  // include
    go(cand & ~bit, size, chosen);                            // exclude
  }
};

}  // namespace

IndependenceResult independence_number(const Graph& g, int exact_limit) {
  const int n = g.vertex_count();
  IndependenceResult out;
  if (n == 0) {
    out.exact = true;
    return out;
  }
  if (n <= exact_limit && n <= 64) {
    std::vector<std::uint64_t> adj(n, 0);
    for (Edge e : g.edges()) {
      adj[e.first] |= std::uint64_t{1} << e.second;
      adj[e.second] |= std::uint64_t{1} << e.first;
    }
    MisSearch search{adj};
    std::uint64_t all =
        n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    search.go(all, 0, 0);
    out.value = search.best;
    out.exact = true;
    std::vector<Vertex> ids;
    for (int v = 0; v < n; ++v)
      if (search.best_set >> v & 1) ids.push_back(v);
    out.witness = VertexSet(std::move(ids));
    return out;
  }
  // greedy lower bound: repeatedly take a minimum-degree vertex
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> picked;
  int remaining = n;
  while (remaining > 0) {
    Vertex best_v = -1;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && (best_v < 0 || deg[v] < deg[best_v])) best_v = v;
    picked.push_back(best_v);
    alive[best_v] = 0;
    --remaining;
    for (Vertex w : g.neighbors(best_v))
      if (alive[w]) {
        alive[w] = 0;
        --remaining;
        for (Vertex x : g.neighbors(w))
          if (alive[x]) --deg[x];
      }
  }
  out.value = static_cast<int>(picked.size());
  out.exact = false;
  out.witness = VertexSet(std::move(picked));
  return out;
}

namespace {

nlohmann::json witness_json(const Witness& w) {
  nlohmann::json j;
  j["u"] = w.u.ids();
  if (w.w) j["w"] = w.w->ids();
  j["value"] = w.value;
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

nlohmann::json report_json(const PropertyReport& r) {
  nlohmann::json j;
  j["label"] = to_string(r.label);
  j["verdict"] = to_string(r.verdict);
  j["mode"] = to_string(r.mode);
  if (r.mode == CheckMode::randomized) j["trials"] = r.trials;
  if (r.witness) j["witness"] = witness_json(*r.witness);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace

std::string to_json(const PropertyReport& report) {
  return report_json(report).dump();
}

std::string to_json(const PropertySuiteResult& result) {
  nlohmann::json j;
  j["regime"] = to_string(result.regime);
  j["reports"] = nlohmann::json::array();
  for (const auto& r : result.reports) j["reports"].push_back(report_json(r));
  if (!result.warnings.empty()) j["warnings"] = result.warnings;
  return j.dump();
}

}  // namespace hamex
