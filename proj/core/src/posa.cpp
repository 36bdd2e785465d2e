#include "hamex/posa.hpp"

#include <algorithm>
#include <deque>

#include <json.hpp>

#include "hamex/errors.hpp"
#include "hamex/rng.hpp"

namespace hamex {

std::string to_string(HamKind k) {
  switch (k) {
    case HamKind::cycle: return "cycle";
    case HamKind::path: return "path";
    case HamKind::none: return "none";
    case HamKind::unknown: return "unknown";
  }
  return "?";
}

PathState PathState::of(int n, std::vector<Vertex> vs) {
  PathState p;
  p.position.assign(n, -1);
  for (size_t i = 0; i < vs.size(); ++i) {
    Vertex v = vs[i];
    if (v < 0 || v >= n || p.position[v] != -1)
      throw input_error("PathState: invalid vertex sequence");
    p.position[v] = static_cast<int>(i);
  }
  p.vertices = std::move(vs);
  return p;
}

bool PathState::valid_in(const HostGraph& host) const {
  if (vertices.empty()) return false;
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    if (!host.has_edge(vertices[i], vertices[i + 1])) return false;
  return true;
}

const std::vector<Vertex>& RotationClosure::path_for(Vertex end) const {
  auto it = paths.find(end);
  if (it == paths.end())
    throw input_error("RotationClosure: end " + std::to_string(end) +
                      " not reachable");
  return it->second;
}

RotationClosure rotation_closure(const HostGraph& host, const PathState& path,
                                 Vertex fixed_end, long long max_events) {
  const int n = host.vertex_count();
  if (max_events < 0) max_events = static_cast<long long>(n) * n;
  RotationClosure closure;
  closure.fixed_end = fixed_end;

  std::vector<Vertex> root;
  if (!path.vertices.empty() && path.front() == fixed_end)
    root = path.vertices;
  else if (!path.vertices.empty() && path.back() == fixed_end) {
    root = path.vertices;
    std::reverse(root.begin(), root.end());
  } else {
    throw input_error("rotation_closure: fixed_end is not a path endpoint");
  }

  std::deque<Vertex> queue{root.back()};
  closure.paths.emplace(root.back(), std::move(root));
  std::vector<int> pos(n, -1);
  while (!queue.empty() && closure.rotation_events < max_events) {
    Vertex y = queue.front();
    queue.pop_front();
    const std::vector<Vertex>& p = closure.paths.at(y);
    const int last = static_cast<int>(p.size()) - 1;
    for (int i = 0; i <= last; ++i) pos[p[i]] = i;
    for (Vertex x : host.neighbors(y)) {
      int i = x >= 0 && x < n ? pos[x] : -1;
      if (i < 0 || i > last - 2) continue;  // off-path or the predecessor
      if (++closure.rotation_events > max_events) break;
      Vertex new_end = p[i + 1];
      if (closure.paths.count(new_end)) continue;
      std::vector<Vertex> rotated(p.begin(), p.begin() + i + 1);
      for (int j = last; j >= i + 1; --j) rotated.push_back(p[j]);
      closure.paths.emplace(new_end, std::move(rotated));
      queue.push_back(new_end);
    }
    for (int i = 0; i <= last; ++i) pos[p[i]] = -1;
  }
  closure.ends.reserve(closure.paths.size());
  for (const auto& [end, _] : closure.paths) closure.ends.push_back(end);
  return closure;
}

namespace {

// First off-path neighbour of v (ascending), or -1.
Vertex extension_of(const HostGraph& host, const PathState& path, Vertex v) {
  for (Vertex w : host.neighbors(v))
    if (path.position[w] < 0) return w;
  return -1;
}

std::vector<Vertex> append_to(std::vector<Vertex> p, Vertex w) {
  p.push_back(w);
  return p;
}

// Opens the cycle (given as a path whose endpoints are adjacent) at a vertex
// with an external neighbour; returns the strictly longer path, empty if no
// external edge exists.
std::vector<Vertex> open_cycle_through_external(const HostGraph& host,
                                                const PathState& on_path,
                                                const std::vector<Vertex>& c) {
  const int len = static_cast<int>(c.size());
  for (int i = 0; i < len; ++i) {
    Vertex w = extension_of(host, on_path, c[i]);
    if (w < 0) continue;
    std::vector<Vertex> longer;
    longer.reserve(len + 1);
    longer.push_back(w);
    for (int j = i; j < len; ++j) longer.push_back(c[j]);
    for (int j = 0; j < i; ++j) longer.push_back(c[j]);
    return longer;
  }
  return {};
}

}  // namespace

StepResult extend_or_close(const HostGraph& host, const PathState& path) {
  const int n = host.vertex_count();
  StepResult r;

  // direct extension at either endpoint
  if (Vertex w = extension_of(host, path, path.back()); w >= 0) {
    r.kind = StepKind::longer_path;
    r.path = append_to(path.vertices, w);
    return r;
  }
  if (Vertex w = extension_of(host, path, path.front()); w >= 0) {
    std::vector<Vertex> rev(path.vertices.rbegin(), path.vertices.rend());
    r.kind = StepKind::longer_path;
    r.path = append_to(std::move(rev), w);
    return r;
  }

  std::vector<Vertex> cycle_candidate;
  auto scan_side = [&](const RotationClosure& closure,
                       Vertex fixed) -> std::optional<StepResult> {
    for (Vertex y : closure.ends) {
      const std::vector<Vertex>& py = closure.path_for(y);
      if (Vertex w = extension_of(host, path, y); w >= 0) {
        StepResult out;
        out.kind = StepKind::longer_path;
        out.path = append_to(py, w);
        return out;
      }
      if (y != fixed && host.has_edge(fixed, y)) {
        if (path.length() == n) {
          StepResult out;
          out.kind = StepKind::hamilton_cycle;
          out.cycle = py;
          return out;
        }
        if (cycle_candidate.empty()) cycle_candidate = py;
      }
    }
    return std::nullopt;
  };

  RotationClosure from_front = rotation_closure(host, path, path.front());
  if (auto out = scan_side(from_front, path.front())) return *out;
  RotationClosure from_back = rotation_closure(host, path, path.back());
  if (auto out = scan_side(from_back, path.back())) return *out;

  if (!cycle_candidate.empty()) {
    std::vector<Vertex> longer =
        open_cycle_through_external(host, path, cycle_candidate);
    if (!longer.empty()) {
      r.kind = StepKind::cycle_break_restart;
      r.path = std::move(longer);
      return r;
    }
    if (!host.connected()) {
      r.kind = StepKind::stuck;
      r.diagnostic =
          "host disconnected: cycle closed on a proper component, no "
          "cycle-break edge";
      r.closure = {path.vertices, std::move(from_front), std::move(from_back)};
      return r;
    }
  }

  r.kind = StepKind::stuck;
  r.closure = {path.vertices, std::move(from_front), std::move(from_back)};
  return r;
}

std::vector<Edge> booster_candidates(const HostGraph& host,
                                     const TwoSidedClosure& closure) {
  const int n = host.vertex_count();
  long long budget = static_cast<long long>(n) * n;
  std::vector<Edge> out;
  for (const RotationClosure* side : {&closure.from_front, &closure.from_back}) {
    for (Vertex y : side->ends) {
      if (budget <= 0) break;
      PathState py = PathState::of(n, side->path_for(y));
      RotationClosure second = rotation_closure(host, py, y, budget);
      budget -= second.rotation_events;
      for (Vertex x : second.ends)
        if (x != y && !host.has_edge(x, y)) out.push_back(make_edge(x, y));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool verify_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const int n = g.vertex_count();
  if (static_cast<int>(cycle.size()) != n || n < 3) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : cycle) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (size_t i = 0; i + 1 < cycle.size(); ++i)
    if (!g.has_edge(cycle[i], cycle[i + 1])) return false;
  return g.has_edge(cycle.back(), cycle.front());
}

bool verify_path(const Graph& g, const std::vector<Vertex>& path) {
  if (path.empty()) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex v : path) {
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
  }
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.has_edge(path[i], path[i + 1])) return false;
  return true;
}

namespace {

std::vector<Vertex> grow_maximal(const HostGraph& host, Vertex start,
                                 Rng& rng) {
  const int n = host.vertex_count();
  std::vector<char> on(n, 0);
  std::deque<Vertex> path{start};
  on[start] = 1;
  std::vector<Vertex> pool;
  auto extend = [&](bool at_back) {
    while (true) {
      Vertex end = at_back ? path.back() : path.front();
      pool.clear();
      for (Vertex w : host.neighbors(end))
        if (!on[w]) pool.push_back(w);
      if (pool.empty()) break;
      Vertex w = pool[rng.below(pool.size())];
      on[w] = 1;
      if (at_back)
        path.push_back(w);
      else
        path.push_front(w);
    }
  };
  extend(true);
  extend(false);
  return {path.begin(), path.end()};
}

struct BoosterPick {
  Edge pair;
  std::vector<Vertex> next_path;  // path to continue from after adding pair
};

// Lexicographically smallest double-rotation pair that lies in E(g)\E(host);
// next_path is the witness path whose endpoints are the pair.
std::optional<BoosterPick> best_booster_in_g(const HostGraph& host,
                                             const Graph& g,
                                             const TwoSidedClosure& closure) {
  const int n = host.vertex_count();
  long long budget = static_cast<long long>(n) * n;
  std::optional<BoosterPick> best;
  for (const RotationClosure* side :
       {&closure.from_front, &closure.from_back}) {
    for (Vertex y : side->ends) {
      if (budget <= 0) break;
      PathState py = PathState::of(n, side->path_for(y));
      RotationClosure second = rotation_closure(host, py, y, budget);
      budget -= second.rotation_events;
      for (Vertex x : second.ends) {
        if (x == y || host.has_edge(x, y) || !g.has_edge(x, y)) continue;
        Edge pair = make_edge(x, y);
        if (!best || pair < best->pair)
          best = BoosterPick{pair, second.path_for(x)};
      }
    }
  }
  return best;
}

// Lexicographically smallest E(g)\E(host) edge from a rotated endpoint to an
// off-path vertex; next_path is the witness path extended by that vertex.
std::optional<BoosterPick> best_bridge_in_g(const HostGraph& host,
                                            const Graph& g,
                                            const PathState& path,
                                            const TwoSidedClosure& closure) {
  std::optional<BoosterPick> best;
  for (const RotationClosure* side :
       {&closure.from_front, &closure.from_back}) {
    for (Vertex y : side->ends) {
      for (Vertex w : g.neighbors(y)) {
        if (path.position[w] >= 0 || host.has_edge(y, w)) continue;
        Edge pair = make_edge(y, w);
        if (!best || pair < best->pair)
          best = BoosterPick{pair, append_to(side->path_for(y), w)};
      }
    }
  }
  return best;
}

HamCertificate absorb_impl(HostGraph& host, const Graph& g, int budget,
                           std::uint64_t seed) {
  HamCertificate cert;
  const int n = host.vertex_count();
  if (n < 3) {
    cert.reason = "no cycle on fewer than 3 vertices";
    return cert;
  }
  Rng rng(derive_seed(seed, "absorb:grow", 0));
  PathState path = PathState::of(
      n, grow_maximal(host, static_cast<Vertex>(rng.below(n)), rng));

  std::vector<std::vector<Vertex>> stuck_cache;
  int step = 0;
  const long long guard_limit = 64LL * n + 8LL * budget + 256;
  long long guard = 0;
  while (true) {
    if (++guard > guard_limit) {
      cert.reason = "iteration guard tripped";
      return cert;
    }
    StepResult r = extend_or_close(host, path);
    if (r.kind == StepKind::longer_path ||
        r.kind == StepKind::cycle_break_restart) {
      path = PathState::of(n, r.path);
      continue;
    }
    if (r.kind == StepKind::hamilton_cycle) {
      if (!verify_cycle(g, r.cycle))
        throw invariant_error("absorb_boosters: invalid Hamilton cycle");
      cert.kind = HamKind::cycle;
      cert.witness = std::move(r.cycle);
      return cert;
    }
    // stuck: absorb a booster from E(g)
    if (!r.diagnostic.empty()) cert.reason = r.diagnostic;
    auto pick = best_booster_in_g(host, g, r.closure);
    if (!pick) pick = best_bridge_in_g(host, g, path, r.closure);
    if (!pick) {
      // widen: closures recomputed from earlier maximal paths (still valid,
      // the host only gains edges)
      for (const auto& cached : stuck_cache) {
        PathState cp = PathState::of(n, cached);
        TwoSidedClosure two{cached,
                            rotation_closure(host, cp, cp.front()),
                            rotation_closure(host, cp, cp.back())};
        pick = best_booster_in_g(host, g, two);
        if (!pick) pick = best_bridge_in_g(host, g, cp, two);
        if (pick) break;
      }
    }
    if (stuck_cache.size() < 16) stuck_cache.push_back(path.vertices);
    if (!pick) {
      cert.kind = HamKind::unknown;
      if (cert.reason.empty())
        cert.reason = "no booster candidate lies in E(G)";
      return cert;
    }
    if (step >= budget) {
      cert.kind = HamKind::unknown;
      cert.reason = "booster budget exhausted after " + std::to_string(step);
      return cert;
    }
    host.add_edge(pick->pair.first, pick->pair.second);
    cert.trace.push_back({step++, pick->pair});
    path = PathState::of(n, pick->next_path);
  }
}

}  // namespace

HamCertificate absorb_boosters(const Skeleton& skeleton, const Graph& g,
                               int budget, std::uint64_t seed) {
  HostGraph host(skeleton.graph);
  return absorb_impl(host, g, budget, seed);
}

HamPathResult hamilton_path_between(const Graph& g, Vertex u, Vertex v,
                                    int budget,
                                    const OracleBudget& oracle_budget) {
  const int n = g.vertex_count();
  if (u == v) throw input_error("hamilton_path_between: u == v");
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw input_error("hamilton_path_between: endpoint out of range");
  HamPathResult result;
  if (n == 2) {
    if (g.has_edge(u, v)) {
      result.status = HamPathResult::Status::found;
      result.path = {u, v};
    } else {
      result.status = HamPathResult::Status::none;
    }
    return result;
  }

  // pinned rotation-extension in g - v, closing through a neighbour of v
  if (g.degree(v) > 0 && g.degree(u) > 0) {
    Graph rest = g.without_vertex(v);
    auto to_sub = [v](Vertex w) { return w > v ? w - 1 : w; };
    auto to_orig = [v](Vertex w) { return w >= v ? w + 1 : w; };
    std::vector<char> target(n - 1, 0);
    for (Vertex w : g.neighbors(v)) target[to_sub(w)] = 1;

    HostGraph host(rest);
    Rng rng(derive_seed(0x9e1ful, "ham_path_between",
                        (static_cast<std::uint64_t>(u) << 20) ^
                            static_cast<std::uint64_t>(v)));
    Vertex su = to_sub(u);
    std::vector<char> on(n - 1, 0);
    std::vector<Vertex> grown{su};
    on[su] = 1;
    std::vector<Vertex> pool;
    while (true) {
      pool.clear();
      for (Vertex w : host.neighbors(grown.back()))
        if (!on[w]) pool.push_back(w);
      if (pool.empty()) break;
      Vertex w = pool[rng.below(pool.size())];
      on[w] = 1;
      grown.push_back(w);
    }
    PathState path = PathState::of(n - 1, grown);

    for (int iter = 0; iter < budget; ++iter) {
      RotationClosure closure = rotation_closure(host, path, su);
      if (path.length() == n - 1) {
        for (Vertex y : closure.ends)
          if (target[y]) {
            std::vector<Vertex> full;
            full.reserve(n);
            for (Vertex w : closure.path_for(y)) full.push_back(to_orig(w));
            full.push_back(v);
            result.status = HamPathResult::Status::found;
            result.path = std::move(full);
            return result;
          }
        break;  // spanning but no end adjacent to v
      }
      bool extended = false;
      for (Vertex y : closure.ends) {
        if (Vertex w = extension_of(host, path, y); w >= 0) {
          path = PathState::of(n - 1, append_to(closure.path_for(y), w));
          extended = true;
          break;
        }
      }
      if (!extended) break;
    }
  }

  if (n <= oracle_budget.max_n_dp) {
    auto exact = exact_hamilton_path_between(g, u, v, oracle_budget);
    if (exact) {
      result.status = HamPathResult::Status::found;
      result.path = std::move(*exact);
    } else {
      result.status = HamPathResult::Status::none;
    }
    return result;
  }
  result.status = HamPathResult::Status::unknown;
  return result;
}

HamCertificate solve_hamilton(const Graph& g, const RegimeParams& params,
                              SolveMode mode, std::uint64_t seed,
                              const OracleBudget& oracle_budget) {
  HamCertificate cert;
  cert.regime = params.regime;
  cert.seeds = {seed};
  const int n = g.vertex_count();

  if (n < 3) {
    cert.kind = HamKind::none;
    cert.reason = "no cycle on fewer than 3 vertices";
    return cert;
  }
  if (degree_profile(g).min < 2) {
    cert.kind = HamKind::none;
    cert.reason = "minimum degree below 2";
    return cert;
  }

  auto finish_cycle = [&](HamCertificate c) {
    if (!verify_cycle(g, c.witness))
      throw invariant_error("solve_hamilton: cycle failed verification");
    return c;
  };

  auto oracle_route = [&](HamCertificate base) {
    HamOracleResult res = exact_hamiltonicity(g, oracle_budget);
    if (res.hamiltonian) {
      base.kind = HamKind::cycle;
      base.witness = std::move(res.cycle);
      return finish_cycle(std::move(base));
    }
    base.kind = HamKind::none;
    base.reason = "exact subset DP: no Hamilton cycle";
    return base;
  };

  if (mode == SolveMode::exact) return oracle_route(std::move(cert));

  if (params.regime == Regime::very_dense) {
    auto prof = degree_profile(g);
    Vertex v = static_cast<Vertex>(
        std::min_element(prof.degrees.begin(), prof.degrees.end()) -
        prof.degrees.begin());
    const auto& nbrs = g.neighbors(v);
    const long long all_pairs =
        static_cast<long long>(nbrs.size()) * (nbrs.size() - 1) / 2;
    const long long try_cap = 12;
    long long tried = 0;
    bool all_none = true;
    Graph rest = g.without_vertex(v);
    auto to_sub = [v](Vertex w) { return w > v ? w - 1 : w; };
    auto to_orig = [v](Vertex w) { return w >= v ? w + 1 : w; };
    for (size_t i = 0; i < nbrs.size() && tried < try_cap; ++i)
      for (size_t j = i + 1; j < nbrs.size() && tried < try_cap; ++j) {
        ++tried;
        HamPathResult hp = hamilton_path_between(
            rest, to_sub(nbrs[i]), to_sub(nbrs[j]), 4 * n, oracle_budget);
        if (hp.status == HamPathResult::Status::found) {
          cert.kind = HamKind::cycle;
          cert.witness.reserve(n);
          cert.witness.push_back(v);
          for (Vertex w : hp.path) cert.witness.push_back(to_orig(w));
          cert.fallbacks_used.push_back(
              "very_dense: vertex-deletion Hamilton path route");
          return finish_cycle(std::move(cert));
        }
        if (hp.status != HamPathResult::Status::none) all_none = false;
      }
    if (tried == all_pairs && all_none && tried > 0) {
      cert.kind = HamKind::none;
      cert.reason =
          "no Hamilton path between any neighbour pair of a minimum-degree "
          "vertex (exact)";
      return cert;
    }
    cert.fallbacks_used.push_back("very_dense route inconclusive");
  } else {
    const int redraws = 5;
    for (int attempt = 0; attempt < redraws; ++attempt) {
      Skeleton sk =
          build_skeleton(g, params, derive_seed(seed, "ham:skeleton", attempt));
      HostGraph host(sk.graph);
      HamCertificate run = absorb_impl(
          host, g, 2 * n, derive_seed(seed, "ham:absorb", attempt));
      if (run.kind == HamKind::cycle) {
        run.regime = params.regime;
        run.seeds = {seed};
        if (attempt > 0)
          run.fallbacks_used.push_back("skeleton re-drawn " +
                                       std::to_string(attempt) + "x");
        return finish_cycle(std::move(run));
      }
      if (attempt == redraws - 1) cert.reason = run.reason;
    }
    cert.fallbacks_used.push_back("skeleton re-draws exhausted");
  }

  // host = G itself
  {
    HostGraph host(g);
    HamCertificate run =
        absorb_impl(host, g, 2 * n, derive_seed(seed, "ham:ghost", 0));
    if (run.kind == HamKind::cycle) {
      run.regime = params.regime;
      run.seeds = {seed};
      run.fallbacks_used = cert.fallbacks_used;
      run.fallbacks_used.push_back("host = G");
      return finish_cycle(std::move(run));
    }
    if (cert.reason.empty()) cert.reason = run.reason;
  }

  if (mode == SolveMode::auto_fallback && n <= oracle_budget.max_n_dp) {
    cert.fallbacks_used.push_back("exact oracle");
    return oracle_route(std::move(cert));
  }
  cert.kind = HamKind::unknown;
  if (cert.reason.empty()) cert.reason = "pipeline inconclusive";
  return cert;
}

std::string to_json(const HamCertificate& cert) {
  nlohmann::json j;
  j["kind"] = to_string(cert.kind);
  j["witness"] = cert.witness;
  nlohmann::json trace = nlohmann::json::array();
  for (const TraceStep& t : cert.trace)
    trace.push_back({{"step", t.step}, {"edge", {t.edge.first, t.edge.second}}});
  j["trace"] = trace;
  j["regime"] = to_string(cert.regime);
  j["seeds"] = cert.seeds;
  j["fallbacks_used"] = cert.fallbacks_used;
  if (!cert.reason.empty()) j["reason"] = cert.reason;
  return j.dump();
}

}  // namespace hamex
