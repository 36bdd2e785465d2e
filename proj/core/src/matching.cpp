#include "hamex/matching.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include <json.hpp>

#include "hamex/errors.hpp"
#include "hamex/rng.hpp"

namespace hamex {

std::string to_string(SolveMode m) {
  switch (m) {
    case SolveMode::pipeline: return "pipeline";
    case SolveMode::exact: return "exact";
    case SolveMode::auto_fallback: return "auto";
  }
  return "?";
}

std::string to_string(PMKind k) {
  switch (k) {
    case PMKind::perfect: return "perfect";
    case PMKind::none: return "none";
    case PMKind::unknown: return "unknown";
  }
  return "?";
}

namespace {

// Edmonds blossom algorithm on an adjacency-list graph. Augments from each
// unmatched vertex with a BFS alternating forest, contracting blossoms via
// the base[] relation.
class Blossom {
 public:
  explicit Blossom(const std::vector<std::vector<Vertex>>& adj)
      : adj_(adj), n_(static_cast<int>(adj.size())), match_(n_, -1),
        parent_(n_, -1), base_(n_), used_(n_, false), in_blossom_(n_, false) {}

  std::vector<int> run() {
    for (int v = 0; v < n_; ++v)
      if (match_[v] == -1) augment_from(v);
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    int cur = a;
    while (true) {
      cur = base_[cur];
      seen[cur] = 1;
      if (match_[cur] == -1) break;
      cur = parent_[match_[cur]];
    }
    cur = b;
    while (true) {
      cur = base_[cur];
      if (seen[cur]) return cur;
      cur = parent_[match_[cur]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  void augment_from(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int cur_base = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i)
            if (in_blossom_[base_[i]]) {
              base_[i] = cur_base;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) {
            // flip the alternating path ending at `to`
            int u = to;
            while (u != -1) {
              int pv = parent_[u], ppv = match_[pv];
              match_[u] = pv;
              match_[pv] = u;
              u = ppv;
            }
            return;
          }
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
  }

  const std::vector<std::vector<Vertex>>& adj_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

Matching matching_from_mates(const std::vector<int>& mates) {
  Matching m;
  std::vector<Vertex> exposed;
  for (int v = 0; v < static_cast<int>(mates.size()); ++v) {
    if (mates[v] == -1)
      exposed.push_back(v);
    else if (v < mates[v])
      m.edges.emplace_back(v, mates[v]);
  }
  m.exposed = VertexSet(std::move(exposed));
  return m;
}

std::vector<int> mates_of(const std::vector<std::vector<Vertex>>& adj) {
  return Blossom(adj).run();
}

std::vector<std::vector<Vertex>> adjacency_copy(const Graph& g) {
  std::vector<std::vector<Vertex>> adj(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(v);
  return adj;
}

std::vector<std::vector<Vertex>> adjacency_copy(const HostGraph& host) {
  std::vector<std::vector<Vertex>> adj(host.vertex_count());
  for (Vertex v = 0; v < host.vertex_count(); ++v) adj[v] = host.neighbors(v);
  return adj;
}

int matching_size(const std::vector<int>& mates) {
  int twice = 0;
  for (int v = 0; v < static_cast<int>(mates.size()); ++v)
    if (mates[v] != -1) ++twice;
  return twice / 2;
}

}  // namespace

Matching max_matching(const Graph& g) {
  return matching_from_mates(mates_of(adjacency_copy(g)));
}

Matching max_matching(const HostGraph& host) {
  return matching_from_mates(mates_of(adjacency_copy(host)));
}

std::optional<Edge> find_staple(const HostGraph& host, const Graph& g) {
  if (host.vertex_count() != g.vertex_count())
    throw input_error("find_staple: size mismatch");
  auto adj = adjacency_copy(host);
  std::vector<int> mates = mates_of(adj);
  const int nu0 = matching_size(mates);
  if (2 * nu0 >= host.vertex_count() - 1) return std::nullopt;  // nu maximal

  // exposed-exposed pairs augment immediately
  Matching m = matching_from_mates(mates);
  for (size_t i = 0; i < m.exposed.ids().size(); ++i)
    for (size_t j = i + 1; j < m.exposed.ids().size(); ++j) {
      Vertex u = m.exposed.ids()[i], v = m.exposed.ids()[j];
      if (g.has_edge(u, v) && !host.has_edge(u, v)) return make_edge(u, v);
    }

  for (Edge e : g.edges()) {
    if (host.has_edge(e.first, e.second)) continue;
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
    int nu = matching_size(mates_of(adj));
    adj[e.first].pop_back();
    adj[e.second].pop_back();
    if (nu > nu0) return e;
  }
  return std::nullopt;
}

bool verify_perfect_matching(const Graph& g, const Matching& m) {
  if (g.vertex_count() % 2 != 0) return false;
  if (static_cast<int>(m.edges.size()) * 2 != g.vertex_count()) return false;
  std::vector<char> hit(g.vertex_count(), 0);
  for (Edge e : m.edges) {
    if (!g.has_edge(e.first, e.second)) return false;
    if (hit[e.first] || hit[e.second]) return false;
    hit[e.first] = hit[e.second] = 1;
  }
  return true;
}

PMCertificate absorb_staples(const Skeleton& skeleton, const Graph& g,
                             int budget) {
  PMCertificate cert;
  const int n = g.vertex_count();
  if (n % 2 != 0) {
    cert.kind = PMKind::none;
    cert.reason = "parity: n is odd";
    return cert;
  }
  if (n == 0) {
    cert.kind = PMKind::perfect;
    return cert;
  }
  if (degree_profile(g).min == 0) {
    cert.kind = PMKind::none;
    cert.reason = "isolated vertex";
    return cert;
  }

  HostGraph host(skeleton.graph);
  int step = 0;
  while (true) {
    Matching m = max_matching(host);
    if (m.exposed.empty()) {
      if (!verify_perfect_matching(g, m))
        throw invariant_error("absorb_staples: invalid perfect matching");
      cert.kind = PMKind::perfect;
      cert.matching = std::move(m);
      return cert;
    }
    if (step >= budget) {
      cert.kind = PMKind::unknown;
      cert.reason = "budget exhausted after " + std::to_string(step) +
                    " staples";
      return cert;
    }
    auto staple = find_staple(host, g);
    if (!staple) {
      cert.kind = PMKind::unknown;
      cert.reason = "no staple of the view lies in E(G)";
      cert.matching = std::move(m);
      return cert;
    }
    host.add_edge(staple->first, staple->second);
    cert.trace.push_back({step++, *staple});
  }
}

PMCertificate solve_pm(const Graph& g, const RegimeParams& params,
                       SolveMode mode, std::uint64_t seed) {
  const int n = g.vertex_count();
  PMCertificate cert;
  cert.regime = params.regime;
  cert.seed = seed;

  if (n == 0) {
    cert.kind = PMKind::perfect;
    return cert;
  }
  if (degree_profile(g).min == 0) {
    cert.kind = PMKind::none;
    cert.reason = "isolated vertex";
    return cert;
  }
  if (n % 2 != 0) {
    cert.kind = PMKind::none;
    cert.reason = "parity: n is odd";
    return cert;
  }

  auto exact_route = [&](PMCertificate base) {
    Matching m = max_matching(g);
    if (m.exposed.empty()) {
      if (!verify_perfect_matching(g, m))
        throw invariant_error("solve_pm: invalid perfect matching");
      base.kind = PMKind::perfect;
    } else {
      base.kind = PMKind::none;
      base.reason = "maximum matching leaves " +
                    std::to_string(m.exposed.size()) +
                    " vertices exposed (exact blossom)";
    }
    base.matching = std::move(m);
    return base;
  };

  if (mode == SolveMode::exact) return exact_route(std::move(cert));
  if (params.regime == Regime::very_dense) {
    cert.fallbacks_used.push_back("very_dense: direct exact matching");
    return exact_route(std::move(cert));
  }

  const int redraws = 5;
  for (int attempt = 0; attempt < redraws; ++attempt) {
    Skeleton sk = build_skeleton(
        g, params, derive_seed(seed, "pm:skeleton", attempt));
    PMCertificate run = absorb_staples(sk, g, std::max(n, 4));
    if (run.kind != PMKind::unknown) {
      run.regime = params.regime;
      run.seed = seed;
      run.fallbacks_used = cert.fallbacks_used;
      if (attempt > 0)
        run.fallbacks_used.push_back("skeleton re-drawn " +
                                     std::to_string(attempt) + "x");
      return run;
    }
    cert.reason = run.reason;
  }
  cert.fallbacks_used.push_back("skeleton re-draws exhausted");
  if (mode == SolveMode::auto_fallback) {
    cert.fallbacks_used.push_back("exact blossom on G");
    return exact_route(std::move(cert));
  }
  cert.kind = PMKind::unknown;
  return cert;
}

std::string to_json(const PMCertificate& cert) {
  nlohmann::json j;
  j["kind"] = to_string(cert.kind);
  nlohmann::json edges = nlohmann::json::array();
  for (Edge e : cert.matching.edges)
    edges.push_back({e.first, e.second});
  j["matching"] = edges;
  nlohmann::json trace = nlohmann::json::array();
  for (const TraceStep& t : cert.trace)
    trace.push_back({{"step", t.step}, {"edge", {t.edge.first, t.edge.second}}});
  j["trace"] = trace;
  j["regime"] = to_string(cert.regime);
  j["seeds"] = {cert.seed};
  j["fallbacks_used"] = cert.fallbacks_used;
  if (!cert.reason.empty()) j["reason"] = cert.reason;
  return j.dump();
}

}  // namespace hamex
