#include "hamex/random_graphs.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>

#include "hamex/errors.hpp"
#include "hamex/rng.hpp"

namespace hamex {

namespace {

// Canonical pair with linear index k in the lexicographic enumeration
// (0,1),(0,2),...,(0,n-1),(1,2),... Row u starts at u*(n-1) - u*(u-1)/2.
Edge pair_from_index(int n, long long k) {
  auto row_start = [n](long long r) { return r * (n - 1) - r * (r - 1) / 2; };
  long long u = static_cast<long long>(
      n - 0.5 - std::sqrt((n - 0.5) * (n - 0.5) - 2.0 * k));
  if (u < 0) u = 0;
  while (u > 0 && row_start(u) > k) --u;
  while (row_start(u + 1) <= k) ++u;
  long long v = u + 1 + (k - row_start(u));
  return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<size_t>(pair_count(n)));
  for (Vertex u = 0; u < n - 1; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

}  // namespace

Graph sample_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) throw input_error("sample_gnp: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw input_error("sample_gnp: p outside [0,1]");
  const long long total = pair_count(n);
  std::vector<Edge> edges;
  if (p <= 0.0) return Graph::build(n, edges);
  if (p >= 1.0) return Graph::build(n, all_pairs(n));

  Rng rng(seed);
  if (p < 0.1) {
    // Geometric skipping: the gap to the next kept pair is geometric.
    const double log_q = std::log1p(-p);
    long long idx = -1;
    while (true) {
      double u = rng.unit();
      long long skip =
          static_cast<long long>(std::floor(std::log1p(-u) / log_q));
      idx += 1 + skip;
      if (idx >= total) break;
      edges.push_back(pair_from_index(n, idx));
    }
  } else {
    for (Vertex u = 0; u < n - 1; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.unit() < p) edges.emplace_back(u, v);
  }
  return Graph::build(n, edges);
}

EdgeOrdering sample_process(int n, std::uint64_t seed) {
  if (n < 2) throw input_error("sample_process: n must be >= 2");
  EdgeOrdering ord;
  ord.n = n;
  ord.order = all_pairs(n);
  Rng rng(seed);
  for (size_t i = ord.order.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(rng.below(i));
    std::swap(ord.order[i - 1], ord.order[j]);
  }
  return ord;
}

Graph prefix_graph(const EdgeOrdering& ord, long long i) {
  const long long total = static_cast<long long>(ord.order.size());
  if (i < 0 || i > total)
    throw input_error("prefix_graph: index " + std::to_string(i) +
                      " outside [0, " + std::to_string(total) + "]");
  return Graph::build(ord.n,
                      std::span<const Edge>(ord.order.data(),
                                            static_cast<size_t>(i)));
}

std::string to_string(GraphProperty p) {
  switch (p) {
    case GraphProperty::D1: return "D1";
    case GraphProperty::D2: return "D2";
    case GraphProperty::CONN: return "CONN";
    case GraphProperty::PM: return "PM";
    case GraphProperty::HAM: return "HAM";
  }
  return "?";
}

long long hitting_time(const EdgeOrdering& ord, GraphProperty prop,
                       const GraphPredicate& decide) {
  const long long total = static_cast<long long>(ord.order.size());
  std::vector<std::pair<long long, bool>> log;
  auto eval = [&](long long i) {
    bool v = decide(prefix_graph(ord, i));
    log.emplace_back(i, v);
    return v;
  };
  auto audit = [&]() {
    for (const auto& [i, vi] : log)
      for (const auto& [j, vj] : log)
        if (vi && !vj && j > i)
          throw invariant_error(
              "hitting_time(" + to_string(prop) +
              "): predicate non-monotone, true at " + std::to_string(i) +
              " but false at " + std::to_string(j));
  };

  if (eval(0)) {
    audit();
    return 0;
  }
  if (!eval(total)) {
    audit();
    return total + 1;  // sentinel: even K_n fails the property
  }
  long long lo = 0, hi = total;  // decide(lo)=false, decide(hi)=true
  while (hi - lo > 1) {
    long long mid = lo + (hi - lo) / 2;
    if (eval(mid))
      hi = mid;
    else
      lo = mid;
  }
  audit();
  return hi;
}

std::string write_ordering(const EdgeOrdering& ord) {
  std::ostringstream out;
  out << ord.n << '\n';
  for (Edge e : ord.order) out << e.first << ' ' << e.second << '\n';
  return out.str();
}

EdgeOrdering read_ordering(std::istream& in) {
  EdgeOrdering ord;
  if (!(in >> ord.n) || ord.n < 2)
    throw input_error("ordering: malformed n header");
  const long long total = pair_count(ord.n);
  ord.order.reserve(static_cast<size_t>(total));
  std::vector<char> seen(static_cast<size_t>(total), 0);
  for (long long i = 0; i < total; ++i) {
    long long u, v;
    if (!(in >> u >> v))
      throw input_error("ordering: expected " + std::to_string(total) +
                        " pairs, got " + std::to_string(i));
    if (u < 0 || v < 0 || u >= ord.n || v >= ord.n || u == v)
      throw input_error("ordering: invalid pair at position " +
                        std::to_string(i));
    Edge e = make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    long long idx = static_cast<long long>(e.first) * (ord.n - 1) -
                    static_cast<long long>(e.first) * (e.first - 1) / 2 +
                    (e.second - e.first - 1);
    if (seen[static_cast<size_t>(idx)])
      throw input_error("ordering: pair repeated at position " +
                        std::to_string(i));
    seen[static_cast<size_t>(idx)] = 1;
    ord.order.push_back(e);
  }
  return ord;
}

}  // namespace hamex
