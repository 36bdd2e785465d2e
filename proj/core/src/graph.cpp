#include "hamex/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>

#include "hamex/errors.hpp"

namespace hamex {

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
    : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  auto dup = std::adjacent_find(ids_.begin(), ids_.end());
  if (dup != ids_.end())
    throw input_error("VertexSet: duplicate id " + std::to_string(*dup));
  if (!ids_.empty() && ids_.front() < 0)
    throw input_error("VertexSet: negative id " + std::to_string(ids_.front()));
}

VertexSet VertexSet::full(int n) {
  std::vector<Vertex> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  return VertexSet(std::move(ids));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

namespace {

std::string edge_str(Edge e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

void check_in_range(const Graph& g, const VertexSet& u, const char* what) {
  if (!u.empty() && u.ids().back() >= g.vertex_count())
    throw input_error(std::string(what) + ": vertex id " +
                      std::to_string(u.ids().back()) + " >= n=" +
                      std::to_string(g.vertex_count()));
}

}  // namespace

Graph Graph::build(int n, std::span<const Edge> edges) {
  if (n < 0) throw input_error("Graph: negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  g.edges_.reserve(edges.size());
  for (Edge raw : edges) {
    if (raw.first == raw.second)
      throw input_error("Graph: self-loop " + edge_str(raw));
    Edge e = make_edge(raw.first, raw.second);
    if (e.first < 0 || e.second >= n)
      throw input_error("Graph: endpoint out of range " + edge_str(raw));
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end())
    throw input_error("Graph: duplicate edge " + edge_str(*dup));
  for (Edge e : g.edges_) {
    g.adj_[e.first].push_back(e.second);
    g.adj_[e.second].push_back(e.first);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

Graph Graph::build(int n, const std::vector<Edge>& edges) {
  return build(n, std::span<const Edge>(edges));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

Graph Graph::without_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw input_error("without_vertex: id out of range");
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (Edge e : edges_) {
    if (e.first == v || e.second == v) continue;
    Vertex a = e.first > v ? e.first - 1 : e.first;
    Vertex b = e.second > v ? e.second - 1 : e.second;
    kept.emplace_back(a, b);
  }
  return build(n_ - 1, kept);
}

VertexSet external_neighborhood(const Graph& g, const VertexSet& u) {
  check_in_range(g, u, "external_neighborhood");
  std::vector<char> in_u(g.vertex_count(), 0), seen(g.vertex_count(), 0);
  for (Vertex x : u) in_u[x] = 1;
  std::vector<Vertex> out;
  for (Vertex x : u)
    for (Vertex y : g.neighbors(x))
      if (!in_u[y] && !seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
  return VertexSet(std::move(out));
}

long long edge_count_within(const Graph& g, const VertexSet& u) {
  check_in_range(g, u, "edge_count_within");
  long long count = 0;
  for (Vertex x : u)
    for (Vertex y : g.neighbors(x))
      if (y > x && u.contains(y)) ++count;
  return count;
}

long long edge_count_between(const Graph& g, const VertexSet& u,
                             const VertexSet& w) {
  check_in_range(g, u, "edge_count_between");
  check_in_range(g, w, "edge_count_between");
  for (Vertex x : u)
    if (w.contains(x))
      throw input_error("edge_count_between: sets overlap at vertex " +
                        std::to_string(x));
  long long count = 0;
  for (Vertex x : u)
    for (Vertex y : g.neighbors(x))
      if (w.contains(y)) ++count;
  return count;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) p.degrees[v] = g.degree(v);
  if (p.degrees.empty()) return p;
  auto [mn, mx] = std::minmax_element(p.degrees.begin(), p.degrees.end());
  p.min = *mn;
  p.max = *mx;
  return p;
}

std::optional<int> bfs_distance(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
    throw input_error("bfs_distance: vertex id out of range");
  if (u == v) return 0;
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x))
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        queue.push_back(y);
      }
  }
  return reached == g.vertex_count();
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (Edge e : g.edges()) out << e.first << ' ' << e.second << '\n';
  return out.str();
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  // skip comments before the header
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      throw input_error("edge list: CRLF line endings not permitted");
    if (line.empty() || line[0] != '#') break;
  }
  std::istringstream header(line);
  long long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0)
    throw input_error("edge list: malformed header, expected 'n m'");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!std::getline(in, line))
      throw input_error("edge list: expected " + std::to_string(m) +
                        " edges, got " + std::to_string(i));
    std::istringstream row(line);
    long long u, v;
    if (!(row >> u >> v))
      throw input_error("edge list: malformed edge line '" + line + "'");
    if (!(u < v))
      throw input_error("edge list: edge not canonical (u<v): '" + line + "'");
    Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!edges.empty() && !(edges.back() < e))
      throw input_error("edge list: edges not in ascending order at '" + line +
                        "'");
    edges.push_back(e);
  }
  return Graph::build(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot open " + path + " for writing");
  out << write_edge_list(g);
}

}  // namespace hamex
