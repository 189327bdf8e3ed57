#include "graphhom/graph.hpp"

#include <bit>
#include <fstream>
#include <sstream>

#include "homcat/error.hpp"

namespace graphhom {

using homcat::ParseError;

Graph::Graph(int n_, bool directed_) : n(n_), directed(directed_), out(n_, 0), in(n_, 0) {
  if (n_ < 0 || n_ > 32) throw ParseError("vertex count must be in [0,32], got " + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
  out[u] |= uint32_t(1) << v;
  in[v] |= uint32_t(1) << u;
  if (!directed) {
    out[v] |= uint32_t(1) << u;
    in[u] |= uint32_t(1) << v;
  }
}

bool Graph::has_edge(int u, int v) const { return (out[u] >> v) & 1u; }

bool Graph::any_loop() const {
  for (int v = 0; v < n; ++v)
    if (has_loop(v)) return true;
  return false;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (has_edge(u, v) && (directed || u <= v)) es.emplace_back(u, v);
  return es;
}

int Graph::edge_count() const { return static_cast<int>(edges().size()); }

int Graph::degree(int u) const { return std::popcount(out[u] | in[u]); }

bool Graph::connected() const {
  if (n <= 1) return true;
  uint32_t seen = 1;
  uint32_t frontier = 1;
  while (frontier) {
    uint32_t next = 0;
    for (int v = 0; v < n; ++v)
      if ((frontier >> v) & 1u) next |= out[v] | in[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == full_mask();
}

uint32_t Graph::loop_mask() const {
  uint32_t m = 0;
  for (int v = 0; v < n; ++v)
    if (has_loop(v)) m |= uint32_t(1) << v;
  return m;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.n, g.directed);
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n + b.n, a.directed);
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.n + u, a.n + v);
  return g;
}

Graph parse_graph(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  Graph g;
  int expected_edges = 0, got_edges = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!header_seen) {
      if (tok != "p") throw ParseError("expected header `p graph <n> <m> <d|u>`", lineno);
      std::string kind, dir;
      int n, m;
      if (!(ls >> kind >> n >> m >> dir) || kind != "graph" || (dir != "d" && dir != "u"))
        throw ParseError("malformed header, want `p graph <n> <m> <d|u>`", lineno);
      if (n < 0 || n > 32) throw ParseError("vertex count out of range [0,32]", lineno);
      if (m < 0) throw ParseError("negative edge count", lineno);
      g = Graph(n, dir == "d");
      expected_edges = m;
      header_seen = true;
    } else if (tok == "e") {
      int u, v;
      if (!(ls >> u >> v)) throw ParseError("malformed edge line, want `e <u> <v>`", lineno);
      if (u < 0 || u >= g.n || v < 0 || v >= g.n) throw ParseError("edge endpoint out of range", lineno);
      if (g.has_edge(u, v)) throw ParseError("duplicate edge", lineno);
      g.add_edge(u, v);
      ++got_edges;
    } else {
      throw ParseError("unknown directive `" + tok + "`", lineno);
    }
    std::string extra;
    if (ls >> extra) throw ParseError("trailing tokens on line", lineno);
  }
  if (!header_seen) throw ParseError("missing header line", lineno);
  if (got_edges != expected_edges)
    throw ParseError("header declares " + std::to_string(expected_edges) + " edges, found " +
                     std::to_string(got_edges));
  return g;
}

std::string format_graph(const Graph& g) {
  auto es = g.edges();
  std::ostringstream os;
  os << "p graph " << g.n << ' ' << es.size() << ' ' << (g.directed ? 'd' : 'u') << '\n';
  for (auto [u, v] : es) os << "e " << u << ' ' << v << '\n';
  return os.str();
}

Graph load_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open graph file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str());
}

}  // namespace graphhom
