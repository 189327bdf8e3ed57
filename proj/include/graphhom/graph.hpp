#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace graphhom {

// Finite graph on at most 32 vertices, directed or undirected, loops
// permitted, no multi-edges. Adjacency is kept as per-vertex bitmasks;
// undirected graphs store both orientations so one counting kernel
// serves both kinds.
struct Graph {
  int n = 0;
  bool directed = false;
  std::vector<uint32_t> out;  // out[u] has bit v iff edge (u,v)
  std::vector<uint32_t> in;   // in[v] has bit u iff edge (u,v)

  Graph() = default;
  Graph(int n_, bool directed_ = false);

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  bool has_loop(int u) const { return has_edge(u, u); }
  bool any_loop() const;

  // Edge list in canonical order: (u,v) with u<=v for undirected graphs,
  // all ordered pairs for directed ones. Loops appear once.
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  // Loops count once; for directed graphs this is in-degree + out-degree.
  int degree(int u) const;

  // Weak connectivity (edge directions ignored).
  bool connected() const;

  uint32_t full_mask() const { return n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1; }
  uint32_t loop_mask() const;

  bool operator==(const Graph& o) const {
    return n == o.n && directed == o.directed && out == o.out;
  }
};

Graph relabel(const Graph& g, const std::vector<int>& perm);  // perm[old] = new
Graph disjoint_union(const Graph& a, const Graph& b);

// Text format:
//   p graph <n> <m> <d|u>
//   e <u> <v>           (m lines, 0-based vertices, loops as `e v v`)
// `#` starts a comment. Throws homcat::ParseError with a line number.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);
Graph load_graph(const std::string& path);

}  // namespace graphhom
