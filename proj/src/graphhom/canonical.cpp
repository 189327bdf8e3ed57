#include "graphhom/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace graphhom {

namespace {

// Placing vertex v at position k determines the adjacency bits of row k up
// to column k plus column k up to row k-1: 2k+1 new bits. Packing them into
// one word lets the search compare whole prefixes cheaply.
struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<int> pos_of;   // original vertex -> position, -1 if unplaced
  std::vector<int> vert_at;  // position -> original vertex
  std::vector<uint64_t> cur, best;

  explicit CanonSearch(const Graph& g_)
      : g(g_), n(g_.n), pos_of(g_.n, -1), vert_at(g_.n, -1), cur(g_.n), best(g_.n) {}

  uint64_t block_bits(int k, int v) const {
    uint64_t b = 0;
    for (int p = 0; p < k; ++p) {
      b = (b << 1) | (g.has_edge(v, vert_at[p]) ? 1 : 0);
    }
    b = (b << 1) | (g.has_edge(v, v) ? 1 : 0);
    for (int p = 0; p < k; ++p) {
      b = (b << 1) | (g.has_edge(vert_at[p], v) ? 1 : 0);
    }
    return b;
  }

  // rel: 0 = prefix equal to best so far, -1 = strictly smaller.
  void rec(int k, int rel) {
    if (k == n) {
      if (rel < 0) best = cur;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (pos_of[v] >= 0) continue;
      uint64_t b = block_bits(k, v);
      int nrel = rel;
      if (rel == 0) {
        if (b > best[k]) continue;
        if (b < best[k]) nrel = -1;
      }
      cur[k] = b;
      pos_of[v] = k;
      vert_at[k] = v;
      rec(k + 1, nrel);
      pos_of[v] = -1;
      vert_at[k] = -1;
    }
  }

  void run() {
    // seed best with the identity ordering
    for (int v = 0; v < n; ++v) {
      vert_at[v] = v;
      best[v] = block_bits(v, v);
    }
    std::fill(vert_at.begin(), vert_at.end(), -1);
    rec(0, 0);
  }
};

}  // namespace

CanonicalKey canonical_form(const Graph& g) {
  char head[8];
  std::snprintf(head, sizeof head, "%c%02d:", g.directed ? 'd' : 'u', g.n);
  CanonicalKey key(head);
  if (g.n == 0) return key;

  CanonSearch s(g);
  s.run();

  // unpack the winning blocks back into a row-major matrix
  std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, '0'));
  for (int k = 0; k < g.n; ++k) {
    uint64_t b = s.best[k];
    for (int p = k - 1; p >= 0; --p) {
      adj[p][k] = (b & 1) ? '1' : '0';
      b >>= 1;
    }
    adj[k][k] = (b & 1) ? '1' : '0';
    b >>= 1;
    for (int p = k - 1; p >= 0; --p) {
      adj[k][p] = (b & 1) ? '1' : '0';
      b >>= 1;
    }
  }
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) key += adj[i][j];
  return key;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.directed != b.directed || a.edge_count() != b.edge_count()) return false;
  auto degs = [](const Graph& g) {
    std::vector<int> d(g.n);
    for (int v = 0; v < g.n; ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(a) != degs(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> all_graphs_up_to_iso(int max_n, bool directed) {
  if (max_n < 1) throw std::invalid_argument("all_graphs_up_to_iso: max_n must be >= 1");
  std::vector<Graph> reps;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && (directed || u < v)) slots.emplace_back(u, v);
    if (slots.size() > 20) throw std::invalid_argument("all_graphs_up_to_iso: too many graphs at this size");
    std::map<CanonicalKey, Graph> classes;
    for (uint32_t mask = 0; mask < (uint32_t(1) << slots.size()); ++mask) {
      Graph g(n, directed);
      for (size_t i = 0; i < slots.size(); ++i)
        if ((mask >> i) & 1u) g.add_edge(slots[i].first, slots[i].second);
      classes.emplace(canonical_form(g), g);
    }
    for (auto& [key, g] : classes) reps.push_back(g);
  }
  return reps;
}

}  // namespace graphhom
