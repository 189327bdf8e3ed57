#include "graphhom/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace graphhom {

VertexPartition VertexPartition::discrete(int n) {
  VertexPartition p;
  p.block_of.resize(n);
  std::iota(p.block_of.begin(), p.block_of.end(), 0);
  p.block_count = n;
  return p;
}

VertexPartition VertexPartition::single_merge(int n, int u, int v) {
  std::vector<int> a(n);
  std::iota(a.begin(), a.end(), 0);
  a[v > u ? v : u] = a[v > u ? u : v];
  return from_assignment(a);
}

VertexPartition VertexPartition::from_assignment(const std::vector<int>& assignment) {
  VertexPartition p;
  p.block_of.assign(assignment.size(), -1);
  std::vector<int> remap;
  for (size_t i = 0; i < assignment.size(); ++i) {
    int b = assignment[i];
    int id = -1;
    for (size_t j = 0; j < remap.size(); ++j)
      if (remap[j] == b) { id = static_cast<int>(j); break; }
    if (id < 0) {
      id = static_cast<int>(remap.size());
      remap.push_back(b);
    }
    p.block_of[i] = id;
  }
  p.block_count = static_cast<int>(remap.size());
  return p;
}

VertexPartition partition_join(const VertexPartition& p, const VertexPartition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("partition_join: ground sets differ");
  int n = p.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a); b = find(b);
    if (a != b) parent[b > a ? b : a] = b > a ? a : b;
  };
  std::vector<int> first_p(p.block_count, -1), first_q(q.block_count, -1);
  for (int v = 0; v < n; ++v) {
    int bp = p.block_of[v], bq = q.block_of[v];
    if (first_p[bp] < 0) first_p[bp] = v; else unite(first_p[bp], v);
    if (first_q[bq] < 0) first_q[bq] = v; else unite(first_q[bq], v);
  }
  std::vector<int> a(n);
  for (int v = 0; v < n; ++v) a[v] = find(v);
  return VertexPartition::from_assignment(a);
}

long long mobius_partition(const VertexPartition& p) {
  std::vector<int> size(p.block_count, 0);
  for (int b : p.block_of) ++size[b];
  long long mu = 1;
  for (int s : size) {
    for (int i = 1; i < s; ++i) mu *= -i;  // (-1)^(s-1) * (s-1)!
  }
  return mu;
}

std::vector<VertexPartition> all_partitions(int n) {
  std::vector<VertexPartition> out;
  if (n == 0) {
    out.push_back(VertexPartition::discrete(0));
    return out;
  }
  std::vector<int> rgs(n, 0);
  while (true) {
    out.push_back(VertexPartition::from_assignment(rgs));
    // next restricted growth string: rightmost position that can grow
    int i = n - 1;
    for (; i > 0; --i) {
      int maxpfx = 0;
      for (int j = 0; j < i; ++j) maxpfx = std::max(maxpfx, rgs[j]);
      if (rgs[i] <= maxpfx) break;
    }
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) rgs[j] = 0;
  }
  return out;
}

std::string partition_key(const VertexPartition& p) {
  std::string s;
  s.reserve(p.size());
  for (int b : p.block_of) {
    // block ids can exceed 9 for n > 10; keep keys unambiguous
    if (b < 10) s += static_cast<char>('0' + b);
    else { s += '('; s += std::to_string(b); s += ')'; }
  }
  return s;
}

Graph quotient(const Graph& X, const VertexPartition& p) {
  if (p.size() != X.n) throw std::invalid_argument("quotient: partition does not cover the vertex set");
  Graph q(p.block_count, X.directed);
  for (auto [u, v] : X.edges()) {
    int bu = p.block_of[u], bv = p.block_of[v];
    if (!q.has_edge(bu, bv)) q.add_edge(bu, bv);
  }
  return q;
}

std::vector<VertexPartition> maximal_quotients(const Graph& X) {
  std::vector<VertexPartition> out;
  for (int u = 0; u < X.n; ++u)
    for (int v = u + 1; v < X.n; ++v) out.push_back(VertexPartition::single_merge(X.n, u, v));
  return out;
}

}  // namespace graphhom
