#pragma once

// Brute-force counting oracles for tests: enumerate every vertex map and
// filter. Deliberately independent of the backtracking kernels and of the
// canonical-form machinery.

#include <cstdint>
#include <vector>

#include "graphhom/graph.hpp"

namespace oracle {

template <typename Pred>
uint64_t count_maps(const graphhom::Graph& X, const graphhom::Graph& A, Pred&& keep) {
  uint64_t total = 1;
  for (int v = 0; v < X.n; ++v) total *= static_cast<uint64_t>(A.n);
  if (X.n > 0 && A.n == 0) return 0;
  uint64_t hits = 0;
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t c = code;
    std::vector<int> img(X.n);
    for (int v = 0; v < X.n; ++v) {
      img[v] = static_cast<int>(c % A.n);
      c /= A.n;
    }
    bool hom = true;
    for (int u = 0; u < X.n && hom; ++u)
      for (int v = 0; v < X.n; ++v)
        if (X.has_edge(u, v) && !A.has_edge(img[u], img[v])) { hom = false; break; }
    if (hom && keep(img)) ++hits;
  }
  return hits;
}

inline uint64_t hom(const graphhom::Graph& X, const graphhom::Graph& A) {
  return count_maps(X, A, [](const std::vector<int>&) { return true; });
}

inline uint64_t inj(const graphhom::Graph& X, const graphhom::Graph& A) {
  return count_maps(X, A, [](const std::vector<int>& img) {
    for (size_t i = 0; i < img.size(); ++i)
      for (size_t j = i + 1; j < img.size(); ++j)
        if (img[i] == img[j]) return false;
    return true;
  });
}

inline uint64_t surj(const graphhom::Graph& X, const graphhom::Graph& A) {
  return count_maps(X, A, [&](const std::vector<int>& img) {
    std::vector<char> hit(A.n, 0);
    for (int w : img) hit[w] = 1;
    for (char h : hit)
      if (!h) return false;
    return true;
  });
}

// homs X -> A constant on the blocks of the given vertex partition
inline uint64_t hom_constant_on(const graphhom::Graph& X, const graphhom::Graph& A,
                                const std::vector<int>& block_of) {
  return count_maps(X, A, [&](const std::vector<int>& img) {
    for (size_t i = 0; i < img.size(); ++i)
      for (size_t j = i + 1; j < img.size(); ++j)
        if (block_of[i] == block_of[j] && img[i] != img[j]) return false;
    return true;
  });
}

}  // namespace oracle
