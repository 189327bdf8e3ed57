#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>

#include "graphhom/graph.hpp"

namespace graphhom {

// Exact homomorphism count |Hom(X,A)|: maps V(X) -> V(A) preserving every
// edge (loops must land on loops). Backtracking over a degeneracy-style
// vertex order with adjacency-consistency pruning. `hom_count` parallelizes
// the first branching level with OpenMP; results are bit-identical to the
// serial kernel for any thread count.
uint64_t hom_count(const Graph& X, const Graph& A);
uint64_t hom_count_serial(const Graph& X, const Graph& A);

// Injective homomorphisms, counted directly with a used-vertex mask.
uint64_t inj_count_direct(const Graph& X, const Graph& A);
uint64_t inj_count_direct_serial(const Graph& X, const Graph& A);

// Vertex-surjective homomorphisms.
uint64_t surj_count(const Graph& X, const Graph& A);

// Automorphisms of A (injective endomorphisms of a finite graph are
// automorphisms).
uint64_t aut_count(const Graph& A);

// Vertex-surjective homomorphisms X -> T whose edge image is exactly E(T),
// i.e. T is the quotient of X by the map's fibers.
uint64_t extremal_epi_count(const Graph& X, const Graph& T);

// Shared hom-count cache keyed by canonical forms of source and target.
// Safe to use from concurrent counts.
class HomMemo {
 public:
  uint64_t hom(const Graph& X, const Graph& A);
  size_t size() const { return table_.size(); }

 private:
  std::unordered_map<std::string, uint64_t> table_;
  std::mutex mu_;
};

}  // namespace graphhom
