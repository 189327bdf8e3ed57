#pragma once

#include <string>
#include <vector>

#include "graphhom/graph.hpp"

namespace graphhom {

// Partition of the vertex set [0,n), stored as a block assignment in
// restricted-growth form: block ids appear in first-occurrence order,
// contiguous from 0. Two equal partitions always compare equal.
struct VertexPartition {
  std::vector<int> block_of;
  int block_count = 0;

  int size() const { return static_cast<int>(block_of.size()); }
  bool is_discrete() const { return block_count == size(); }

  static VertexPartition discrete(int n);
  static VertexPartition single_merge(int n, int u, int v);
  // Normalizes an arbitrary block assignment to restricted-growth form.
  static VertexPartition from_assignment(const std::vector<int>& assignment);

  bool operator==(const VertexPartition& o) const { return block_of == o.block_of; }
};

// Finest partition coarser than both arguments (transitive closure of the
// union of the block relations). Associative, commutative, idempotent.
VertexPartition partition_join(const VertexPartition& p, const VertexPartition& q);

// Mobius function of the partition lattice between the discrete partition
// and p: product over blocks of (-1)^(|B|-1) * (|B|-1)!.
long long mobius_partition(const VertexPartition& p);

// All partitions of [0,n) in restricted-growth-string order.
std::vector<VertexPartition> all_partitions(int n);

// Restricted-growth string, e.g. "00102"; canonical key for dedup.
std::string partition_key(const VertexPartition& p);

// Graph on the blocks of p; an edge (B,C) is present iff some edge of X
// joins B to C. Merging adjacent vertices yields a loop, which is kept.
Graph quotient(const Graph& X, const VertexPartition& p);

// The C(n,2) partitions merging exactly one vertex pair; empty for n < 2.
std::vector<VertexPartition> maximal_quotients(const Graph& X);

}  // namespace graphhom
