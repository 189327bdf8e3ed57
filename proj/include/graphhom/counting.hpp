#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graphhom/canonical.hpp"
#include "graphhom/graph.hpp"
#include "graphhom/homcount.hpp"
#include "graphhom/partition.hpp"

namespace graphhom {

// |Inj(X,A)| recovered from hom counts of quotient pushouts:
//   hom(X,A) + sum over nonempty subsets S of the single-pair merges,
//   sign (-1)^|S|, of hom(X/join(S), A).
// Subset joins are deduplicated by canonical partition form before any
// hom count runs. Agrees exactly with inj_count_direct.
uint64_t inj_via_inclusion_exclusion(const Graph& X, const Graph& A, HomMemo* memo = nullptr);

// Independent route: Mobius inversion over the full partition lattice,
//   sum over all partitions p of mu(0,p) * hom(X/p, A).
uint64_t inj_via_mobius(const Graph& X, const Graph& A, HomMemo* memo = nullptr);

struct PultrTerm {
  CanonicalKey key;   // canonical form of the quotient class T
  uint64_t extr = 0;  // vertex maps A -> T realizing T as a quotient
  uint64_t mono = 0;  // injective homomorphisms T -> B
  uint64_t aut = 0;   // automorphisms of T
  uint64_t contribution = 0;  // extr * mono / aut, division always exact
};

struct PultrGraphReport {
  uint64_t hom_total = 0;
  uint64_t sum = 0;
  std::vector<PultrTerm> terms;  // sorted by key
  bool ok() const { return hom_total == sum; }
};

// hom(A,B) decomposed over isomorphism classes T of quotients of A as
// extr(A,T) * inj(T,B) / aut(T). Throws std::logic_error if a term's
// division is not exact (that would be a counting bug).
PultrGraphReport pultr_identity_graphs(const Graph& A, const Graph& B);

struct HomProfile {
  int max_size = 0;
  // (canonical key of test graph X, |Hom(X,A)|), in enumeration order
  std::vector<std::pair<CanonicalKey, uint64_t>> entries;
};

// Hom counts from one representative per isomorphism class of loopless
// graphs on <= max_size vertices.
HomProfile hom_profile(const Graph& A, int max_size, HomMemo* memo = nullptr);

struct DistinguishResult {
  bool distinguished = false;
  Graph witness;           // valid iff distinguished
  CanonicalKey witness_key;
  uint64_t count_a = 0, count_b = 0;
};

// First test graph (in enumeration order) with differing hom counts into
// A and B, or certified-equal at this size bound.
DistinguishResult distinguish(const Graph& A, const Graph& B, int max_size, HomMemo* memo = nullptr);

}  // namespace graphhom
