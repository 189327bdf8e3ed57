#pragma once

#include <vector>

#include "fincat/category.hpp"
#include "fincat/predicates.hpp"
#include "fincat/supobject.hpp"

namespace fincat {

// Precomputed per-category scans shared by the theorem checkers: predicate
// flags and the full sub/supobject lattices of every object. Built once,
// then read-only, so concurrent use is safe.
struct Context {
  const FiniteCategory* C = nullptr;
  std::vector<char> mono, epi, iso, extremal;
  std::vector<SupobjectLattice> sup;  // per object
  std::vector<SupobjectLattice> sub;  // per object
  std::vector<int> obj_rep;           // object -> least isomorphic object id

  const FiniteCategory& cat() const { return *C; }

  static Context build(const FiniteCategory& C);
};

}  // namespace fincat
