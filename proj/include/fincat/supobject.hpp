#pragma once

#include <optional>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/predicates.hpp"

namespace fincat {

// Isomorphism class of supobjects (epis out of a fixed object) or, dually,
// subobjects (monos into it). Two arrows are in the same class iff each
// factors through the other via an isomorphism. `dominates` lists the class
// ids weakly below this one: for supobjects q >= q' iff q' = h . q for some
// h, for subobjects m >= m' iff m' = m . h.
struct SupobjectClass {
  int representative = -1;     // least morphism index in the class
  std::vector<int> members;
  std::vector<int> dominates;  // includes the class itself
};

struct SupobjectLattice {
  int object = -1;
  bool dual = false;  // true for subobject lattices
  std::vector<SupobjectClass> classes;  // ordered by representative
  int identity_class = -1;              // the class of isomorphisms; the maximum
  std::vector<std::vector<char>> geq;   // geq[i][j]: class i >= class j

  int class_count() const { return static_cast<int>(classes.size()); }
  int proper_class_count() const { return class_count() - 1; }
  bool is_proper(int c) const { return c != identity_class; }
  int class_of(int morphism) const;  // -1 if the arrow is not in the lattice
};

SupobjectLattice supobjects(const FiniteCategory& C, int X);
SupobjectLattice subobjects(const FiniteCategory& C, int X);

// Maximal elements of the proper part of the preorder.
std::vector<int> maximal_classes(const SupobjectLattice& L);

// Least subobject class of cod(f) through which f factors, if a least
// exists. The lattice the class id refers to is returned alongside.
struct FactorResult {
  SupobjectLattice lattice;
  std::optional<int> cls;
};
FactorResult image(const FiniteCategory& C, int f);
FactorResult coimage(const FiniteCategory& C, int f);

// Factoring classes and the least among them, over a precomputed lattice.
std::optional<int> least_factoring_class(const FiniteCategory& C, const SupobjectLattice& L, int f);

struct WellFoundedReport {
  bool well_founded = true;
  int longest_chain_length = 0;        // number of strict descents
  std::vector<int> chain_classes;      // class ids, strictly decreasing
  std::vector<int> chain_representatives;
};

// On a finite preorder well-foundedness reduces to antisymmetry of the
// class order, which mutual factorization of epis guarantees; the point of
// the report is the longest strictly decreasing chain, which exposes how
// truncations diverge with depth.
WellFoundedReport well_founded_supobjects(const FiniteCategory& C, int X);
WellFoundedReport well_founded_report(const SupobjectLattice& L);

}  // namespace fincat
