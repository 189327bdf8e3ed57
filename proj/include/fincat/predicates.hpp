#pragma once

#include <vector>

#include "fincat/category.hpp"

namespace fincat {

// All predicates are decided by exhaustive search over the category.
// f is mono iff postcomposition with f is injective on every Hom(B, dom f);
// epi is dual; iso searches for a two-sided inverse.
bool is_mono(const FiniteCategory& C, int f);
bool is_epi(const FiniteCategory& C, int f);
bool is_iso(const FiniteCategory& C, int f);

// Per-morphism flags in one pass; the bulk form is what the checkers use.
std::vector<char> mono_flags(const FiniteCategory& C);
std::vector<char> epi_flags(const FiniteCategory& C);
std::vector<char> iso_flags(const FiniteCategory& C);

// True iff every factorization e = m . g with m mono has m iso.
// Throws homcat::CheckError when e is not an epimorphism.
bool is_extremal_epi(const FiniteCategory& C, int e);

// extremal_flags[f] is meaningful only where epi[f] holds.
std::vector<char> extremal_flags(const FiniteCategory& C, const std::vector<char>& mono,
                                 const std::vector<char>& epi, const std::vector<char>& iso);

// iso_class_rep[x] = least object id isomorphic to x.
std::vector<int> iso_class_reps(const FiniteCategory& C);
// Blocks of the partition into isomorphism classes, each block sorted,
// blocks ordered by representative.
std::vector<std::vector<int>> iso_classes(const FiniteCategory& C);

}  // namespace fincat
