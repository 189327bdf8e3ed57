#pragma once

#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

// Objects P_0..P_k; Hom(P_i,P_j) = {a,b} for i > j, empty for i < j, only
// the identity at i = j. Composition keeps the letter of the first-applied
// factor: compose(g,f) has f's letter.
FiniteCategory build_ab_category(int depth);

enum class PosetKind { Z, N, NegN };

// The ordered set as a category: a singleton hom i -> j exactly when
// i >= j. Z: objects -k..k, N: 0..k, NegN: -k..0.
FiniteCategory build_poset_category(PosetKind kind, int depth);

// Multiplication table of a small group; element 0 is the identity.
struct CatalogGroup {
  std::string name;
  std::vector<std::vector<int>> mult;
  int order() const { return static_cast<int>(mult.size()); }
};

// One representative per isomorphism class of groups of order <= max_order
// (max_order in [1,8]).
std::vector<CatalogGroup> group_catalog(int max_order);

// All group homomorphisms between catalog members, composed as functions.
FiniteCategory build_group_category(int max_order);
FiniteCategory build_group_category(const std::vector<CatalogGroup>& catalog);

// All homomorphisms G -> H as image vectors, ascending lexicographically.
std::vector<std::vector<int>> group_homomorphisms(const CatalogGroup& G, const CatalogGroup& H);
bool groups_isomorphic(const CatalogGroup& G, const CatalogGroup& H);
CatalogGroup direct_product(const CatalogGroup& G, const CatalogGroup& H);

struct CancellationReport {
  std::string a, b, c;
  std::string ab_object, ac_object;  // catalog representatives of A*B, A*C
  bool multiplicative = true;        // |Hom(Z,A*B)| = |Hom(Z,A)||Hom(Z,B)| for all Z, same for C
  std::vector<std::string> failures;
  bool columns_agree = true;         // hom columns of B and C over all Z
  std::string column_witness;        // first Z where the columns differ
  std::vector<std::string> lines;    // per-Z counts, rendered
};

// Product cancellation at desk scale: multiplicativity of hom counts into
// products, then the column comparison that combinatoriality turns into
// B = C. Throws homcat::CheckError when a product has no representative
// in the catalog, homcat::ParseError for unknown group names.
CancellationReport cancellation_demo(int max_order, const std::string& A, const std::string& B,
                                     const std::string& C);

}  // namespace fincat
