#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fincat {

struct Morphism {
  int dom = -1;
  int cod = -1;
  std::string label;

  bool operator==(const Morphism& o) const { return dom == o.dom && cod == o.cod && label == o.label; }
};

// Explicit finite category: object list, morphism list, identity
// designations and a dense composition table. compose(g,f) is defined
// exactly when cod(f) = dom(g); undefined entries hold -1. Instances are
// immutable once finalized, so every operation on them is pure and safe
// to run concurrently on shared instances.
class FiniteCategory {
 public:
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<int> identity;  // object -> morphism index, -1 until designated

  int object_count() const { return static_cast<int>(objects.size()); }
  int morphism_count() const { return static_cast<int>(morphisms.size()); }

  int add_object(const std::string& name);
  int add_morphism(const std::string& label, int dom, int cod);
  void set_identity(int obj, int mor) { identity[obj] = mor; }
  void set_compose(int g, int f, int h) { table_[size_t(g) * morphisms.size() + f] = h; }

  // Allocates the composition table (all entries -1) and builds the
  // hom-set index. Call once all objects and morphisms are in place;
  // composition entries are filled afterwards with set_compose.
  void finalize();

  bool composable(int g, int f) const { return morphisms[f].cod == morphisms[g].dom; }
  int compose(int g, int f) const { return table_[size_t(g) * morphisms.size() + f]; }

  const std::vector<int>& hom(int A, int B) const { return hom_sets_[size_t(A) * objects.size() + B]; }
  int hom_count(int A, int B) const { return static_cast<int>(hom(A, B).size()); }
  const std::vector<int>& out_of(int A) const { return out_of_[A]; }
  const std::vector<int>& into(int B) const { return into_[B]; }

  int object_id(const std::string& name) const;    // -1 when absent
  int morphism_id(const std::string& label) const; // -1 when absent

  bool operator==(const FiniteCategory& o) const {
    return objects == o.objects && morphisms == o.morphisms && identity == o.identity && table_ == o.table_;
  }

 private:
  std::vector<int32_t> table_;
  std::vector<std::vector<int>> hom_sets_;  // dense (A,B) -> sorted morphism ids
  std::vector<std::vector<int>> out_of_, into_;
};

struct Violation {
  enum Kind { IdentityMissing, CompositionDomain, IdentityLaw, Associativity };
  Kind kind;
  // offending indices; meaning depends on kind:
  //   IdentityMissing:   a = object
  //   CompositionDomain: a = g, b = f (entry (g,f) wrong/missing/ill-typed)
  //   IdentityLaw:       a = f
  //   Associativity:     a = h, b = g, c = f
  int a = -1, b = -1, c = -1;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_text(const FiniteCategory& C) const;
};

// Checks every axiom exhaustively: totality and typing of the composition
// table, identity laws, associativity over all composable triples.
// Violations are data, not errors.
ValidationReport validate(const FiniteCategory& C);

// Same objects, arrows reversed, compose(g,f) := C.compose(f,g).
FiniteCategory opposite(const FiniteCategory& C);

// Full subcategory on the given objects (ids ascending).
FiniteCategory full_subcategory(const FiniteCategory& C, const std::vector<int>& keep);

}  // namespace fincat
