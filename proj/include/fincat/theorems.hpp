#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fincat/class_spec.hpp"
#include "fincat/context.hpp"
#include "fincat/pushout.hpp"

namespace fincat {

// Concrete counterexample data, replayable through the core operations.
struct Witness {
  std::vector<int> objects;
  std::vector<int> morphisms;
  std::string note;
};

struct ConditionVerdict {
  std::string name;
  bool holds = true;
  std::vector<Witness> witnesses;
  // per-object data for finiteness/chain conditions, aligned with object
  // ids; truncation families read divergence trends off these
  std::vector<long long> per_object_counts;
};

struct ConditionReport {
  std::string theorem;  // main | weak | corollary | pultr | variant | dawar-pushouts
  std::vector<ConditionVerdict> conditions;
  std::vector<std::string> notes;
  bool overall = true;
  std::string to_text(const FiniteCategory& C) const;
};

// Hypothesis lists of the counting theorems, decided exhaustively.
ConditionReport check_main_conditions(const Context& ctx, const MClassSpec& M, const IClassSpec& I);
ConditionReport check_weak_conditions(const Context& ctx);
ConditionReport check_corollary_conditions(const Context& ctx);
ConditionReport check_pultr_conditions(const Context& ctx);
ConditionReport check_variant_condition(const Context& ctx);
ConditionReport check_dawar_pushouts(const Context& ctx);

// |Mono_I(Z,A)| via the alternating sum over nonempty subsets of the
// M-supobject representatives of Z, each term a hom count out of the
// subset's wide pushout. Throws homcat::CheckError when the hypotheses
// fail (pass recheck=false only with a prior passing check).
long long mono_count_inclusion_exclusion(const Context& ctx, int Z, int A, const MClassSpec& M,
                                         const IClassSpec& I, bool recheck = true);
// Direct exhaustive count of I-monos Z -> A; the oracle the sum must match.
long long mono_count_direct(const Context& ctx, int Z, int A, const IClassSpec& I);

struct HomMatrix {
  std::vector<int> reps;  // iso-class representatives, ascending
  std::vector<std::vector<long long>> counts;  // counts[i][j] = |Hom(rep_i, rep_j)|
};
HomMatrix hom_matrix(const Context& ctx);

struct CombinatorialReport {
  bool combinatorial = true;
  int witness_a = -1, witness_b = -1;  // distinct reps with equal hom columns
  HomMatrix matrix;
  std::vector<std::string> sanity;  // iso => equal columns violations (bugs)
};
CombinatorialReport is_combinatorial(const Context& ctx);

struct LovaszReport {
  bool ok = true;
  std::vector<Witness> violations;
};
// Mutual monos (dually epis) between two objects must all be isos.
LovaszReport verify_lovasz_lemma(const Context& ctx);

struct PushoutHomReport {
  bool ok = false;
  PushoutResult pushout;
  std::vector<int> lhs, rhs;  // subsets of Hom(X,Y), sorted morphism ids
};
// Image of the pushout under Hom(-,Y): precompositions with the pushout
// composite equal the intersection of the precomposition images of the legs.
PushoutHomReport verify_pushout_hom_lemma(const Context& ctx, int q1, int q2, int Y);

struct PultrCatTerm {
  int rep = -1;  // object id of the class representative T
  long long extr = 0, mono = 0, isom = 0;
  long long block = 0;  // |Hom(A,B)_T|
  long long contribution = 0;
};
struct PultrCatReport {
  int A = -1, B = -1;
  long long hom_total = 0, sum = 0;
  bool fibers_ok = true;     // each fiber has |Isom(T,T)| elements, acted on simply transitively
  bool partition_ok = true;  // blocks cover Hom(A,B) disjointly
  bool exact = true;         // every term's division exact
  std::vector<PultrCatTerm> terms;
  bool ok() const { return hom_total == sum && fibers_ok && partition_ok && exact; }
};
// hom(A,B) decomposed over object iso classes T as extr * mono / isom,
// with the fiber claim verified composite by composite.
PultrCatReport pultr_decomposition_identity(const Context& ctx, int A, int B, bool recheck = true);

}  // namespace fincat
