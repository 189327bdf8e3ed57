#pragma once

#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

struct Context;

// Selects the M-class (a subclass of supobjects, i.e. epimorphisms) used
// by the counting hypotheses. Explicit sets must contain only epis.
struct MClassSpec {
  enum Kind { AllProperEpis, MaximalEpis, None, Explicit };
  Kind kind = MaximalEpis;
  std::vector<int> explicit_set;

  static MClassSpec parse(const std::string& text);  // throws homcat::ParseError
  std::string name() const;
  // Morphism indices selected, sorted. Throws homcat::ParseError when an
  // explicit set contains a non-epimorphism or an out-of-range index.
  std::vector<int> resolve(const Context& ctx) const;
};

// Selects the I-class (a subclass of monomorphisms containing all
// identities). Explicit sets are closed up with the identities; whether
// every selected arrow is mono is the business of the condition checker,
// which reports a violation rather than erroring.
struct IClassSpec {
  enum Kind { AllMonos, AllMorphisms, Explicit };
  Kind kind = AllMonos;
  std::vector<int> explicit_set;

  static IClassSpec parse(const std::string& text);
  std::string name() const;
  std::vector<char> membership(const Context& ctx) const;  // per-morphism flags
};

}  // namespace fincat
