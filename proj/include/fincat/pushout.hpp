#pragma once

#include <optional>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

// Wide pushout (colimit of a span of arrows out of a common object).
// `legs[i]` completes span[i] to the apex; `through` is the common
// composite legs[i] . span[i].
struct PushoutResult {
  int apex = -1;
  std::vector<int> legs;
  int through = -1;
};

// Exhaustive search: apexes in object-id order, leg tuples in lexicographic
// order, first candidate that passes full universal-property verification
// wins. All pushouts are isomorphic, so the choice is deterministic and
// harmless. The empty span yields X itself with its identity.
std::optional<PushoutResult> wide_pushout(const FiniteCategory& C, int X, const std::vector<int>& span);

// Re-verifies commutation and the universal property of a claimed pushout
// against every commuting cocone in the category.
bool verify_pushout(const FiniteCategory& C, int X, const std::vector<int>& span, const PushoutResult& res);

}  // namespace fincat
