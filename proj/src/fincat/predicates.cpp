#include "fincat/predicates.hpp"

#include <algorithm>

#include "homcat/error.hpp"

namespace fincat {

namespace {

// injectivity of (f . -) on Hom(B, dom f) for every B, via a seen-stamp
bool mono_one(const FiniteCategory& C, int f, std::vector<int>& stamp, int& epoch) {
  for (int B = 0; B < C.object_count(); ++B) {
    ++epoch;
    for (int g : C.hom(B, C.morphisms[f].dom)) {
      int c = C.compose(f, g);
      if (stamp[c] == epoch) return false;
      stamp[c] = epoch;
    }
  }
  return true;
}

bool epi_one(const FiniteCategory& C, int f, std::vector<int>& stamp, int& epoch) {
  for (int B = 0; B < C.object_count(); ++B) {
    ++epoch;
    for (int g : C.hom(C.morphisms[f].cod, B)) {
      int c = C.compose(g, f);
      if (stamp[c] == epoch) return false;
      stamp[c] = epoch;
    }
  }
  return true;
}

bool iso_one(const FiniteCategory& C, int f) {
  const auto& m = C.morphisms[f];
  for (int g : C.hom(m.cod, m.dom))
    if (C.compose(g, f) == C.identity[m.dom] && C.compose(f, g) == C.identity[m.cod]) return true;
  return false;
}

}  // namespace

bool is_mono(const FiniteCategory& C, int f) {
  std::vector<int> stamp(C.morphism_count(), 0);
  int epoch = 0;
  return mono_one(C, f, stamp, epoch);
}

bool is_epi(const FiniteCategory& C, int f) {
  std::vector<int> stamp(C.morphism_count(), 0);
  int epoch = 0;
  return epi_one(C, f, stamp, epoch);
}

bool is_iso(const FiniteCategory& C, int f) { return iso_one(C, f); }

std::vector<char> mono_flags(const FiniteCategory& C) {
  std::vector<char> flags(C.morphism_count(), 0);
#pragma omp parallel
  {
    std::vector<int> stamp(C.morphism_count(), 0);
    int epoch = 0;
#pragma omp for schedule(dynamic, 16)
    for (int f = 0; f < C.morphism_count(); ++f) flags[f] = mono_one(C, f, stamp, epoch);
  }
  return flags;
}

std::vector<char> epi_flags(const FiniteCategory& C) {
  std::vector<char> flags(C.morphism_count(), 0);
#pragma omp parallel
  {
    std::vector<int> stamp(C.morphism_count(), 0);
    int epoch = 0;
#pragma omp for schedule(dynamic, 16)
    for (int f = 0; f < C.morphism_count(); ++f) flags[f] = epi_one(C, f, stamp, epoch);
  }
  return flags;
}

std::vector<char> iso_flags(const FiniteCategory& C) {
  std::vector<char> flags(C.morphism_count(), 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (int f = 0; f < C.morphism_count(); ++f) flags[f] = iso_one(C, f);
  return flags;
}

bool is_extremal_epi(const FiniteCategory& C, int e) {
  if (!is_epi(C, e)) throw homcat::CheckError("is_extremal_epi: morphism " + C.morphisms[e].label + " is not an epimorphism");
  auto mono = mono_flags(C);
  auto iso = iso_flags(C);
  const auto& me = C.morphisms[e];
  for (int S = 0; S < C.object_count(); ++S) {
    for (int m : C.hom(S, me.cod)) {
      if (!mono[m] || iso[m]) continue;
      for (int g : C.hom(me.dom, S))
        if (C.compose(m, g) == e) return false;
    }
  }
  return true;
}

std::vector<char> extremal_flags(const FiniteCategory& C, const std::vector<char>& mono,
                                 const std::vector<char>& epi, const std::vector<char>& iso) {
  std::vector<char> flags(C.morphism_count(), 0);
#pragma omp parallel for schedule(dynamic, 4)
  for (int e = 0; e < C.morphism_count(); ++e) {
    if (!epi[e]) continue;
    const auto& me = C.morphisms[e];
    bool extremal = true;
    for (int S = 0; S < C.object_count() && extremal; ++S) {
      for (int m : C.hom(S, me.cod)) {
        if (!mono[m] || iso[m]) continue;
        for (int g : C.hom(me.dom, S))
          if (C.compose(m, g) == e) { extremal = false; break; }
        if (!extremal) break;
      }
    }
    flags[e] = extremal;
  }
  return flags;
}

std::vector<int> iso_class_reps(const FiniteCategory& C) {
  auto iso = iso_flags(C);
  int n = C.object_count();
  std::vector<int> rep(n);
  for (int x = 0; x < n; ++x) rep[x] = x;
  // isomorphism between objects is symmetric and transitive, so one sweep
  // per pair in ascending order lands every object on the least member
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rep[b] < b || rep[b] == rep[a]) continue;
      bool linked = false;
      for (int f : C.hom(a, b))
        if (iso[f]) { linked = true; break; }
      if (linked) rep[b] = rep[a];
    }
  }
  return rep;
}

std::vector<std::vector<int>> iso_classes(const FiniteCategory& C) {
  auto rep = iso_class_reps(C);
  std::vector<std::vector<int>> blocks;
  for (int x = 0; x < C.object_count(); ++x) {
    if (rep[x] == x) blocks.push_back({x});
    else {
      for (auto& blk : blocks)
        if (blk.front() == rep[x]) { blk.push_back(x); break; }
    }
  }
  return blocks;
}

}  // namespace fincat
