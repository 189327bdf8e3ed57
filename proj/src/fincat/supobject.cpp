#include "fincat/supobject.hpp"

#include <algorithm>

namespace fincat {

namespace {

// q' = h . q for some h (supobjects) / m' = m . h for some h (subobjects)
bool factors(const FiniteCategory& C, bool dual, int q, int q2) {
  const auto& mq = C.morphisms[q];
  const auto& mq2 = C.morphisms[q2];
  if (!dual) {
    for (int h : C.hom(mq.cod, mq2.cod))
      if (C.compose(h, q) == q2) return true;
  } else {
    for (int h : C.hom(mq2.dom, mq.dom))
      if (C.compose(q, h) == q2) return true;
  }
  return false;
}

bool same_class(const FiniteCategory& C, bool dual, const std::vector<char>& iso, int q, int q2) {
  const auto& mq = C.morphisms[q];
  const auto& mq2 = C.morphisms[q2];
  if (!dual) {
    for (int h : C.hom(mq.cod, mq2.cod))
      if (iso[h] && C.compose(h, q) == q2) return true;
  } else {
    for (int h : C.hom(mq2.dom, mq.dom))
      if (iso[h] && C.compose(q, h) == q2) return true;
  }
  return false;
}

SupobjectLattice build_lattice(const FiniteCategory& C, int X, bool dual) {
  SupobjectLattice L;
  L.object = X;
  L.dual = dual;
  auto iso = iso_flags(C);
  auto flag = dual ? mono_flags(C) : epi_flags(C);
  std::vector<int> arrows;
  const auto& pool = dual ? C.into(X) : C.out_of(X);
  for (int f : pool)
    if (flag[f]) arrows.push_back(f);
  std::sort(arrows.begin(), arrows.end());

  std::vector<int> cls(arrows.size(), -1);
  for (size_t i = 0; i < arrows.size(); ++i) {
    if (cls[i] >= 0) continue;
    int id = L.class_count();
    cls[i] = id;
    SupobjectClass c;
    c.representative = arrows[i];
    c.members.push_back(arrows[i]);
    for (size_t j = i + 1; j < arrows.size(); ++j) {
      if (cls[j] >= 0) continue;
      if (same_class(C, dual, iso, arrows[i], arrows[j])) {
        cls[j] = id;
        c.members.push_back(arrows[j]);
      }
    }
    L.classes.push_back(std::move(c));
  }

  int k = L.class_count();
  L.geq.assign(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      L.geq[i][j] = factors(C, dual, L.classes[i].representative, L.classes[j].representative);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (L.geq[i][j]) L.classes[i].dominates.push_back(j);

  int id_arrow = C.identity[X];
  for (int i = 0; i < k; ++i)
    if (std::find(L.classes[i].members.begin(), L.classes[i].members.end(), id_arrow) != L.classes[i].members.end())
      L.identity_class = i;
  return L;
}

}  // namespace

int SupobjectLattice::class_of(int morphism) const {
  for (int i = 0; i < class_count(); ++i)
    if (std::find(classes[i].members.begin(), classes[i].members.end(), morphism) != classes[i].members.end())
      return i;
  return -1;
}

SupobjectLattice supobjects(const FiniteCategory& C, int X) { return build_lattice(C, X, false); }
SupobjectLattice subobjects(const FiniteCategory& C, int X) { return build_lattice(C, X, true); }

std::vector<int> maximal_classes(const SupobjectLattice& L) {
  std::vector<int> out;
  for (int i = 0; i < L.class_count(); ++i) {
    if (!L.is_proper(i)) continue;
    bool maximal = true;
    for (int j = 0; j < L.class_count() && maximal; ++j)
      if (j != i && L.is_proper(j) && L.geq[j][i]) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

std::optional<int> least_factoring_class(const FiniteCategory& C, const SupobjectLattice& L, int f) {
  const auto& mf = C.morphisms[f];
  std::vector<int> factoring;
  for (int i = 0; i < L.class_count(); ++i) {
    int rep = L.classes[i].representative;
    const auto& mr = C.morphisms[rep];
    bool found = false;
    if (!L.dual) {  // supobjects of dom f: f = g . rep
      for (int g : C.hom(mr.cod, mf.cod))
        if (C.compose(g, rep) == f) { found = true; break; }
    } else {  // subobjects of cod f: f = rep . g
      for (int g : C.hom(mf.dom, mr.dom))
        if (C.compose(rep, g) == f) { found = true; break; }
    }
    if (found) factoring.push_back(i);
  }
  for (int i : factoring) {
    bool least = true;
    for (int j : factoring)
      if (!L.geq[j][i]) { least = false; break; }
    if (least) return i;
  }
  return std::nullopt;
}

FactorResult image(const FiniteCategory& C, int f) {
  FactorResult r{subobjects(C, C.morphisms[f].cod), std::nullopt};
  r.cls = least_factoring_class(C, r.lattice, f);
  return r;
}

FactorResult coimage(const FiniteCategory& C, int f) {
  FactorResult r{supobjects(C, C.morphisms[f].dom), std::nullopt};
  r.cls = least_factoring_class(C, r.lattice, f);
  return r;
}

WellFoundedReport well_founded_report(const SupobjectLattice& L) {
  WellFoundedReport report;
  int k = L.class_count();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (L.geq[i][j] && L.geq[j][i]) {
        // mutual strict domination between distinct classes would be a
        // representation bug; a finite preorder fails well-foundedness
        // exactly on such cycles
        report.well_founded = false;
        report.chain_classes = {i, j};
        return report;
      }
  // longest strictly decreasing chain via DFS memo on the strict order
  std::vector<int> len(k, -1), next(k, -1);
  auto dfs = [&](auto&& self, int i) -> int {
    if (len[i] >= 0) return len[i];
    len[i] = 0;
    for (int j = 0; j < k; ++j) {
      if (j == i || !L.geq[i][j]) continue;
      int cand = 1 + self(self, j);
      if (cand > len[i]) { len[i] = cand; next[i] = j; }
    }
    return len[i];
  };
  int best = -1;
  for (int i = 0; i < k; ++i)
    if (best < 0 || dfs(dfs, i) > len[best]) best = i;
  if (best >= 0) {
    report.longest_chain_length = len[best];
    for (int i = best; i >= 0; i = next[i]) {
      report.chain_classes.push_back(i);
      report.chain_representatives.push_back(L.classes[i].representative);
      if (next[i] < 0) break;
    }
  }
  return report;
}

WellFoundedReport well_founded_supobjects(const FiniteCategory& C, int X) {
  return well_founded_report(supobjects(C, X));
}

}  // namespace fincat
