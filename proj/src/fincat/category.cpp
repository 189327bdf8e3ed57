#include "fincat/category.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fincat {

int FiniteCategory::add_object(const std::string& name) {
  objects.push_back(name);
  identity.push_back(-1);
  return static_cast<int>(objects.size()) - 1;
}

int FiniteCategory::add_morphism(const std::string& label, int dom, int cod) {
  morphisms.push_back({dom, cod, label});
  return static_cast<int>(morphisms.size()) - 1;
}

void FiniteCategory::finalize() {
  size_t m = morphisms.size();
  table_.assign(m * m, -1);
  hom_sets_.assign(objects.size() * objects.size(), {});
  out_of_.assign(objects.size(), {});
  into_.assign(objects.size(), {});
  for (int f = 0; f < morphism_count(); ++f) {
    hom_sets_[size_t(morphisms[f].dom) * objects.size() + morphisms[f].cod].push_back(f);
    out_of_[morphisms[f].dom].push_back(f);
    into_[morphisms[f].cod].push_back(f);
  }
}

int FiniteCategory::object_id(const std::string& name) const {
  for (int i = 0; i < object_count(); ++i)
    if (objects[i] == name) return i;
  return -1;
}

int FiniteCategory::morphism_id(const std::string& label) const {
  for (int i = 0; i < morphism_count(); ++i)
    if (morphisms[i].label == label) return i;
  return -1;
}

std::string ValidationReport::to_text(const FiniteCategory& C) const {
  if (violations.empty()) return "valid: all category axioms hold\n";
  std::ostringstream os;
  auto mor = [&](int i) { return C.morphisms[i].label; };
  for (const auto& v : violations) {
    switch (v.kind) {
      case Violation::IdentityMissing:
        os << "identity: object " << C.objects[v.a] << ": " << v.detail << '\n';
        break;
      case Violation::CompositionDomain:
        os << "composition: (" << mor(v.a) << " . " << mor(v.b) << "): " << v.detail << '\n';
        break;
      case Violation::IdentityLaw:
        os << "identity law: " << mor(v.a) << ": " << v.detail << '\n';
        break;
      case Violation::Associativity:
        os << "associativity: " << mor(v.a) << " . " << mor(v.b) << " . " << mor(v.c) << ": " << v.detail
           << '\n';
        break;
    }
  }
  os << violations.size() << " violation(s)\n";
  return os.str();
}

ValidationReport validate(const FiniteCategory& C) {
  ValidationReport report;
  int M = C.morphism_count();

  for (int x = 0; x < C.object_count(); ++x) {
    int id = C.identity[x];
    if (id < 0 || id >= M)
      report.violations.push_back({Violation::IdentityMissing, x, -1, -1, "no identity morphism designated"});
    else if (C.morphisms[id].dom != x || C.morphisms[id].cod != x)
      report.violations.push_back({Violation::IdentityMissing, x, -1, -1, "designated identity is not an endomorphism of the object"});
  }

  for (int g = 0; g < M; ++g) {
    for (int f = 0; f < M; ++f) {
      int h = C.compose(g, f);
      if (!C.composable(g, f)) {
        if (h != -1)
          report.violations.push_back({Violation::CompositionDomain, g, f, -1, "entry defined for a non-composable pair"});
        continue;
      }
      if (h < 0 || h >= M) {
        report.violations.push_back({Violation::CompositionDomain, g, f, -1, "no entry for a composable pair"});
        continue;
      }
      if (C.morphisms[h].dom != C.morphisms[f].dom || C.morphisms[h].cod != C.morphisms[g].cod)
        report.violations.push_back({Violation::CompositionDomain, g, f, -1, "composite has wrong domain or codomain"});
    }
  }

  for (int f = 0; f < M; ++f) {
    int idc = C.identity[C.morphisms[f].cod];
    int idd = C.identity[C.morphisms[f].dom];
    if (idc >= 0 && C.compose(idc, f) != f)
      report.violations.push_back({Violation::IdentityLaw, f, -1, -1, "id . f differs from f"});
    if (idd >= 0 && C.compose(f, idd) != f)
      report.violations.push_back({Violation::IdentityLaw, f, -1, -1, "f . id differs from f"});
  }

  // associativity over composable triples; the scan is the hot loop on
  // large categories, so it runs parallel with per-thread buffers
  std::vector<std::vector<Violation>> found;
#ifdef _OPENMP
  found.resize(omp_get_max_threads());
#else
  found.resize(1);
#endif
#pragma omp parallel for schedule(dynamic)
  for (int f = 0; f < M; ++f) {
#ifdef _OPENMP
    auto& sink = found[omp_get_thread_num()];
#else
    auto& sink = found[0];
#endif
    for (int g : C.out_of(C.morphisms[f].cod)) {
      int gf = C.compose(g, f);
      if (gf < 0 || gf >= M) continue;  // already reported as a table hole
      for (int h : C.out_of(C.morphisms[g].cod)) {
        int hg = C.compose(h, g);
        if (hg < 0 || hg >= M) continue;
        if (C.compose(h, gf) != C.compose(hg, f))
          sink.push_back({Violation::Associativity, h, g, f, "h.(g.f) differs from (h.g).f"});
      }
    }
  }
  for (auto& part : found)
    report.violations.insert(report.violations.end(), part.begin(), part.end());
  std::sort(report.violations.begin(), report.violations.end(), [](const Violation& x, const Violation& y) {
    return std::tie(x.kind, x.a, x.b, x.c) < std::tie(y.kind, y.a, y.b, y.c);
  });
  return report;
}

FiniteCategory opposite(const FiniteCategory& C) {
  FiniteCategory op;
  op.objects = C.objects;
  op.identity = C.identity;
  for (const auto& m : C.morphisms) op.morphisms.push_back({m.cod, m.dom, m.label});
  op.finalize();
  int M = C.morphism_count();
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f) {
      int h = C.compose(f, g);
      if (h >= 0) op.set_compose(g, f, h);
    }
  return op;
}

FiniteCategory full_subcategory(const FiniteCategory& C, const std::vector<int>& keep) {
  FiniteCategory S;
  std::vector<int> obj_map(C.object_count(), -1);
  for (int x : keep) obj_map[x] = S.add_object(C.objects[x]);
  std::vector<int> mor_map(C.morphism_count(), -1);
  for (int f = 0; f < C.morphism_count(); ++f) {
    const auto& m = C.morphisms[f];
    if (obj_map[m.dom] >= 0 && obj_map[m.cod] >= 0)
      mor_map[f] = S.add_morphism(m.label, obj_map[m.dom], obj_map[m.cod]);
  }
  for (int x : keep) S.set_identity(obj_map[x], mor_map[C.identity[x]]);
  S.finalize();
  for (int g = 0; g < C.morphism_count(); ++g) {
    if (mor_map[g] < 0) continue;
    for (int f = 0; f < C.morphism_count(); ++f) {
      if (mor_map[f] < 0 || !C.composable(g, f)) continue;
      int h = C.compose(g, f);
      if (h >= 0 && mor_map[h] >= 0) S.set_compose(mor_map[g], mor_map[f], mor_map[h]);
    }
  }
  return S;
}

}  // namespace fincat
