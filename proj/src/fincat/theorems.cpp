#include "fincat/theorems.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "homcat/error.hpp"

namespace fincat {

using homcat::CheckError;

namespace {

// least selected morphism per supobject class, ascending; the subset
// machinery of the counting identity runs over these
std::vector<int> m_class_reps(const Context& ctx, const std::vector<int>& selected, int X) {
  const auto& L = ctx.sup[X];
  std::map<int, int> by_class;
  for (int f : selected) {
    if (ctx.cat().morphisms[f].dom != X) continue;
    int c = L.class_of(f);
    if (c < 0) continue;  // selected arrow is not epi; setup verdict reports it
    auto [it, fresh] = by_class.emplace(c, f);
    if (!fresh) it->second = std::min(it->second, f);
  }
  std::vector<int> reps;
  for (auto& [c, f] : by_class) reps.push_back(f);
  std::sort(reps.begin(), reps.end());
  return reps;
}

bool factors_through(const FiniteCategory& C, int f, int q) {
  // some g with g . q = f
  for (int g : C.hom(C.morphisms[q].cod, C.morphisms[f].cod))
    if (C.compose(g, q) == f) return true;
  return false;
}

ConditionVerdict pushout_family_condition(const Context& ctx, const std::string& name,
                                          const std::vector<std::vector<int>>& reps_per_object) {
  ConditionVerdict v{name, true, {}, {}};
  const FiniteCategory& C = ctx.cat();
  for (int X = 0; X < C.object_count() && v.holds; ++X) {
    const auto& reps = reps_per_object[X];
    int m = static_cast<int>(reps.size());
    for (uint32_t mask = 1; mask < (uint32_t(1) << m); ++mask) {
      std::vector<int> span;
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1u) span.push_back(reps[i]);
      if (!wide_pushout(C, X, span)) {
        v.holds = false;
        v.witnesses.push_back({{X}, span, "no pushout for this family of supobjects"});
        break;
      }
    }
  }
  return v;
}

void finish(ConditionReport& r) {
  r.overall = true;
  for (const auto& c : r.conditions) r.overall = r.overall && c.holds;
}

}  // namespace

std::string ConditionReport::to_text(const FiniteCategory& C) const {
  std::ostringstream os;
  os << "theorem " << theorem << ":\n";
  for (const auto& c : conditions) {
    os << "  " << c.name << ": " << (c.holds ? "holds" : "FAILS") << '\n';
    for (const auto& w : c.witnesses) {
      os << "    witness:";
      for (int x : w.objects) os << " object " << C.objects[x];
      for (int f : w.morphisms) os << " " << C.morphisms[f].label;
      if (!w.note.empty()) os << "  (" << w.note << ")";
      os << '\n';
    }
    if (!c.per_object_counts.empty()) {
      os << "    per-object:";
      for (int x = 0; x < C.object_count(); ++x) os << ' ' << C.objects[x] << '=' << c.per_object_counts[x];
      os << '\n';
    }
  }
  for (const auto& n : notes) os << "  note: " << n << '\n';
  os << "  overall: " << (overall ? "holds" : "FAILS") << '\n';
  return os.str();
}

ConditionReport check_main_conditions(const Context& ctx, const MClassSpec& M, const IClassSpec& I) {
  const FiniteCategory& C = ctx.cat();
  ConditionReport r;
  r.theorem = "main";
  r.notes.push_back("M = " + M.name() + ", I = " + I.name());

  auto selected = M.resolve(ctx);
  auto member = I.membership(ctx);

  ConditionVerdict setup{"setup: I is a class of monomorphisms containing the identities", true, {}, {}};
  for (int f = 0; f < C.morphism_count(); ++f)
    if (member[f] && !ctx.mono[f]) {
      setup.holds = false;
      setup.witnesses.push_back({{}, {f}, "selected by I but not mono"});
      break;
    }
  r.conditions.push_back(std::move(setup));

  auto is_I_mono = [&](int f) { return member[f] && ctx.mono[f]; };

  std::vector<std::vector<int>> reps_per_object(C.object_count());
  for (int X = 0; X < C.object_count(); ++X) reps_per_object[X] = m_class_reps(ctx, selected, X);

  r.conditions.push_back(
      pushout_family_condition(ctx, "(1) every family of M-supobjects has a pushout", reps_per_object));

  ConditionVerdict c2{"(2) isomorphism classes of M-supobjects are finite", true, {}, {}};
  c2.per_object_counts.resize(C.object_count());
  for (int X = 0; X < C.object_count(); ++X)
    c2.per_object_counts[X] = static_cast<long long>(reps_per_object[X].size());
  r.conditions.push_back(std::move(c2));

  ConditionVerdict c3{"(3) every non-I-mono factors through an M-supobject", true, {}, {}};
  for (int f = 0; f < C.morphism_count() && c3.holds; ++f) {
    if (is_I_mono(f)) continue;
    bool found = false;
    for (int q : selected) {
      if (C.morphisms[q].dom != C.morphisms[f].dom) continue;
      if (factors_through(C, f, q)) { found = true; break; }
    }
    if (!found) {
      c3.holds = false;
      c3.witnesses.push_back({{}, {f}, "not I-mono, no factorization through any M-supobject"});
    }
  }
  r.conditions.push_back(std::move(c3));

  ConditionVerdict c4{"(4) factoring through an M-supobject forces non-I-mono", true, {}, {}};
  for (int f = 0; f < C.morphism_count() && c4.holds; ++f) {
    if (!is_I_mono(f)) continue;
    for (int q : selected) {
      if (C.morphisms[q].dom != C.morphisms[f].dom) continue;
      if (factors_through(C, f, q)) {
        c4.holds = false;
        c4.witnesses.push_back({{}, {f, q}, "I-mono factoring through an M-supobject"});
        break;
      }
    }
  }
  r.conditions.push_back(std::move(c4));

  finish(r);
  return r;
}

ConditionReport check_weak_conditions(const Context& ctx) {
  const FiniteCategory& C = ctx.cat();
  ConditionReport r;
  r.theorem = "weak";

  std::vector<std::vector<int>> epi_reps(C.object_count());
  for (int X = 0; X < C.object_count(); ++X)
    for (const auto& cls : ctx.sup[X].classes) epi_reps[X].push_back(cls.representative);

  ConditionVerdict c1{"(1) every pair of epis out of a common object has a pushout", true, {}, {}};
  for (int X = 0; X < C.object_count() && c1.holds; ++X) {
    const auto& reps = epi_reps[X];
    for (size_t i = 0; i < reps.size() && c1.holds; ++i)
      for (size_t j = i; j < reps.size(); ++j) {
        if (!wide_pushout(C, X, {reps[i], reps[j]})) {
          c1.holds = false;
          c1.witnesses.push_back({{X}, {reps[i], reps[j]}, "no pushout for this pair of epis"});
          break;
        }
      }
  }
  r.conditions.push_back(std::move(c1));

  ConditionVerdict c2{"(2) isomorphism classes of maximal supobjects are finite", true, {}, {}};
  c2.per_object_counts.resize(C.object_count());
  for (int X = 0; X < C.object_count(); ++X)
    c2.per_object_counts[X] = static_cast<long long>(maximal_classes(ctx.sup[X]).size());
  r.conditions.push_back(std::move(c2));

  ConditionVerdict c3{"(3) every proper supobject lies below a maximal one", true, {}, {}};
  for (int X = 0; X < C.object_count() && c3.holds; ++X) {
    const auto& L = ctx.sup[X];
    auto maxima = maximal_classes(L);
    for (int p = 0; p < L.class_count(); ++p) {
      if (!L.is_proper(p)) continue;
      bool below = false;
      for (int m : maxima)
        if (L.geq[m][p]) { below = true; break; }
      if (!below) {
        c3.holds = false;
        c3.witnesses.push_back({{X}, {L.classes[p].representative}, "proper supobject with no maximal above it"});
        break;
      }
    }
  }
  r.conditions.push_back(std::move(c3));

  ConditionVerdict c4{"(4) every non-mono factors through a proper supobject", true, {}, {}};
  for (int f = 0; f < C.morphism_count() && c4.holds; ++f) {
    if (ctx.mono[f]) continue;
    const auto& L = ctx.sup[C.morphisms[f].dom];
    bool found = false;
    for (int p = 0; p < L.class_count() && !found; ++p)
      if (L.is_proper(p) && factors_through(C, f, L.classes[p].representative)) found = true;
    if (!found) {
      c4.holds = false;
      c4.witnesses.push_back({{}, {f}, "non-mono with no factorization through a proper supobject"});
    }
  }
  r.conditions.push_back(std::move(c4));

  ConditionVerdict c5{"(5) factoring through a proper supobject forces non-mono", true, {}, {}};
  for (int f = 0; f < C.morphism_count() && c5.holds; ++f) {
    if (!ctx.mono[f]) continue;
    const auto& L = ctx.sup[C.morphisms[f].dom];
    for (int p = 0; p < L.class_count(); ++p) {
      if (!L.is_proper(p)) continue;
      int q = L.classes[p].representative;
      if (factors_through(C, f, q)) {
        c5.holds = false;
        c5.witnesses.push_back({{}, {f, q}, "mono factoring through a proper supobject"});
        break;
      }
    }
  }
  r.conditions.push_back(std::move(c5));

  finish(r);
  return r;
}

ConditionReport check_corollary_conditions(const Context& ctx) {
  const FiniteCategory& C = ctx.cat();
  ConditionReport weak = check_weak_conditions(ctx);
  ConditionReport r;
  r.theorem = "corollary";
  for (int i = 0; i < 3; ++i) r.conditions.push_back(weak.conditions[i]);

  ConditionVerdict c4{"(4') every morphism has a coimage", true, {}, {}};
  std::vector<int> coim(C.morphism_count(), -1);
  for (int f = 0; f < C.morphism_count(); ++f) {
    auto cls = least_factoring_class(C, ctx.sup[C.morphisms[f].dom], f);
    if (cls) coim[f] = *cls;
    else if (c4.holds) {
      c4.holds = false;
      c4.witnesses.push_back({{}, {f}, "no least supobject among those the morphism factors through"});
    }
  }
  r.conditions.push_back(std::move(c4));

  ConditionVerdict c5{"(5') f is mono iff the coimage epi is an isomorphism", true, {}, {}};
  for (int f = 0; f < C.morphism_count() && c5.holds; ++f) {
    if (coim[f] < 0) continue;
    const auto& L = ctx.sup[C.morphisms[f].dom];
    bool coim_iso = (coim[f] == L.identity_class);
    if (bool(ctx.mono[f]) != coim_iso) {
      c5.holds = false;
      c5.witnesses.push_back({{}, {f, L.classes[coim[f]].representative},
                              ctx.mono[f] ? "mono with non-iso coimage" : "non-mono with iso coimage"});
    }
  }
  r.conditions.push_back(std::move(c5));

  finish(r);
  return r;
}

namespace {

ConditionVerdict image_existence_condition(const Context& ctx, std::vector<int>& img_out) {
  const FiniteCategory& C = ctx.cat();
  ConditionVerdict v{"every morphism has an image", true, {}, {}};
  img_out.assign(C.morphism_count(), -1);
  for (int f = 0; f < C.morphism_count(); ++f) {
    auto cls = least_factoring_class(C, ctx.sub[C.morphisms[f].cod], f);
    if (cls) img_out[f] = *cls;
    else if (v.holds) {
      v.holds = false;
      v.witnesses.push_back({{}, {f}, "no least subobject among those the morphism factors through"});
    }
  }
  return v;
}

ConditionVerdict extremal_factor_condition(const Context& ctx, const std::vector<int>& img) {
  const FiniteCategory& C = ctx.cat();
  ConditionVerdict v{"the epi part of every image factorization is extremal", true, {}, {}};
  for (int h = 0; h < C.morphism_count() && v.holds; ++h) {
    if (img[h] < 0) continue;
    const auto& L = ctx.sub[C.morphisms[h].cod];
    for (int g : L.classes[img[h]].members) {
      for (int f : C.hom(C.morphisms[h].dom, C.morphisms[g].dom)) {
        if (C.compose(g, f) != h) continue;
        if (!ctx.epi[f] || !ctx.extremal[f]) {
          v.holds = false;
          v.witnesses.push_back({{}, {h, g, f}, "image factorization whose epi part is not an extremal epi"});
          break;
        }
      }
      if (!v.holds) break;
    }
  }
  return v;
}

}  // namespace

ConditionReport check_pultr_conditions(const Context& ctx) {
  const FiniteCategory& C = ctx.cat();
  ConditionReport r;
  r.theorem = "pultr";

  ConditionVerdict c1{"(1) isomorphism classes of subobjects are finite", true, {}, {}};
  c1.per_object_counts.resize(C.object_count());
  for (int X = 0; X < C.object_count(); ++X)
    c1.per_object_counts[X] = ctx.sub[X].class_count();
  r.conditions.push_back(std::move(c1));

  std::vector<int> img;
  auto c2 = image_existence_condition(ctx, img);
  c2.name = "(2) " + c2.name;
  r.conditions.push_back(std::move(c2));
  auto c3 = extremal_factor_condition(ctx, img);
  c3.name = "(3) " + c3.name;
  r.conditions.push_back(std::move(c3));

  finish(r);
  return r;
}

ConditionReport check_variant_condition(const Context& ctx) {
  const FiniteCategory& C = ctx.cat();
  ConditionReport r;
  r.theorem = "variant";

  ConditionVerdict c1{"(1') the supobjects of every object are well-founded", true, {}, {}};
  c1.per_object_counts.resize(C.object_count());
  for (int X = 0; X < C.object_count(); ++X) {
    auto wf = well_founded_report(ctx.sup[X]);
    c1.per_object_counts[X] = wf.longest_chain_length;
    if (!wf.well_founded && c1.holds) {
      c1.holds = false;
      c1.witnesses.push_back({{X}, {}, "mutually dominating distinct supobject classes"});
    }
  }
  r.conditions.push_back(std::move(c1));

  std::vector<int> img;
  auto c2 = image_existence_condition(ctx, img);
  c2.name = "(2) " + c2.name;
  r.conditions.push_back(std::move(c2));
  auto c3 = extremal_factor_condition(ctx, img);
  c3.name = "(3) " + c3.name;
  r.conditions.push_back(std::move(c3));
  r.notes.push_back("per-object counts are the longest strictly decreasing supobject chains");

  finish(r);
  return r;
}

ConditionReport check_dawar_pushouts(const Context& ctx) {
  const FiniteCategory& C = ctx.cat();
  ConditionReport r;
  r.theorem = "dawar-pushouts";

  ConditionVerdict c1{"pushouts of all spans exist", true, {}, {}};
  for (int X = 0; X < C.object_count(); ++X) {
    const auto& out = C.out_of(X);
    for (size_t i = 0; i < out.size(); ++i)
      for (size_t j = i; j < out.size(); ++j) {
        if (!wide_pushout(C, X, {out[i], out[j]})) {
          c1.holds = false;
          c1.witnesses.push_back({{X}, {out[i], out[j]}, "span with no pushout"});
        }
      }
  }
  r.conditions.push_back(std::move(c1));
  r.notes.push_back("proper-factorization-system half: not checked");

  finish(r);
  return r;
}

long long mono_count_direct(const Context& ctx, int Z, int A, const IClassSpec& I) {
  auto member = I.membership(ctx);
  long long count = 0;
  for (int f : ctx.cat().hom(Z, A))
    if (member[f] && ctx.mono[f]) ++count;
  return count;
}

long long mono_count_inclusion_exclusion(const Context& ctx, int Z, int A, const MClassSpec& M,
                                         const IClassSpec& I, bool recheck) {
  const FiniteCategory& C = ctx.cat();
  if (recheck) {
    auto report = check_main_conditions(ctx, M, I);
    if (!report.overall) {
      std::string which;
      for (const auto& c : report.conditions)
        if (!c.holds) { which = c.name; break; }
      throw CheckError("hypotheses of the counting identity fail: " + which);
    }
  }
  auto reps = m_class_reps(ctx, M.resolve(ctx), Z);
  int m = static_cast<int>(reps.size());
  long long total = C.hom_count(Z, A);
  for (uint32_t mask = 1; mask < (uint32_t(1) << m); ++mask) {
    std::vector<int> span;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1u) span.push_back(reps[i]);
    auto po = wide_pushout(C, Z, span);
    if (!po) throw std::logic_error("pushout missing although condition (1) was checked");
    if (!ctx.epi[po->through]) throw std::logic_error("pushout composite is not epi");
    long long term = C.hom_count(po->apex, A);
    total += (std::popcount(mask) % 2 == 0) ? term : -term;
  }
  return total;
}

HomMatrix hom_matrix(const Context& ctx) {
  const FiniteCategory& C = ctx.cat();
  HomMatrix m;
  for (int x = 0; x < C.object_count(); ++x)
    if (ctx.obj_rep[x] == x) m.reps.push_back(x);
  m.counts.assign(m.reps.size(), std::vector<long long>(m.reps.size(), 0));
  for (size_t i = 0; i < m.reps.size(); ++i)
    for (size_t j = 0; j < m.reps.size(); ++j) m.counts[i][j] = C.hom_count(m.reps[i], m.reps[j]);
  return m;
}

CombinatorialReport is_combinatorial(const Context& ctx) {
  const FiniteCategory& C = ctx.cat();
  CombinatorialReport r;
  r.matrix = hom_matrix(ctx);
  size_t k = r.matrix.reps.size();
  for (size_t j1 = 0; j1 < k && r.combinatorial; ++j1)
    for (size_t j2 = j1 + 1; j2 < k; ++j2) {
      bool equal = true;
      for (size_t i = 0; i < k; ++i)
        if (r.matrix.counts[i][j1] != r.matrix.counts[i][j2]) { equal = false; break; }
      if (equal) {
        r.combinatorial = false;
        r.witness_a = r.matrix.reps[j1];
        r.witness_b = r.matrix.reps[j2];
        break;
      }
    }
  // converse sanity: isomorphic objects must have identical hom columns
  for (int x = 0; x < C.object_count(); ++x) {
    if (ctx.obj_rep[x] == x) continue;
    for (int rep : r.matrix.reps)
      if (C.hom_count(rep, x) != C.hom_count(rep, ctx.obj_rep[x]))
        r.sanity.push_back("isomorphic objects " + C.objects[x] + " and " + C.objects[ctx.obj_rep[x]] +
                           " have different hom counts from " + C.objects[rep]);
  }
  return r;
}

LovaszReport verify_lovasz_lemma(const Context& ctx) {
  const FiniteCategory& C = ctx.cat();
  LovaszReport r;
  for (int a = 0; a < C.object_count(); ++a)
    for (int b = a; b < C.object_count(); ++b) {
      std::vector<int> mono_ab, mono_ba, epi_ab, epi_ba;
      for (int f : C.hom(a, b)) {
        if (ctx.mono[f]) mono_ab.push_back(f);
        if (ctx.epi[f]) epi_ab.push_back(f);
      }
      for (int f : C.hom(b, a)) {
        if (ctx.mono[f]) mono_ba.push_back(f);
        if (ctx.epi[f]) epi_ba.push_back(f);
      }
      if (!mono_ab.empty() && !mono_ba.empty()) {
        for (int f : mono_ab)
          if (!ctx.iso[f]) r.violations.push_back({{a, b}, {f}, "mutual monos exist but this mono is not iso"});
        for (int f : mono_ba)
          if (!ctx.iso[f]) r.violations.push_back({{b, a}, {f}, "mutual monos exist but this mono is not iso"});
      }
      if (!epi_ab.empty() && !epi_ba.empty()) {
        for (int f : epi_ab)
          if (!ctx.iso[f]) r.violations.push_back({{a, b}, {f}, "mutual epis exist but this epi is not iso"});
        for (int f : epi_ba)
          if (!ctx.iso[f]) r.violations.push_back({{b, a}, {f}, "mutual epis exist but this epi is not iso"});
      }
    }
  r.ok = r.violations.empty();
  return r;
}

PushoutHomReport verify_pushout_hom_lemma(const Context& ctx, int q1, int q2, int Y) {
  const FiniteCategory& C = ctx.cat();
  if (C.morphisms[q1].dom != C.morphisms[q2].dom)
    throw std::invalid_argument("verify_pushout_hom_lemma: the two epis must share their domain");
  if (!ctx.epi[q1] || !ctx.epi[q2])
    throw std::invalid_argument("verify_pushout_hom_lemma: both arrows must be epis");
  int X = C.morphisms[q1].dom;
  auto po = wide_pushout(C, X, {q1, q2});
  if (!po) throw CheckError("pushout of the two supobjects does not exist");

  PushoutHomReport r;
  r.pushout = *po;
  for (int u : C.hom(po->apex, Y)) r.lhs.push_back(C.compose(u, po->through));
  std::sort(r.lhs.begin(), r.lhs.end());
  r.lhs.erase(std::unique(r.lhs.begin(), r.lhs.end()), r.lhs.end());

  std::vector<int> s1, s2;
  for (int u : C.hom(C.morphisms[q1].cod, Y)) s1.push_back(C.compose(u, q1));
  for (int u : C.hom(C.morphisms[q2].cod, Y)) s2.push_back(C.compose(u, q2));
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(r.rhs));
  r.rhs.erase(std::unique(r.rhs.begin(), r.rhs.end()), r.rhs.end());
  r.ok = (r.lhs == r.rhs);
  return r;
}

PultrCatReport pultr_decomposition_identity(const Context& ctx, int A, int B, bool recheck) {
  const FiniteCategory& C = ctx.cat();
  if (recheck) {
    auto report = check_pultr_conditions(ctx);
    if (!report.overall) throw CheckError("hypotheses of the hom decomposition fail");
  }
  PultrCatReport r;
  r.A = A;
  r.B = B;
  r.hom_total = C.hom_count(A, B);

  std::vector<char> seen_composite(C.morphism_count(), 0);
  for (int T = 0; T < C.object_count(); ++T) {
    if (ctx.obj_rep[T] != T) continue;
    std::vector<int> extr, mono, isom;
    for (int f : C.hom(A, T))
      if (ctx.epi[f] && ctx.extremal[f]) extr.push_back(f);
    for (int g : C.hom(T, B))
      if (ctx.mono[g]) mono.push_back(g);
    for (int m : C.hom(T, T))
      if (ctx.iso[m]) isom.push_back(m);

    PultrCatTerm term;
    term.rep = T;
    term.extr = static_cast<long long>(extr.size());
    term.mono = static_cast<long long>(mono.size());
    term.isom = static_cast<long long>(isom.size());

    std::map<int, std::vector<std::pair<int, int>>> fibers;
    for (int f : extr)
      for (int g : mono) fibers[C.compose(g, f)].push_back({f, g});
    term.block = static_cast<long long>(fibers.size());

    for (auto& [h, fiber] : fibers) {
      if (seen_composite[h]) r.partition_ok = false;
      seen_composite[h] = 1;
      if (static_cast<long long>(fiber.size()) != term.isom) r.fibers_ok = false;
      auto [f0, g0] = fiber.front();
      for (auto [f, g] : fiber) {
        int transports = 0;
        for (int m : isom)
          if (C.compose(g0, m) == g && C.compose(m, f) == f0) ++transports;
        if (transports != 1) r.fibers_ok = false;
      }
    }

    if (term.isom == 0 || (term.extr * term.mono) % term.isom != 0) {
      r.exact = false;
      term.contribution = 0;
    } else {
      term.contribution = term.extr * term.mono / term.isom;
    }
    r.sum += term.contribution;
    r.terms.push_back(term);
  }
  for (int h : C.hom(A, B))
    if (!seen_composite[h]) r.partition_ok = false;
  return r;
}

}  // namespace fincat
