#include "fincat/builders.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "homcat/error.hpp"

namespace fincat {

using homcat::CheckError;
using homcat::ParseError;

FiniteCategory build_ab_category(int depth) {
  if (depth < 0) throw ParseError("ab category depth must be >= 0");
  FiniteCategory C;
  for (int i = 0; i <= depth; ++i) C.add_object("P" + std::to_string(i));
  std::map<std::pair<std::pair<int, int>, char>, int> arrow;  // ((i,j),letter) -> index
  for (int i = 0; i <= depth; ++i) {
    int id = C.add_morphism("id_P" + std::to_string(i), i, i);
    C.set_identity(i, id);
  }
  for (int i = 1; i <= depth; ++i)
    for (int j = 0; j < i; ++j)
      for (char letter : {'a', 'b'}) {
        std::string label(1, letter);
        label += "_" + std::to_string(i) + "_" + std::to_string(j);
        arrow[{{i, j}, letter}] = C.add_morphism(label, i, j);
      }
  C.finalize();
  auto letter_of = [&](int f) { return C.morphisms[f].label[0]; };
  for (int g = 0; g < C.morphism_count(); ++g)
    for (int f = 0; f < C.morphism_count(); ++f) {
      if (!C.composable(g, f)) continue;
      int h;
      if (f == C.identity[C.morphisms[f].dom]) h = g;
      else if (g == C.identity[C.morphisms[g].dom]) h = f;
      else h = arrow.at({{C.morphisms[f].dom, C.morphisms[g].cod}, letter_of(f)});
      C.set_compose(g, f, h);
    }
  return C;
}

FiniteCategory build_poset_category(PosetKind kind, int depth) {
  if (depth < 0) throw ParseError("poset depth must be >= 0");
  int lo = 0, hi = 0;
  switch (kind) {
    case PosetKind::Z: lo = -depth; hi = depth; break;
    case PosetKind::N: lo = 0; hi = depth; break;
    case PosetKind::NegN: lo = -depth; hi = 0; break;
  }
  FiniteCategory C;
  auto oid = [&](int v) { return v - lo; };
  for (int v = lo; v <= hi; ++v) C.add_object(std::to_string(v));
  std::map<std::pair<int, int>, int> arrow;  // (i,j) with i >= j
  for (int v = lo; v <= hi; ++v) {
    int id = C.add_morphism("id_" + std::to_string(v), oid(v), oid(v));
    C.set_identity(oid(v), id);
    arrow[{v, v}] = id;
  }
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j < i; ++j)
      arrow[{i, j}] = C.add_morphism("m_" + std::to_string(i) + "_" + std::to_string(j), oid(i), oid(j));
  C.finalize();
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= i; ++j)
      for (int l = lo; l <= j; ++l)
        C.set_compose(arrow.at({j, l}), arrow.at({i, j}), arrow.at({i, l}));
  return C;
}

namespace {

std::vector<std::vector<int>> cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

std::vector<std::vector<int>> product_table(const std::vector<std::vector<int>>& a,
                                            const std::vector<std::vector<int>>& b) {
  int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < nb; ++j1)
      for (int i2 = 0; i2 < na; ++i2)
        for (int j2 = 0; j2 < nb; ++j2)
          t[i1 * nb + j1][i2 * nb + j2] = a[i1][i2] * nb + b[j1][j2];
  return t;
}

std::vector<std::vector<int>> symmetric3() {
  // permutations of {0,1,2} in lexicographic order; index 0 is the identity
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<int, 3>& q) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == q) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp{};
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      t[i][j] = index_of(comp);
    }
  return t;
}

std::vector<std::vector<int>> dihedral4() {
  // r^i s^j with i mod 4, j mod 2; (i1,j1)(i2,j2) = (i1 + (-1)^{j1} i2, j1+j2)
  auto idx = [](int i, int j) { return ((i % 4) + 4) % 4 + 4 * (j % 2); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int i1 = 0; i1 < 4; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 4; ++i2)
        for (int j2 = 0; j2 < 2; ++j2)
          t[idx(i1, j1)][idx(i2, j2)] = idx(j1 == 0 ? i1 + i2 : i1 - i2, j1 + j2);
  return t;
}

std::vector<std::vector<int>> quaternion8() {
  // 1,-1,i,-i,j,-j,k,-k with the usual relations
  auto mul = [](int x, int y) {
    int sx = x & 1, sy = y & 1;  // odd index = negated unit
    int ux = x >> 1, uy = y >> 1;  // 0=1, 1=i, 2=j, 3=k
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    // sign of the unit product: cyclic i*j=k positive, reversed negative
    static const int neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    int u = unit[ux][uy];
    int s = (sx ^ sy ^ neg[ux][uy]) & 1;
    return (u << 1) | s;
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) t[x][y] = mul(x, y);
  return t;
}

}  // namespace

std::vector<CatalogGroup> group_catalog(int max_order) {
  if (max_order < 1 || max_order > 8) throw ParseError("groups catalog supports max order 1..8");
  std::vector<CatalogGroup> all = {
      {"1", cyclic(1)},
      {"Z2", cyclic(2)},
      {"Z3", cyclic(3)},
      {"Z4", cyclic(4)},
      {"Z2xZ2", product_table(cyclic(2), cyclic(2))},
      {"Z5", cyclic(5)},
      {"Z6", cyclic(6)},
      {"S3", symmetric3()},
      {"Z7", cyclic(7)},
      {"Z8", cyclic(8)},
      {"Z4xZ2", product_table(cyclic(4), cyclic(2))},
      {"Z2xZ2xZ2", product_table(product_table(cyclic(2), cyclic(2)), cyclic(2))},
      {"D4", dihedral4()},
      {"Q8", quaternion8()},
  };
  std::vector<CatalogGroup> out;
  for (auto& g : all)
    if (g.order() <= max_order) out.push_back(std::move(g));
  return out;
}

namespace {

// greedy generating set plus a word for every element, for hom enumeration
struct GroupWords {
  std::vector<int> gens;
  std::vector<std::vector<int>> word;  // element -> generator indices, applied left to right

  explicit GroupWords(const CatalogGroup& G) {
    int n = G.order();
    word.assign(n, {});
    std::vector<char> reached(n, 0);
    reached[0] = 1;
    auto close = [&]() {
      bool grew = true;
      while (grew) {
        grew = false;
        for (int x = 0; x < n; ++x) {
          if (!reached[x]) continue;
          for (size_t gi = 0; gi < gens.size(); ++gi) {
            int y = G.mult[x][gens[gi]];
            if (!reached[y]) {
              reached[y] = 1;
              word[y] = word[x];
              word[y].push_back(static_cast<int>(gi));
              grew = true;
            }
          }
        }
      }
    };
    for (int x = 0; x < n; ++x) {
      if (reached[x]) continue;
      gens.push_back(x);
      word[x] = {static_cast<int>(gens.size()) - 1};
      reached[x] = 1;
      close();
    }
  }
};

}  // namespace

std::vector<std::vector<int>> group_homomorphisms(const CatalogGroup& G, const CatalogGroup& H) {
  GroupWords words(G);
  int n = G.order(), m = H.order();
  int k = static_cast<int>(words.gens.size());
  std::vector<std::vector<int>> homs;
  std::vector<int> images(k, 0);
  while (true) {
    std::vector<int> phi(n);
    for (int x = 0; x < n; ++x) {
      int v = 0;
      for (int gi : words.word[x]) v = H.mult[v][images[gi]];
      phi[x] = v;
    }
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n; ++y)
        if (phi[G.mult[x][y]] != H.mult[phi[x]][phi[y]]) { ok = false; break; }
    if (ok) homs.push_back(phi);
    int i = k - 1;
    while (i >= 0 && images[i] == m - 1) images[i--] = 0;
    if (i < 0) break;
    ++images[i];
  }
  std::sort(homs.begin(), homs.end());
  return homs;
}

bool groups_isomorphic(const CatalogGroup& G, const CatalogGroup& H) {
  if (G.order() != H.order()) return false;
  int n = G.order();
  auto order_of = [n](const CatalogGroup& K, int x) {
    int e = 1, y = x;
    while (y != 0) { y = K.mult[y][x]; ++e; }
    return e;
  };
  std::vector<int> og(n), oh(n);
  for (int x = 0; x < n; ++x) { og[x] = order_of(G, x); oh[x] = order_of(H, x); }
  {
    auto sg = og, sh = oh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
  }
  std::vector<int> phi(n, -1);
  std::vector<char> used(n, 0);
  phi[0] = 0;
  used[0] = 1;
  auto consistent = [&](int placed) {
    for (int x = 0; x <= placed; ++x)
      for (int y = 0; y <= placed; ++y) {
        if (phi[x] < 0 || phi[y] < 0) continue;
        int z = G.mult[x][y];
        int w = H.mult[phi[x]][phi[y]];
        if (phi[z] >= 0 && w != phi[z]) return false;
        if (phi[z] < 0 && used[w]) return false;  // w is taken by another element
      }
    return true;
  };
  auto rec = [&](auto&& self, int x) -> bool {
    if (x == n) return true;
    for (int t = 0; t < n; ++t) {
      if (used[t] || oh[t] != og[x]) continue;
      phi[x] = t;
      used[t] = 1;
      if (consistent(x) && self(self, x + 1)) return true;
      phi[x] = -1;
      used[t] = 0;
    }
    return false;
  };
  return rec(rec, 1);
}

CatalogGroup direct_product(const CatalogGroup& G, const CatalogGroup& H) {
  return {G.name + "x" + H.name, product_table(G.mult, H.mult)};
}

FiniteCategory build_group_category(int max_order) { return build_group_category(group_catalog(max_order)); }

FiniteCategory build_group_category(const std::vector<CatalogGroup>& catalog) {
  FiniteCategory C;
  for (const auto& g : catalog) C.add_object(g.name);
  int n = static_cast<int>(catalog.size());
  // homs per (dom,cod), morphism index per image vector
  std::vector<std::vector<std::map<std::vector<int>, int>>> index(n, std::vector<std::map<std::vector<int>, int>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto homs = group_homomorphisms(catalog[a], catalog[b]);
      for (size_t k = 0; k < homs.size(); ++k) {
        std::string label = "h_" + catalog[a].name + "_" + catalog[b].name + "_" + std::to_string(k);
        index[a][b][homs[k]] = C.add_morphism(label, a, b);
      }
    }
  for (int a = 0; a < n; ++a) {
    std::vector<int> ident(catalog[a].order());
    std::iota(ident.begin(), ident.end(), 0);
    C.set_identity(a, index[a][a].at(ident));
  }
  C.finalize();
  // cache image vectors by morphism for composition
  std::vector<const std::vector<int>*> func(C.morphism_count(), nullptr);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (auto& [vec, idx] : index[a][b]) func[idx] = &vec;
  for (int g = 0; g < C.morphism_count(); ++g)
    for (int f = 0; f < C.morphism_count(); ++f) {
      if (!C.composable(g, f)) continue;
      const auto& ff = *func[f];
      const auto& gg = *func[g];
      std::vector<int> comp(ff.size());
      for (size_t x = 0; x < ff.size(); ++x) comp[x] = gg[ff[x]];
      C.set_compose(g, f, index[C.morphisms[f].dom][C.morphisms[g].cod].at(comp));
    }
  return C;
}

CancellationReport cancellation_demo(int max_order, const std::string& A, const std::string& B,
                                     const std::string& C) {
  auto catalog = group_catalog(max_order);
  auto find = [&](const std::string& name) -> const CatalogGroup& {
    for (const auto& g : catalog)
      if (g.name == name) return g;
    throw ParseError("unknown group `" + name + "` in catalog of order <= " + std::to_string(max_order));
  };
  const auto& ga = find(A);
  const auto& gb = find(B);
  const auto& gc = find(C);

  auto rep_of_product = [&](const CatalogGroup& x, const CatalogGroup& y) -> const CatalogGroup& {
    CatalogGroup p = direct_product(x, y);
    for (const auto& g : catalog)
      if (groups_isomorphic(p, g)) return g;
    throw CheckError("product " + p.name + " has no representative in the catalog (order " +
                     std::to_string(p.order()) + " > " + std::to_string(max_order) + ")");
  };
  const auto& ab = rep_of_product(ga, gb);
  const auto& ac = rep_of_product(ga, gc);

  CancellationReport r;
  r.a = A; r.b = B; r.c = C;
  r.ab_object = ab.name;
  r.ac_object = ac.name;

  FiniteCategory cat = build_group_category(catalog);
  int ia = cat.object_id(A), ib = cat.object_id(B), ic = cat.object_id(C);
  int iab = cat.object_id(ab.name), iac = cat.object_id(ac.name);
  for (int z = 0; z < cat.object_count(); ++z) {
    long long za = cat.hom_count(z, ia), zb = cat.hom_count(z, ib), zc = cat.hom_count(z, ic);
    long long zab = cat.hom_count(z, iab), zac = cat.hom_count(z, iac);
    if (zab != za * zb) {
      r.multiplicative = false;
      r.failures.push_back("Z=" + cat.objects[z] + ": |Hom(Z," + ab.name + ")| = " + std::to_string(zab) +
                           " but |Hom(Z," + A + ")||Hom(Z," + B + ")| = " + std::to_string(za * zb));
    }
    if (zac != za * zc) {
      r.multiplicative = false;
      r.failures.push_back("Z=" + cat.objects[z] + ": |Hom(Z," + ac.name + ")| = " + std::to_string(zac) +
                           " but |Hom(Z," + A + ")||Hom(Z," + C + ")| = " + std::to_string(za * zc));
    }
    if (zb != zc && r.columns_agree) {
      r.columns_agree = false;
      r.column_witness = cat.objects[z];
    }
    r.lines.push_back("Z=" + cat.objects[z] + ": |Hom(Z," + B + ")| = " + std::to_string(zb) +
                      ", |Hom(Z," + C + ")| = " + std::to_string(zc));
  }
  return r;
}

}  // namespace fincat
