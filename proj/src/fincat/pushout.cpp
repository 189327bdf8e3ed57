#include "fincat/pushout.hpp"

#include <stdexcept>
#include <unordered_map>

namespace fincat {

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Enumerates all commuting cocones (tuples u_i in Hom(Q_i, P') with all
// u_i . span_i equal) grouped by the common composite, and feeds them to
// `fn`. Returns false as soon as `fn` does.
template <typename Fn>
bool for_each_cocone(const FiniteCategory& C, int X, const std::vector<int>& span, int P, Fn&& fn) {
  size_t m = span.size();
  // group each leg's candidates by the composite they induce on X
  std::vector<std::unordered_map<int, std::vector<int>>> by_through(m);
  for (size_t i = 0; i < m; ++i) {
    int Qi = C.morphisms[span[i]].cod;
    for (int u : C.hom(Qi, P)) by_through[i][C.compose(u, span[i])].push_back(u);
  }
  for (int t : C.hom(X, P)) {
    std::vector<const std::vector<int>*> pools(m);
    bool feasible = true;
    for (size_t i = 0; i < m && feasible; ++i) {
      auto it = by_through[i].find(t);
      if (it == by_through[i].end()) feasible = false;
      else pools[i] = &it->second;
    }
    if (!feasible) continue;
    std::vector<size_t> idx(m, 0);
    while (true) {
      std::vector<int> tuple(m);
      for (size_t i = 0; i < m; ++i) tuple[i] = (*pools[i])[idx[i]];
      if (!fn(t, tuple)) return false;
      size_t k = 0;
      while (k < m && ++idx[k] == pools[k]->size()) idx[k++] = 0;
      if (k == m) break;
    }
  }
  return true;
}

bool universal(const FiniteCategory& C, int X, const std::vector<int>& span, const PushoutResult& cand) {
  size_t m = span.size();
  for (int P2 = 0; P2 < C.object_count(); ++P2) {
    // census: every w out of the apex induces one commuting cocone at P2
    std::unordered_map<std::vector<int>, int, VecHash> census;
    for (int w : C.hom(cand.apex, P2)) {
      std::vector<int> key(m + 1);
      key[0] = C.compose(w, cand.through);
      for (size_t i = 0; i < m; ++i) key[i + 1] = C.compose(w, cand.legs[i]);
      ++census[key];
    }
    bool ok = for_each_cocone(C, X, span, P2, [&](int t, const std::vector<int>& tuple) {
      std::vector<int> key(m + 1);
      key[0] = t;
      for (size_t i = 0; i < m; ++i) key[i + 1] = tuple[i];
      auto it = census.find(key);
      return it != census.end() && it->second == 1;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool verify_pushout(const FiniteCategory& C, int X, const std::vector<int>& span, const PushoutResult& res) {
  for (int s : span)
    if (C.morphisms[s].dom != X) return false;
  if (res.through < 0 || C.morphisms[res.through].dom != X || C.morphisms[res.through].cod != res.apex)
    return false;
  if (res.legs.size() != span.size()) return false;
  for (size_t i = 0; i < span.size(); ++i) {
    int leg = res.legs[i];
    if (C.morphisms[leg].dom != C.morphisms[span[i]].cod || C.morphisms[leg].cod != res.apex) return false;
    if (C.compose(leg, span[i]) != res.through) return false;
  }
  return universal(C, X, span, res);
}

std::optional<PushoutResult> wide_pushout(const FiniteCategory& C, int X, const std::vector<int>& span) {
  for (int s : span)
    if (C.morphisms[s].dom != X) throw std::invalid_argument("wide_pushout: span arrows must share the domain");

  if (span.empty()) {
    PushoutResult res{X, {}, C.identity[X]};
    return res;  // colimit of the one-object diagram
  }

  size_t m = span.size();
  for (int P = 0; P < C.object_count(); ++P) {
    std::optional<PushoutResult> found;
    for_each_cocone(C, X, span, P, [&](int t, const std::vector<int>& tuple) {
      PushoutResult cand{P, tuple, t};
      if (universal(C, X, span, cand)) {
        found = cand;
        return false;  // first verified candidate wins
      }
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace fincat
