#include "graphhom/homcount.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "graphhom/canonical.hpp"

namespace graphhom {

namespace {

enum class Mode { Hom, Inj, Surj, Extremal };

// Assignment order and per-position constraint masks for the source graph.
struct Plan {
  int n = 0;
  std::vector<int> order;      // position -> source vertex
  std::vector<uint32_t> succ;  // positions p<i with edge order[i] -> order[p]
  std::vector<uint32_t> pred;  // positions p<i with edge order[p] -> order[i]
  std::vector<char> loop;
  std::vector<std::pair<int, int>> edges_by_pos;  // X edges as (position,position)
};

Plan make_plan(const Graph& X) {
  Plan plan;
  plan.n = X.n;
  std::vector<char> placed(X.n, 0);
  std::vector<int> pos_of(X.n, -1);
  for (int k = 0; k < X.n; ++k) {
    int best = -1;
    bool best_touch = false;
    for (int v = 0; v < X.n; ++v) {
      if (placed[v]) continue;
      bool touch = false;
      for (int u = 0; u < X.n; ++u)
        if (placed[u] && (X.has_edge(u, v) || X.has_edge(v, u))) { touch = true; break; }
      if (best < 0 || std::pair(touch, X.degree(v)) > std::pair(best_touch, X.degree(best))) {
        best = v;
        best_touch = touch;
      }
    }
    placed[best] = 1;
    pos_of[best] = k;
    plan.order.push_back(best);
  }
  plan.succ.assign(X.n, 0);
  plan.pred.assign(X.n, 0);
  plan.loop.assign(X.n, 0);
  for (int i = 0; i < X.n; ++i) {
    int v = plan.order[i];
    plan.loop[i] = X.has_edge(v, v);
    for (int p = 0; p < i; ++p) {
      int u = plan.order[p];
      if (X.has_edge(v, u)) plan.succ[i] |= uint32_t(1) << p;
      if (X.has_edge(u, v)) plan.pred[i] |= uint32_t(1) << p;
    }
  }
  for (auto [u, v] : X.edges()) plan.edges_by_pos.emplace_back(pos_of[u], pos_of[v]);
  return plan;
}

struct Kernel {
  const Plan& plan;
  const Graph& A;
  Mode mode;
  uint32_t target_full;
  uint32_t target_loops;
  // target edge index for the Extremal leaf check
  std::vector<int> edge_id;  // A.n*A.n slots, -1 when absent
  int target_edge_count = 0;

  Kernel(const Plan& plan_, const Graph& A_, Mode mode_)
      : plan(plan_), A(A_), mode(mode_), target_full(A_.full_mask()), target_loops(A_.loop_mask()) {
    if (mode == Mode::Extremal) {
      edge_id.assign(size_t(A.n) * std::max(A.n, 1), -1);
      for (auto [u, v] : A.edges()) edge_id[size_t(u) * A.n + v] = target_edge_count++;
    }
  }

  uint32_t allowed_at(int i, const std::vector<int>& img) const {
    uint32_t allowed = target_full;
    uint32_t s = plan.succ[i], p = plan.pred[i];
    while (s) {
      int q = std::countr_zero(s);
      s &= s - 1;
      allowed &= A.in[img[q]];
    }
    while (p) {
      int q = std::countr_zero(p);
      p &= p - 1;
      allowed &= A.out[img[q]];
    }
    if (plan.loop[i]) allowed &= target_loops;
    return allowed;
  }

  bool leaf_ok(const std::vector<int>& img, uint32_t covered) const {
    if (mode == Mode::Surj || mode == Mode::Extremal) {
      if (covered != target_full) return false;
    }
    if (mode == Mode::Extremal) {
      uint64_t hit = 0;
      for (auto [pu, pv] : plan.edges_by_pos) hit |= uint64_t(1) << edge_id[size_t(img[pu]) * A.n + img[pv]];
      if (std::popcount(hit) != target_edge_count) return false;
    }
    return true;
  }

  uint64_t count_from(int i, std::vector<int>& img, uint32_t used, uint32_t covered) const {
    if (i == plan.n) return leaf_ok(img, covered) ? 1 : 0;
    // surjectivity cannot be recovered once too few positions remain
    if ((mode == Mode::Surj || mode == Mode::Extremal) &&
        plan.n - i < std::popcount(target_full & ~covered))
      return 0;
    uint32_t allowed = allowed_at(i, img);
    if (mode == Mode::Inj) allowed &= ~used;
    uint64_t total = 0;
    while (allowed) {
      int w = std::countr_zero(allowed);
      allowed &= allowed - 1;
      img[i] = w;
      total += count_from(i + 1, img, used | (uint32_t(1) << w), covered | (uint32_t(1) << w));
    }
    return total;
  }

  uint64_t run_serial() const {
    if (plan.n == 0) return leaf_ok({}, 0) ? 1 : 0;
    std::vector<int> img(plan.n, -1);
    return count_from(0, img, 0, 0);
  }

  uint64_t run_parallel() const {
    if (plan.n == 0) return run_serial();
    uint32_t allowed0 = allowed_at(0, std::vector<int>(plan.n, -1));
    uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (int w = 0; w < A.n; ++w) {
      if (!((allowed0 >> w) & 1u)) continue;
      std::vector<int> img(plan.n, -1);
      img[0] = w;
      total += count_from(1, img, uint32_t(1) << w, uint32_t(1) << w);
    }
    return total;
  }
};

uint64_t run(const Graph& X, const Graph& A, Mode mode, bool parallel) {
  if (X.directed != A.directed) throw std::invalid_argument("directedness mismatch between source and target");
  if (mode == Mode::Inj && X.n > A.n) return 0;
  if ((mode == Mode::Surj || mode == Mode::Extremal) && X.n < A.n) return 0;
  Plan plan = make_plan(X);
  Kernel k(plan, A, mode);
  if (mode == Mode::Extremal && k.target_edge_count > 64) throw std::invalid_argument("target too large for extremal count");
  // tiny searches are not worth a parallel region
  bool big = X.n >= 5 && A.n >= 4 && std::pow(double(A.n), double(X.n)) >= 65536.0;
  return (parallel && big) ? k.run_parallel() : k.run_serial();
}

}  // namespace

uint64_t hom_count(const Graph& X, const Graph& A) { return run(X, A, Mode::Hom, true); }
uint64_t hom_count_serial(const Graph& X, const Graph& A) { return run(X, A, Mode::Hom, false); }
uint64_t inj_count_direct(const Graph& X, const Graph& A) { return run(X, A, Mode::Inj, true); }
uint64_t inj_count_direct_serial(const Graph& X, const Graph& A) { return run(X, A, Mode::Inj, false); }
uint64_t surj_count(const Graph& X, const Graph& A) { return run(X, A, Mode::Surj, true); }
uint64_t aut_count(const Graph& A) { return inj_count_direct(A, A); }
uint64_t extremal_epi_count(const Graph& X, const Graph& T) { return run(X, T, Mode::Extremal, true); }

uint64_t HomMemo::hom(const Graph& X, const Graph& A) {
  std::string key = canonical_form(X) + ">" + canonical_form(A);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
  }
  uint64_t value = hom_count(X, A);
  std::lock_guard<std::mutex> lock(mu_);
  table_.emplace(key, value);
  return value;
}

}  // namespace graphhom
