// Compares the serial reference kernels against the OpenMP ones and checks
// that both routes produce identical counts while they are at it.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fincat/builders.hpp"
#include "fincat/predicates.hpp"
#include "graphhom/counting.hpp"

using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

static graphhom::Graph random_graph(int n, double p, std::mt19937& rng) {
  graphhom::Graph g(n, false);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP: disabled\n");
#endif
  std::mt19937 rng(20240811);

  std::printf("\n%-44s %12s %12s %8s\n", "kernel", "serial ms", "parallel ms", "speedup");

  {
    auto X = random_graph(9, 0.45, rng);
    auto A = random_graph(11, 0.55, rng);
    auto t0 = Clock::now();
    uint64_t s = graphhom::hom_count_serial(X, A);
    double ts = ms_since(t0);
    t0 = Clock::now();
    uint64_t p = graphhom::hom_count(X, A);
    double tp = ms_since(t0);
    if (s != p) { std::printf("hom_count mismatch!\n"); return 1; }
    std::printf("%-44s %12.1f %12.1f %7.2fx\n", "hom_count  9-vertex -> 11-vertex", ts, tp, ts / tp);
  }
  {
    auto X = random_graph(10, 0.5, rng);
    auto A = random_graph(10, 0.5, rng);
    auto t0 = Clock::now();
    uint64_t s = graphhom::inj_count_direct_serial(X, A);
    double ts = ms_since(t0);
    t0 = Clock::now();
    uint64_t p = graphhom::inj_count_direct(X, A);
    double tp = ms_since(t0);
    if (s != p) { std::printf("inj_count mismatch!\n"); return 1; }
    std::printf("%-44s %12.1f %12.1f %7.2fx\n", "inj_count  10-vertex -> 10-vertex", ts, tp, ts / tp);
  }
  {
    auto C = fincat::build_group_category(8);
    std::printf("\ngroups catalog <= 8: %d objects, %d morphisms\n", C.object_count(), C.morphism_count());
    auto t0 = Clock::now();
    auto report = fincat::validate(C);
    double tv = ms_since(t0);
    std::printf("%-44s %12s %12.1f\n", "validate (associativity sweep, parallel)", "-", tv);
    if (!report.ok()) { std::printf("validate failed!\n"); return 1; }
    t0 = Clock::now();
    auto m = fincat::mono_flags(C);
    auto e = fincat::epi_flags(C);
    double tf = ms_since(t0);
    int monos = 0, epis = 0;
    for (int f = 0; f < C.morphism_count(); ++f) { monos += m[f]; epis += e[f]; }
    std::printf("%-44s %12s %12.1f    (%d monos, %d epis)\n", "mono/epi flags (parallel)", "-", tf, monos, epis);
  }
  return 0;
}
