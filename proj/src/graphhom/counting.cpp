#include "graphhom/counting.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <string>

namespace graphhom {

namespace {

uint64_t hom_via(HomMemo* memo, const Graph& X, const Graph& A) {
  return memo ? memo->hom(X, A) : hom_count(X, A);
}

}  // namespace

uint64_t inj_via_inclusion_exclusion(const Graph& X, const Graph& A, HomMemo* memo) {
  if (X.directed != A.directed) throw std::invalid_argument("directedness mismatch between source and target");
  auto merges = maximal_quotients(X);
  int m = static_cast<int>(merges.size());
  if (m > 25) throw std::invalid_argument("source too large for subset inclusion-exclusion");
  // net signed multiplicity per distinct join partition
  std::map<std::string, std::pair<VertexPartition, long long>> coeff;
  for (uint32_t mask = 1; mask < (uint32_t(1) << m); ++mask) {
    VertexPartition join = VertexPartition::discrete(X.n);
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1u) join = partition_join(join, merges[i]);
    long long sign = (std::popcount(mask) % 2 == 0) ? 1 : -1;
    auto [it, inserted] = coeff.try_emplace(partition_key(join), join, sign);
    if (!inserted) it->second.second += sign;
  }
  long long total = static_cast<long long>(hom_via(memo, X, A));
  for (auto& [key, entry] : coeff) {
    if (entry.second == 0) continue;
    total += entry.second * static_cast<long long>(hom_via(memo, quotient(X, entry.first), A));
  }
  if (total < 0) throw std::logic_error("inclusion-exclusion produced a negative count");
  return static_cast<uint64_t>(total);
}

uint64_t inj_via_mobius(const Graph& X, const Graph& A, HomMemo* memo) {
  if (X.directed != A.directed) throw std::invalid_argument("directedness mismatch between source and target");
  long long total = 0;
  for (const auto& p : all_partitions(X.n))
    total += mobius_partition(p) * static_cast<long long>(hom_via(memo, quotient(X, p), A));
  if (total < 0) throw std::logic_error("Mobius inversion produced a negative count");
  return static_cast<uint64_t>(total);
}

PultrGraphReport pultr_identity_graphs(const Graph& A, const Graph& B) {
  if (A.directed != B.directed) throw std::invalid_argument("directedness mismatch between source and target");
  PultrGraphReport report;
  report.hom_total = hom_count(A, B);
  std::map<CanonicalKey, Graph> classes;
  for (const auto& p : all_partitions(A.n)) {
    Graph q = quotient(A, p);
    classes.emplace(canonical_form(q), q);
  }
  for (auto& [key, T] : classes) {
    PultrTerm term;
    term.key = key;
    term.extr = extremal_epi_count(A, T);
    term.mono = inj_count_direct(T, B);
    term.aut = aut_count(T);
    uint64_t num = term.extr * term.mono;
    if (num % term.aut != 0)
      throw std::logic_error("non-exact division in hom decomposition at class " + key);
    term.contribution = num / term.aut;
    report.sum += term.contribution;
    report.terms.push_back(std::move(term));
  }
  return report;
}

HomProfile hom_profile(const Graph& A, int max_size, HomMemo* memo) {
  if (max_size < 1) throw std::invalid_argument("hom_profile: max_size must be >= 1");
  HomProfile profile;
  profile.max_size = max_size;
  for (const Graph& X : all_graphs_up_to_iso(max_size, A.directed))
    profile.entries.emplace_back(canonical_form(X), hom_via(memo, X, A));
  return profile;
}

DistinguishResult distinguish(const Graph& A, const Graph& B, int max_size, HomMemo* memo) {
  if (A.directed != B.directed) throw std::invalid_argument("directedness mismatch between the two graphs");
  if (max_size < 1) throw std::invalid_argument("distinguish: max_size must be >= 1");
  DistinguishResult result;
  for (const Graph& X : all_graphs_up_to_iso(max_size, A.directed)) {
    uint64_t ca = hom_via(memo, X, A);
    uint64_t cb = hom_via(memo, X, B);
    if (ca != cb) {
      result.distinguished = true;
      result.witness = X;
      result.witness_key = canonical_form(X);
      result.count_a = ca;
      result.count_b = cb;
      return result;
    }
  }
  return result;
}

}  // namespace graphhom
