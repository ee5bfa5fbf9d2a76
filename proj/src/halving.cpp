#include "carmen/halving.hpp"

#include <algorithm>

#include "carmen/parallel.hpp"

namespace carmen {

BobStrategy k_halving_strategy(const KSet& k) { return BobStrategy::halving(k); }

namespace {

struct CheckState {
  bool halving_invariant = true;
  bool endgame_pair = true;
  bool final_in_k = true;
  std::uint64_t fail_rank = UINT64_MAX;
  std::string fail_check;
  std::string fail_detail;

  void record(std::uint64_t rank, const std::string& check, const std::string& detail) {
    if (rank < fail_rank) {
      fail_rank = rank;
      fail_check = check;
      fail_detail = detail;
    }
  }
};

}  // namespace

HalvingReport verify_halving(const KSet& k, int cap, int workers) {
  const int n = k.n();
  const BobStrategy strategy = k_halving_strategy(k);  // throws unless |K| > 2^(n-1)

  HalvingReport r;
  r.n = n;
  r.k_size = k.size();
  r.max_degree = max_induced_degree(k, workers).max_degree;

  const ComplexityResult compl = strategy_complexity(strategy, cap, workers);
  r.complexity = compl.complexity;
  r.complexity_witness_pi = compl.witness_pi;
  r.complexity_witness_z = compl.witness_z;
  r.complexity_le_degree = compl.complexity <= r.max_degree;

  // per-(pi, z) replay: halving counts, endgame pair size, membership of b
  auto chunk = [&](std::uint64_t b, std::uint64_t e) {
    CheckState st;
    for_each_permutation(n, b, e, [&](std::uint64_t rank, const Permutation& pi) {
      for (int z = 0; z < 2; ++z) {
        const std::uint64_t outcome_rank = 2 * rank + static_cast<std::uint64_t>(z);
        RestrictionCounter rc(k);
        ClueString bstr{n, 0};
        for (int t = 1; t < n; ++t) {
          const int city = pi.at(t);
          const std::uint64_t c0 = rc.count_with(city, 0);
          const int u = (rc.count() - c0) > c0 ? 1 : 0;
          rc.refine(city, u);
          if (u) bstr.code |= 1u << (city - 1);
          if (!(rc.count() > (std::uint64_t{1} << (n - 1 - t)))) {
            st.halving_invariant = false;
            st.record(outcome_rank, "halving_invariant",
                      "|K(w^" + std::to_string(t) + ")| = " + std::to_string(rc.count()));
          }
        }
        if (rc.count() != 2) {
          st.endgame_pair = false;
          st.record(outcome_rank, "endgame_pair",
                    "|K(w^(n-1))| = " + std::to_string(rc.count()));
        }
        if (z) bstr.code |= 1u << (pi.final_city() - 1);
        if (!k.contains(bstr.code)) {
          st.final_in_k = false;
          st.record(outcome_rank, "final_in_k", "b = " + bstr.str() + " not in K");
        }
      }
    });
    return st;
  };
  auto combine = [](CheckState a, CheckState b) {
    a.halving_invariant &= b.halving_invariant;
    a.endgame_pair &= b.endgame_pair;
    a.final_in_k &= b.final_in_k;
    if (b.fail_rank < a.fail_rank) {
      a.fail_rank = b.fail_rank;
      a.fail_check = b.fail_check;
      a.fail_detail = b.fail_detail;
    }
    return a;
  };
  CheckState st = parallel_reduce(factorial(n), workers, CheckState{}, chunk, combine);

  r.halving_invariant = st.halving_invariant;
  r.endgame_pair = st.endgame_pair;
  r.final_in_k = st.final_in_k;

  // suspects map to distinct K-neighbors of each realized b
  r.suspects_are_neighbors = true;
  for (const auto& [code, row] : outcome_table(strategy, cap, workers)) {
    for (const auto& [city, cnt] : row.final_counts) {
      if (!k.contains(code ^ (1u << (city - 1)))) {
        r.suspects_are_neighbors = false;
        if (row.first_rank < st.fail_rank) {
          st.fail_rank = row.first_rank;
          st.fail_check = "suspects_are_neighbors";
          st.fail_detail = "b = " + ClueString{n, code}.str() + ", suspect " +
                           std::to_string(city) + " flips outside K";
        }
      }
    }
  }
  if (!r.complexity_le_degree && st.fail_rank == UINT64_MAX) {
    st.fail_rank = 2 * compl.witness_pi.rank() + static_cast<std::uint64_t>(compl.witness_z);
    st.fail_check = "complexity_le_degree";
    st.fail_detail = "complexity " + std::to_string(r.complexity) + " > D = " +
                     std::to_string(r.max_degree);
  }

  if (!r.pass()) {
    HalvingCounterexample ce;
    ce.pi = Permutation::from_rank(n, st.fail_rank / 2);
    ce.z = static_cast<int>(st.fail_rank % 2);
    ce.check = st.fail_check;
    ce.detail = st.fail_detail;
    r.counterexample = std::move(ce);
  }
  return r;
}

}  // namespace carmen
