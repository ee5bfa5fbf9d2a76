#include "carmen/game.hpp"

#include <algorithm>

#include "carmen/parallel.hpp"

namespace carmen {

namespace {

void check_cap(int n, int cap, const char* op) {
  if (n > cap)
    throw cap_exceeded(std::string(op) + ": exhaustive enumeration capped at n <= " +
                       std::to_string(cap) + " (got n=" + std::to_string(n) + ")");
}

void merge_row(OutcomeRow& into, const OutcomeRow& from) {
  into.count += from.count;
  into.first_rank = std::min(into.first_rank, from.first_rank);
  for (auto [city, c] : from.final_counts) into.final_counts[city] += c;
}

}  // namespace

ClueString clue_string(const BobStrategy& strategy, const Permutation& pi, int z) {
  return strategy.clue_string(pi, z);
}

std::vector<int> suspect_set(const BobStrategy& strategy, const ClueString& b, int cap) {
  const int n = strategy.n();
  if (b.n != n) throw input_error("suspect_set: dimension mismatch");
  check_cap(n, cap, "suspect_set");
  std::uint32_t cities = 0;
  for_each_permutation(n, 0, factorial(n), [&](std::uint64_t, const Permutation& rho) {
    for (int u = 0; u < 2; ++u)
      if (strategy.clue_string(rho, u) == b) cities |= 1u << (rho.final_city() - 1);
  });
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if ((cities >> (i - 1)) & 1u) out.push_back(i);
  return out;
}

std::map<int, std::pair<Permutation, int>> suspect_witnesses(const BobStrategy& strategy,
                                                             const ClueString& b, int cap) {
  const int n = strategy.n();
  if (b.n != n) throw input_error("suspect_witnesses: dimension mismatch");
  check_cap(n, cap, "suspect_witnesses");
  std::map<int, std::pair<Permutation, int>> out;
  for_each_permutation(n, 0, factorial(n), [&](std::uint64_t, const Permutation& rho) {
    for (int u = 0; u < 2; ++u)
      if (strategy.clue_string(rho, u) == b) out.try_emplace(rho.final_city(), rho, u);
  });
  return out;
}

OutcomeTable outcome_table(const BobStrategy& strategy, int cap, int workers) {
  const int n = strategy.n();
  check_cap(n, cap, "outcome_table");
  const std::uint64_t nperm = factorial(n);

  auto chunk = [&](std::uint64_t b, std::uint64_t e) {
    OutcomeTable part;
    for_each_permutation(n, b, e, [&](std::uint64_t rank, const Permutation& pi) {
      for (int z = 0; z < 2; ++z) {
        const ClueString s = strategy.clue_string(pi, z);
        OutcomeRow& row = part[s.code];
        ++row.count;
        ++row.final_counts[pi.final_city()];
        row.first_rank = std::min(row.first_rank, 2 * rank + static_cast<std::uint64_t>(z));
      }
    });
    return part;
  };
  auto combine = [](OutcomeTable a, OutcomeTable b) {
    for (auto& [code, row] : b) merge_row(a[code], row);
    return a;
  };
  return parallel_reduce(nperm, workers, OutcomeTable{}, chunk, combine);
}

ComplexityResult strategy_complexity(const BobStrategy& strategy, int cap, int workers) {
  const OutcomeTable table = outcome_table(strategy, cap, workers);
  int best = 0;
  std::uint64_t witness_rank = UINT64_MAX;
  for (const auto& [code, row] : table) {
    const int cost = static_cast<int>(row.final_counts.size());
    if (cost > best) {
      best = cost;
      witness_rank = row.first_rank;
    } else if (cost == best) {
      witness_rank = std::min(witness_rank, row.first_rank);
    }
  }
  ComplexityResult r;
  r.n = strategy.n();
  r.complexity = best;
  r.witness_pi = Permutation::from_rank(strategy.n(), witness_rank / 2);
  r.witness_z = static_cast<int>(witness_rank % 2);
  return r;
}

GameValue exact_game_complexity(int n, int cap, int workers) {
  if (n < 2) throw input_error("exact_game_complexity: need n > 1");
  if (n > cap)
    throw cap_exceeded(
        "exact_game_complexity: table-strategy space is doubly exponential; capped at n <= " +
        std::to_string(cap) + " (got n=" + std::to_string(n) + ")");

  const std::uint64_t m = strategy_table_bits(n);
  const std::uint64_t total = std::uint64_t{1} << m;

  struct Part {
    int best = INT32_MAX;
    std::uint64_t witness = UINT64_MAX;
  };
  auto chunk = [&](std::uint64_t b, std::uint64_t e) {
    Part p;
    for (std::uint64_t idx = b; idx < e; ++idx) {
      const BobStrategy s = strategy_from_index(n, idx);
      const int c = strategy_complexity(s, n).complexity;
      if (c < p.best) {
        p.best = c;
        p.witness = idx;
      }
    }
    return p;
  };
  auto combine = [](Part a, Part b) {
    if (b.best < a.best || (b.best == a.best && b.witness < a.witness)) return b;
    return a;
  };
  const Part p = parallel_reduce(total, workers, Part{}, chunk, combine);

  GameValue v;
  v.n = n;
  v.complexity = p.best;
  v.witness_index = p.witness;
  v.strategies_examined = total;
  v.witness = strategy_from_index(n, p.witness);
  return v;
}

GameOutcome run_game(const BobStrategy& strategy, const Permutation& pi, int z, int cap) {
  pi.validate();
  GameOutcome o;
  o.pi = pi;
  o.z = z;
  o.b = strategy.clue_string(pi, z);
  o.suspects = suspect_set(strategy, o.b, cap);
  o.cost = static_cast<int>(o.suspects.size());
  return o;
}

}  // namespace carmen
