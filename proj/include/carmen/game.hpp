#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "carmen/errors.hpp"
#include "carmen/strategy.hpp"
#include "carmen/types.hpp"

namespace carmen {

ClueString clue_string(const BobStrategy& strategy, const Permutation& pi, int z);

// Exact suspect set of b: all final cities i admitting some (rho, u) with
// b(rho, u) = b and rho(n) = i. Brute force over all n! * 2 pairs; empty for
// unreachable b. Sorted ascending.
std::vector<int> suspect_set(const BobStrategy& strategy, const ClueString& b,
                             int cap = kSuspectCap);

// Same enumeration, additionally keeping the first witness (rho, u) per city.
std::map<int, std::pair<Permutation, int>> suspect_witnesses(
    const BobStrategy& strategy, const ClueString& b, int cap = kSuspectCap);

// One row of the full outcome enumeration, grouped by realized clue string.
struct OutcomeRow {
  std::uint64_t count = 0;                       // #(pi, z) producing this b
  std::map<int, std::uint64_t> final_counts;     // final city -> count
  std::uint64_t first_rank = UINT64_MAX;         // min over producers of 2*rank(pi)+z
};

// Keyed by b's integer code. The per-row final_counts keys are exactly the
// suspect set of that (reachable) b.
using OutcomeTable = std::map<std::uint32_t, OutcomeRow>;

OutcomeTable outcome_table(const BobStrategy& strategy, int cap = kSuspectCap,
                           int workers = 1);

struct ComplexityResult {
  int n = 0;
  int complexity = 0;
  Permutation witness_pi;  // first (pi, z) in enumeration order attaining the max
  int witness_z = 0;
};

// max over (pi, z) of |suspect_set(b(pi, z))|.
ComplexityResult strategy_complexity(const BobStrategy& strategy,
                                     int cap = kSuspectCap, int workers = 1);

struct GameValue {
  int n = 0;
  int complexity = 0;
  std::uint64_t witness_index = 0;  // lexicographically first optimal table
  std::uint64_t strategies_examined = 0;
  std::optional<BobStrategy> witness;
};

// min over all table strategies of strategy_complexity. Doubly exponential;
// n <= cap (default 3).
GameValue exact_game_complexity(int n, int cap = kExactMinCap, int workers = 1);

struct GameOutcome {
  Permutation pi;
  int z = 0;
  ClueString b;
  std::vector<int> suspects;
  int cost = 0;
};

GameOutcome run_game(const BobStrategy& strategy, const Permutation& pi, int z,
                     int cap = kSuspectCap);

}  // namespace carmen
