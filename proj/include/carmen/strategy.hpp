#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "carmen/kset.hpp"
#include "carmen/types.hpp"

namespace carmen {

// Bob's clue rules (F_1, ..., F_{n-1}). Two representations:
//   * Table: one lookup table per step t, keyed by the ordered prefix
//     (pi(1), ..., pi(t)). Ground truth for exhaustive minimization.
//   * KHalving: the count-maximizing rule over a fixed K with |K| > 2^(n-1);
//     the step-t decision is a function of (w^(t-1), pi(t)) only, evaluated by
//     replay, ties broken to 0.
class BobStrategy {
 public:
  enum class Kind { Table, KHalving };

  using Prefix = std::vector<int>;
  using Table = std::map<Prefix, std::uint8_t>;

  static BobStrategy table_strategy(int n, std::vector<Table> tables);
  static BobStrategy constant(int n, int bit);
  static BobStrategy halving(KSet k);  // throws premise_not_met unless |K| > 2^(n-1)

  // Materializes a table strategy from a memoryless rule (w^(t-1), position) -> bit.
  static BobStrategy from_memoryless(
      int n, const std::function<int(const PartialClue&, int)>& rule);

  int n() const { return n_; }
  Kind kind() const { return kind_; }
  const std::vector<Table>& tables() const;  // Table kind only
  const KSet& kset() const;                  // KHalving kind only

  // F_t on pi(1..t) = prefix; t = prefix.size() in [1, n-1].
  int clue_bit(std::span<const int> prefix) const;

  // b(pi, z): coordinate pi(t) carries F_t for t < n, coordinate pi(n) carries z.
  ClueString clue_string(const Permutation& pi, int z) const;

  BobStrategy to_table() const;
  // Conjugates city labels by sigma; leaves game statistics invariant.
  BobStrategy relabel(const Permutation& sigma) const;

 private:
  BobStrategy(int n, Kind kind) : n_(n), kind_(kind) {}

  int n_;
  Kind kind_;
  std::vector<Table> tables_;    // Table kind: tables_[t-1]
  std::shared_ptr<KSet> kset_;   // KHalving kind
};

// Canonical table-entry order for strategy enumeration and serialization:
// (t ascending, prefix lexicographic). Returned as (t, prefix) pairs.
std::vector<std::pair<int, BobStrategy::Prefix>> table_entries(int n);

// The strategy whose entry j (in table_entries order, m entries total) outputs
// bit (index >> (m-1-j)) & 1, so ascending index is lexicographic order of the
// concatenated bit strings.
BobStrategy strategy_from_index(int n, std::uint64_t index);
std::uint64_t strategy_table_bits(int n);  // m

}  // namespace carmen
