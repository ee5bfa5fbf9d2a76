#pragma once

#include "carmen/game.hpp"
#include "carmen/rational.hpp"

namespace carmen {

// Exact joint/conditional law of (b, pi(n)) under uniform (pi, z). Counts are
// exact integers over a denominator of 2 * n!; each row's final_counts is
// supported exactly on the suspect set of its b.
struct PosteriorTable {
  int n = 0;
  std::uint64_t total = 0;  // 2 * n!
  OutcomeTable rows;

  Rat row_probability(const OutcomeRow& row) const {
    return Rat(row.count, total);
  }
};

PosteriorTable posterior_table(const BobStrategy& strategy, int cap = kEntropyCap,
                               int workers = 1);

// H(pi(n) | b) in bits, evaluated from the exact posterior counts.
double conditional_entropy_bits(const PosteriorTable& table);
double conditional_entropy(const BobStrategy& strategy, int cap = kEntropyCap,
                           int workers = 1);

}  // namespace carmen
