#include "carmen/entropy.hpp"

#include <cmath>

namespace carmen {

PosteriorTable posterior_table(const BobStrategy& strategy, int cap, int workers) {
  const int n = strategy.n();
  if (n > cap)
    throw cap_exceeded("posterior_table: exact enumeration capped at n <= " +
                       std::to_string(cap) + " (got n=" + std::to_string(n) +
                       "); no sampled fallback exists for the posterior");
  PosteriorTable t;
  t.n = n;
  t.total = 2 * factorial(n);
  t.rows = outcome_table(strategy, cap, workers);
  return t;
}

double conditional_entropy_bits(const PosteriorTable& table) {
  // H(pi(n) | b) = sum_b P(b) H(pi(n) | b = b), from exact counts:
  // each (b, i) cell contributes (c_bi / N) * log2(c_b / c_bi).
  const auto N = static_cast<double>(table.total);
  double h = 0.0;
  for (const auto& [code, row] : table.rows) {
    const auto cb = static_cast<double>(row.count);
    for (const auto& [city, c] : row.final_counts)
      h += (static_cast<double>(c) / N) * std::log2(cb / static_cast<double>(c));
  }
  return h;
}

double conditional_entropy(const BobStrategy& strategy, int cap, int workers) {
  return conditional_entropy_bits(posterior_table(strategy, cap, workers));
}

}  // namespace carmen
