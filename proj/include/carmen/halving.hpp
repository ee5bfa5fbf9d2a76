#pragma once

#include <optional>
#include <string>

#include "carmen/game.hpp"
#include "carmen/kset.hpp"
#include "carmen/strategy.hpp"

namespace carmen {

// The count-maximizing strategy built from K; requires |K| > 2^(n-1).
BobStrategy k_halving_strategy(const KSet& k);

struct HalvingCounterexample {
  Permutation pi;
  int z = 0;
  std::string check;   // which assertion failed
  std::string detail;
};

// Full verification of the degree-bound construction over every (pi, z):
//   (a) exact strategy complexity <= D = max induced degree of K
//   (b) |K(w^t)| > 2^(n-1-t) for every t in [1, n-1]
//   (c) |K(w^(n-1))| = 2
//   (d) the realized b is a member of K
//   (e) every suspect city flips b to another member of K
struct HalvingReport {
  int n = 0;
  std::uint64_t k_size = 0;
  int max_degree = 0;  // D
  int complexity = 0;
  Permutation complexity_witness_pi;
  int complexity_witness_z = 0;
  bool complexity_le_degree = false;
  bool halving_invariant = false;
  bool endgame_pair = false;
  bool final_in_k = false;
  bool suspects_are_neighbors = false;
  std::optional<HalvingCounterexample> counterexample;  // lexicographically first

  bool pass() const {
    return complexity_le_degree && halving_invariant && endgame_pair &&
           final_in_k && suspects_are_neighbors;
  }
};

HalvingReport verify_halving(const KSet& k, int cap = kSuspectCap, int workers = 1);

}  // namespace carmen
