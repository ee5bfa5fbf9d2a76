#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "carmen/game.hpp"
#include "carmen/kset.hpp"
#include "carmen/rational.hpp"
#include "carmen/strategy.hpp"

namespace carmen {

// A depth-t adaptive query tree on n input bits. Nodes live in an arena with
// the root at index 0; validation rejects repeated queries on a path, paths
// longer than t, out-of-range indices and unreachable nodes.
class DecisionTree {
 public:
  struct Node {
    int query = 0;  // 1-based input index; 0 for leaves
    int if0 = -1;
    int if1 = -1;
    int leaf = -1;  // output bit for leaves, -1 otherwise
    bool is_leaf() const { return leaf >= 0; }
  };

  DecisionTree(int n, int t, std::vector<Node> nodes);

  static DecisionTree make_leaf(int n, int output);
  // Queries 1..n in order and outputs the XOR of everything seen.
  static DecisionTree parity_tree(int n);

  int n() const { return n_; }
  int t() const { return t_; }
  int depth() const { return depth_; }
  const std::vector<Node>& nodes() const { return nodes_; }

  struct Trace {
    std::vector<int> visits;  // queried indices, root-to-leaf order
    int output = 0;
  };

  Trace run(std::uint32_t code) const;
  Trace run(const ClueString& b) const;

  int output_on(std::uint32_t code) const;                 // no visit bookkeeping
  bool visits_city(std::uint32_t code, int city) const;

 private:
  int n_;
  int t_;
  int depth_;
  std::vector<Node> nodes_;
};

// A finite mixture of depth-t decision trees with exact rational weights.
class RandomizedAlgorithm {
 public:
  struct Atom {
    DecisionTree tree;
    Rat p;
  };

  explicit RandomizedAlgorithm(std::vector<Atom> atoms);

  int n() const { return n_; }
  int t() const { return t_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

 private:
  int n_;
  int t_;  // max depth bound over atoms
  std::vector<Atom> atoms_;
};

// Pr over uniform (pi, z) and the tree mixture of [pi(n) in VISITS on b(pi,z)].
Rat search_success_probability(const RandomizedAlgorithm& alg,
                               const BobStrategy& strategy,
                               int cap = kSuspectCap, int workers = 1);

struct McEstimate {
  double estimate = 0.0;
  double half_width_95 = 0.0;  // 1.96 * sqrt(p(1-p)/N)
  std::uint64_t samples = 0;
  std::uint64_t successes = 0;
};

// Seeded Monte Carlo fallback for n beyond the exact cap. Never used to assert
// theorem inequalities.
McEstimate search_success_probability_mc(const RandomizedAlgorithm& alg,
                                         const BobStrategy& strategy,
                                         std::uint64_t samples, std::uint64_t seed);

// K = { y : Pr[alg(y) = PAR(y)] >= 2/3 }, with the closed threshold compared
// in exact rationals.
KSet parity_success_set(const RandomizedAlgorithm& alg, int cap = kParityEnumCap);

// The parity-to-search reduction harness. When the premise |K| > 2^(n-1)
// holds, plays the K-halving strategy against alg and checks, over the full
// (atom, pi, z) enumeration:
//   - search success probability >= 1/3 (exact)
//   - the paired strings b = b(pi,z), b' = b(pi,z#) have equal correctness
//     probability (flip-pairing identity)
//   - pointwise, 1[correct on b] + 1[correct on b'] <= 1 + 1[search-successful on b]
struct ReductionReport {
  int n = 0;
  int t = 0;
  std::uint64_t k_size = 0;
  bool premise = false;
  KSet k;
  Rat search_success;   // meaningful when premise holds
  Rat parity_success;   // Pr[alg output = PAR] on the realized distribution
  bool eq_pairing_ok = false;    // flip-pairing identity
  bool eq_indicator_ok = false;  // pointwise indicator inequality
  bool pass() const {
    return premise && eq_pairing_ok && eq_indicator_ok && search_success >= Rat(1, 3);
  }
};

ReductionReport parity_reduction(const RandomizedAlgorithm& alg,
                                 int cap = kSuspectCap, int workers = 1);

// Candidate hard distribution: the law of b(pi, z) under uniform (pi, z) and
// the K-halving strategy; supported entirely on K.
struct HardDistribution {
  int n = 0;
  std::uint64_t total = 0;                      // 2 * n!
  std::map<std::uint32_t, std::uint64_t> counts;
};

HardDistribution hard_distribution_exact(const KSet& k, int cap = kSuspectCap,
                                         int workers = 1);

// `count` seeded samples; every returned string is a member of K.
std::vector<ClueString> hard_distribution_sample(const KSet& k, std::uint64_t seed,
                                                 std::size_t count);

}  // namespace carmen
