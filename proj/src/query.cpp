#include "carmen/query.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "carmen/halving.hpp"
#include "carmen/parallel.hpp"
#include "carmen/rng.hpp"

namespace carmen {

DecisionTree::DecisionTree(int n, int t, std::vector<Node> nodes)
    : n_(n), t_(t), depth_(0), nodes_(std::move(nodes)) {
  if (n < 1 || n > 31) throw input_error("tree: n out of range");
  if (t < 0 || t > n) throw input_error("tree: depth bound t out of [0, n]");
  if (nodes_.empty()) throw input_error("tree: no nodes");

  // DFS from the root; every node must be reachable exactly once, queries may
  // not repeat along a path, and no path may exceed t queries.
  std::vector<char> seen(nodes_.size(), 0);
  struct Frame {
    int node;
    int depth;
    std::uint32_t used;
  };
  std::vector<Frame> stack{{0, 0, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.node < 0 || f.node >= static_cast<int>(nodes_.size()))
      throw input_error("tree: child index out of range");
    if (seen[static_cast<std::size_t>(f.node)]) throw input_error("tree: node shared or cyclic");
    seen[static_cast<std::size_t>(f.node)] = 1;
    const Node& node = nodes_[static_cast<std::size_t>(f.node)];
    if (node.is_leaf()) {
      if (node.leaf > 1) throw input_error("tree: leaf output must be 0 or 1");
      depth_ = std::max(depth_, f.depth);
      continue;
    }
    if (node.query < 1 || node.query > n) throw input_error("tree: query index out of range");
    const std::uint32_t bit = 1u << (node.query - 1);
    if (f.used & bit) throw input_error("tree: repeated query on a path");
    if (f.depth + 1 > t) throw input_error("tree: path exceeds depth bound t");
    stack.push_back({node.if0, f.depth + 1, f.used | bit});
    stack.push_back({node.if1, f.depth + 1, f.used | bit});
  }
  if (!std::all_of(seen.begin(), seen.end(), [](char c) { return c; }))
    throw input_error("tree: unreachable nodes");
}

DecisionTree DecisionTree::make_leaf(int n, int output) {
  return DecisionTree(n, 0, {Node{0, -1, -1, output}});
}

DecisionTree DecisionTree::parity_tree(int n) {
  // Layer t holds one node per (depth, parity-so-far); 2 nodes per level
  // suffice since only the running XOR matters.
  std::vector<Node> nodes;
  // internal levels: node index for (level, parity) = 2*level + parity - ... build iteratively
  // Simpler: recursive arena construction.
  struct Builder {
    int n;
    std::vector<Node>& arena;
    int build(int next_query, int parity) {
      if (next_query > n) {
        arena.push_back(Node{0, -1, -1, parity});
        return static_cast<int>(arena.size()) - 1;
      }
      const int self = static_cast<int>(arena.size());
      arena.push_back(Node{});
      const int c0 = build(next_query + 1, parity);
      const int c1 = build(next_query + 1, parity ^ 1);
      arena[static_cast<std::size_t>(self)] = Node{next_query, c0, c1, -1};
      return self;
    }
  };
  Builder b{n, nodes};
  b.build(1, 0);
  return DecisionTree(n, n, std::move(nodes));
}

DecisionTree::Trace DecisionTree::run(std::uint32_t code) const {
  Trace tr;
  int at = 0;
  while (!nodes_[static_cast<std::size_t>(at)].is_leaf()) {
    const Node& node = nodes_[static_cast<std::size_t>(at)];
    tr.visits.push_back(node.query);
    at = ((code >> (node.query - 1)) & 1u) ? node.if1 : node.if0;
  }
  tr.output = nodes_[static_cast<std::size_t>(at)].leaf;
  return tr;
}

DecisionTree::Trace DecisionTree::run(const ClueString& b) const {
  if (b.n != n_) throw input_error("tree: dimension mismatch");
  return run(b.code);
}

int DecisionTree::output_on(std::uint32_t code) const {
  int at = 0;
  while (!nodes_[static_cast<std::size_t>(at)].is_leaf()) {
    const Node& node = nodes_[static_cast<std::size_t>(at)];
    at = ((code >> (node.query - 1)) & 1u) ? node.if1 : node.if0;
  }
  return nodes_[static_cast<std::size_t>(at)].leaf;
}

bool DecisionTree::visits_city(std::uint32_t code, int city) const {
  int at = 0;
  while (!nodes_[static_cast<std::size_t>(at)].is_leaf()) {
    const Node& node = nodes_[static_cast<std::size_t>(at)];
    if (node.query == city) return true;
    at = ((code >> (node.query - 1)) & 1u) ? node.if1 : node.if0;
  }
  return false;
}

RandomizedAlgorithm::RandomizedAlgorithm(std::vector<Atom> atoms)
    : n_(0), t_(0), atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw input_error("algorithm: needs at least one atom");
  n_ = atoms_.front().tree.n();
  Rat total = 0;
  for (const auto& atom : atoms_) {
    if (atom.tree.n() != n_) throw input_error("algorithm: atoms disagree on n");
    if (atom.p <= 0) throw input_error("algorithm: atom probabilities must be positive");
    t_ = std::max(t_, atom.tree.t());
    total += atom.p;
  }
  if (total != 1) throw input_error("algorithm: atom probabilities must sum to 1");
}

Rat search_success_probability(const RandomizedAlgorithm& alg, const BobStrategy& strategy,
                               int cap, int workers) {
  const int n = strategy.n();
  if (alg.n() != n) throw input_error("search_success: dimension mismatch");
  if (n > cap)
    throw cap_exceeded("search_success: exact enumeration capped at n <= " +
                       std::to_string(cap) + "; use the Monte Carlo estimator");
  const std::uint64_t nperm = factorial(n);

  // success counts per atom over all (pi, z)
  std::vector<std::uint64_t> counts(alg.atoms().size(), 0);
  auto chunk = [&](std::uint64_t b, std::uint64_t e) {
    std::vector<std::uint64_t> part(alg.atoms().size(), 0);
    for_each_permutation(n, b, e, [&](std::uint64_t, const Permutation& pi) {
      for (int z = 0; z < 2; ++z) {
        const ClueString s = strategy.clue_string(pi, z);
        for (std::size_t a = 0; a < alg.atoms().size(); ++a)
          part[a] += alg.atoms()[a].tree.visits_city(s.code, pi.final_city());
      }
    });
    return part;
  };
  auto combine = [](std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  counts = parallel_reduce(nperm, workers, counts, chunk, combine);

  Rat p = 0;
  for (std::size_t a = 0; a < alg.atoms().size(); ++a)
    p += alg.atoms()[a].p * Rat(counts[a], 2 * nperm);
  return p;
}

McEstimate search_success_probability_mc(const RandomizedAlgorithm& alg,
                                         const BobStrategy& strategy,
                                         std::uint64_t samples, std::uint64_t seed) {
  const int n = strategy.n();
  if (alg.n() != n) throw input_error("search_success: dimension mismatch");
  if (samples == 0) throw input_error("search_success: need at least one sample");

  // atom CDF quantized to 2^-64 for the draw
  std::vector<Rat> cdf;
  Rat acc = 0;
  for (const auto& atom : alg.atoms()) {
    acc += atom.p;
    cdf.push_back(acc);
  }

  std::uint64_t hits = 0;
  const Rat scale = Rat(BigInt(1) << 64);
  for (std::uint64_t i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, i));
    Permutation pi{rng.permutation(n)};
    const int z = rng.bit();
    const Rat draw = Rat(BigInt(rng.next())) / scale;
    std::size_t a = 0;
    while (a + 1 < cdf.size() && draw >= cdf[a]) ++a;
    const ClueString s = strategy.clue_string(pi, z);
    hits += alg.atoms()[a].tree.visits_city(s.code, pi.final_city());
  }
  McEstimate est;
  est.samples = samples;
  est.successes = hits;
  est.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  est.half_width_95 =
      1.96 * std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(samples));
  return est;
}

KSet parity_success_set(const RandomizedAlgorithm& alg, int cap) {
  const int n = alg.n();
  if (n > cap)
    throw cap_exceeded("parity_success_set: 2^n sweep capped at n <= " + std::to_string(cap));
  const Rat threshold(2, 3);
  KSet k(n);
  const std::uint64_t u = std::uint64_t{1} << n;
  for (std::uint64_t y = 0; y < u; ++y) {
    const auto code = static_cast<std::uint32_t>(y);
    const int par = std::popcount(code) & 1;
    Rat success = 0;
    for (const auto& atom : alg.atoms())
      if (atom.tree.output_on(code) == par) success += atom.p;
    if (success >= threshold) k.insert(code);
  }
  return k;
}

ReductionReport parity_reduction(const RandomizedAlgorithm& alg, int cap, int workers) {
  const int n = alg.n();
  ReductionReport r;
  r.n = n;
  r.t = alg.t();
  r.k = parity_success_set(alg);
  r.k_size = r.k.size();
  r.premise = r.k_size > (std::uint64_t{1} << (n - 1));
  if (!r.premise) return r;

  const BobStrategy strategy = k_halving_strategy(r.k);
  r.search_success = search_success_probability(alg, strategy, cap, workers);

  // per-atom counts over all (pi, z): correctness on b, on the flipped-final
  // partner b', and the pointwise indicator inequality
  const std::uint64_t nperm = factorial(n);
  struct Counts {
    std::vector<std::uint64_t> correct_b, correct_bp;
    std::uint64_t total = 0;
    bool indicator_ok = true;
  };
  const std::size_t na = alg.atoms().size();
  auto chunk = [&](std::uint64_t lo, std::uint64_t hi) {
    Counts c;
    c.correct_b.assign(na, 0);
    c.correct_bp.assign(na, 0);
    for_each_permutation(n, lo, hi, [&](std::uint64_t, const Permutation& pi) {
      for (int z = 0; z < 2; ++z) {
        const ClueString b = strategy.clue_string(pi, z);
        const ClueString bp = strategy.clue_string(pi, 1 - z);
        ++c.total;
        for (std::size_t a = 0; a < na; ++a) {
          const auto& tree = alg.atoms()[a].tree;
          const int cb = tree.output_on(b.code) == b.parity();
          const int cbp = tree.output_on(bp.code) == bp.parity();
          const int search = tree.visits_city(b.code, pi.final_city());
          c.correct_b[a] += static_cast<std::uint64_t>(cb);
          c.correct_bp[a] += static_cast<std::uint64_t>(cbp);
          if (cb + cbp > 1 + search) c.indicator_ok = false;
        }
      }
    });
    return c;
  };
  auto combine = [](Counts a, Counts b) {
    if (a.correct_b.empty()) return b;
    if (b.correct_b.empty()) return a;
    for (std::size_t i = 0; i < a.correct_b.size(); ++i) {
      a.correct_b[i] += b.correct_b[i];
      a.correct_bp[i] += b.correct_bp[i];
    }
    a.total += b.total;
    a.indicator_ok &= b.indicator_ok;
    return a;
  };
  Counts c = parallel_reduce(nperm, workers, Counts{}, chunk, combine);

  Rat pb = 0, pbp = 0;
  for (std::size_t a = 0; a < na; ++a) {
    pb += alg.atoms()[a].p * Rat(c.correct_b[a], 2 * nperm);
    pbp += alg.atoms()[a].p * Rat(c.correct_bp[a], 2 * nperm);
  }
  r.parity_success = pb;
  r.eq_pairing_ok = pb == pbp;
  r.eq_indicator_ok = c.indicator_ok;
  return r;
}

HardDistribution hard_distribution_exact(const KSet& k, int cap, int workers) {
  const BobStrategy strategy = k_halving_strategy(k);
  HardDistribution d;
  d.n = k.n();
  d.total = 2 * factorial(k.n());
  for (const auto& [code, row] : outcome_table(strategy, cap, workers))
    d.counts[code] = row.count;
  return d;
}

std::vector<ClueString> hard_distribution_sample(const KSet& k, std::uint64_t seed,
                                                 std::size_t count) {
  const int n = k.n();
  const BobStrategy strategy = k_halving_strategy(k);
  std::vector<ClueString> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, i));
    Permutation pi{rng.permutation(n)};
    const int z = rng.bit();
    out.push_back(strategy.clue_string(pi, z));
  }
  return out;
}

}  // namespace carmen
