#include "carmen/strategy.hpp"

#include <algorithm>

#include "carmen/errors.hpp"

namespace carmen {

namespace {

std::string prefix_str(std::span<const int> prefix) {
  std::string s = "(";
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(prefix[i]);
  }
  return s + ")";
}

// The count-maximizing clue for position `city` given the clues so far.
int halving_choice(std::uint64_t count0, std::uint64_t count1) {
  return count1 > count0 ? 1 : 0;  // ties to 0
}

void enumerate_prefixes(int n, int t, BobStrategy::Prefix& cur, std::uint32_t used,
                        const std::function<void(const BobStrategy::Prefix&)>& fn) {
  if (static_cast<int>(cur.size()) == t) {
    fn(cur);
    return;
  }
  for (int c = 1; c <= n; ++c) {
    if ((used >> (c - 1)) & 1u) continue;
    cur.push_back(c);
    enumerate_prefixes(n, t, cur, used | (1u << (c - 1)), fn);
    cur.pop_back();
  }
}

}  // namespace

BobStrategy BobStrategy::table_strategy(int n, std::vector<Table> tables) {
  if (n < 2) throw input_error("strategy: need n > 1");
  if (static_cast<int>(tables.size()) != n - 1)
    throw input_error("strategy: expected " + std::to_string(n - 1) + " tables");
  for (int t = 1; t < n; ++t) {
    for (const auto& [prefix, bit] : tables[static_cast<std::size_t>(t - 1)]) {
      if (static_cast<int>(prefix.size()) != t)
        throw input_error("strategy: prefix of wrong length in table t=" + std::to_string(t));
      std::uint32_t seen = 0;
      for (int c : prefix) {
        if (c < 1 || c > n) throw input_error("strategy: prefix city out of range");
        if ((seen >> (c - 1)) & 1u) throw input_error("strategy: repeated city in prefix");
        seen |= 1u << (c - 1);
      }
      if (bit > 1) throw input_error("strategy: clue bit must be 0 or 1");
    }
  }
  BobStrategy s(n, Kind::Table);
  s.tables_ = std::move(tables);
  return s;
}

BobStrategy BobStrategy::constant(int n, int bit) {
  if (bit != 0 && bit != 1) throw input_error("strategy: clue bit must be 0 or 1");
  std::vector<Table> tables(static_cast<std::size_t>(n - 1));
  for (int t = 1; t < n; ++t) {
    Prefix cur;
    enumerate_prefixes(n, t, cur, 0, [&](const Prefix& p) {
      tables[static_cast<std::size_t>(t - 1)][p] = static_cast<std::uint8_t>(bit);
    });
  }
  return table_strategy(n, std::move(tables));
}

BobStrategy BobStrategy::halving(KSet k) {
  const int n = k.n();
  if (n < 2) throw input_error("strategy: need n > 1");
  if (k.size() <= (std::uint64_t{1} << (n - 1)))
    throw premise_not_met("halving strategy requires |K| > 2^(n-1); got |K|=" +
                          std::to_string(k.size()));
  BobStrategy s(n, Kind::KHalving);
  s.kset_ = std::make_shared<KSet>(std::move(k));
  return s;
}

BobStrategy BobStrategy::from_memoryless(
    int n, const std::function<int(const PartialClue&, int)>& rule) {
  std::vector<Table> tables(static_cast<std::size_t>(n - 1));
  for (int t = 1; t < n; ++t) {
    Prefix cur;
    enumerate_prefixes(n, t, cur, 0, [&](const Prefix& p) {
      PartialClue w(n);
      for (int s = 0; s + 1 < t; ++s) w = w.with(p[static_cast<std::size_t>(s)],
                                                 rule(w, p[static_cast<std::size_t>(s)]));
      tables[static_cast<std::size_t>(t - 1)][p] =
          static_cast<std::uint8_t>(rule(w, p.back()) ? 1 : 0);
    });
  }
  return table_strategy(n, std::move(tables));
}

const std::vector<BobStrategy::Table>& BobStrategy::tables() const {
  if (kind_ != Kind::Table) throw input_error("strategy: not in table form");
  return tables_;
}

const KSet& BobStrategy::kset() const {
  if (kind_ != Kind::KHalving) throw input_error("strategy: no K set attached");
  return *kset_;
}

int BobStrategy::clue_bit(std::span<const int> prefix) const {
  const int t = static_cast<int>(prefix.size());
  if (t < 1 || t >= n_) throw input_error("strategy: prefix length out of [1, n-1]");
  if (kind_ == Kind::Table) {
    const auto& table = tables_[static_cast<std::size_t>(t - 1)];
    const auto it = table.find(Prefix(prefix.begin(), prefix.end()));
    if (it == table.end())
      throw input_error("strategy: table has no entry for prefix " + prefix_str(prefix));
    return it->second;
  }
  // halving: replay the first t-1 placements, then decide at prefix[t-1]
  RestrictionCounter rc(*kset_);
  int u = 0;
  for (int s = 0; s < t; ++s) {
    const int city = prefix[static_cast<std::size_t>(s)];
    const std::uint64_t c0 = rc.count_with(city, 0);
    u = halving_choice(c0, rc.count() - c0);
    rc.refine(city, u);
  }
  return u;
}

ClueString BobStrategy::clue_string(const Permutation& pi, int z) const {
  if (pi.n() != n_) throw input_error("clue_string: dimension mismatch");
  if (z != 0 && z != 1) throw input_error("clue_string: z must be 0 or 1");
  ClueString b{n_, 0};
  if (kind_ == Kind::Table) {
    for (int t = 1; t < n_; ++t) {
      const int bit = clue_bit(std::span<const int>(pi.order.data(), static_cast<std::size_t>(t)));
      if (bit) b.code |= 1u << (pi.at(t) - 1);
    }
  } else {
    RestrictionCounter rc(*kset_);
    for (int t = 1; t < n_; ++t) {
      const int city = pi.at(t);
      const std::uint64_t c0 = rc.count_with(city, 0);
      const int u = halving_choice(c0, rc.count() - c0);
      rc.refine(city, u);
      if (u) b.code |= 1u << (city - 1);
    }
  }
  if (z) b.code |= 1u << (pi.final_city() - 1);
  return b;
}

BobStrategy BobStrategy::to_table() const {
  if (kind_ == Kind::Table) return *this;
  const KSet& k = *kset_;
  return from_memoryless(n_, [&k](const PartialClue& w, int city) {
    const std::uint64_t c0 = restriction_count(k, w.with(city, 0));
    const std::uint64_t c1 = restriction_count(k, w.with(city, 1));
    return halving_choice(c0, c1);
  });
}

BobStrategy BobStrategy::relabel(const Permutation& sigma) const {
  if (sigma.n() != n_) throw input_error("strategy: relabel dimension mismatch");
  if (kind_ == Kind::KHalving) return halving(kset_->relabel(sigma));
  std::vector<Table> tables(static_cast<std::size_t>(n_ - 1));
  for (int t = 1; t < n_; ++t) {
    for (const auto& [prefix, bit] : tables_[static_cast<std::size_t>(t - 1)]) {
      Prefix mapped(prefix.size());
      for (std::size_t i = 0; i < prefix.size(); ++i) mapped[i] = sigma.at(prefix[i]);
      tables[static_cast<std::size_t>(t - 1)][mapped] = bit;
    }
  }
  return table_strategy(n_, std::move(tables));
}

std::vector<std::pair<int, BobStrategy::Prefix>> table_entries(int n) {
  std::vector<std::pair<int, BobStrategy::Prefix>> entries;
  for (int t = 1; t < n; ++t) {
    BobStrategy::Prefix cur;
    enumerate_prefixes(n, t, cur, 0,
                       [&](const BobStrategy::Prefix& p) { entries.emplace_back(t, p); });
  }
  return entries;  // recursion yields lexicographic order per t
}

std::uint64_t strategy_table_bits(int n) { return table_entries(n).size(); }

BobStrategy strategy_from_index(int n, std::uint64_t index) {
  const auto entries = table_entries(n);
  const std::size_t m = entries.size();
  if (m > 63 || index >= (std::uint64_t{1} << m))
    throw input_error("strategy index out of range");
  std::vector<BobStrategy::Table> tables(static_cast<std::size_t>(n - 1));
  for (std::size_t j = 0; j < m; ++j) {
    const auto& [t, prefix] = entries[j];
    tables[static_cast<std::size_t>(t - 1)][prefix] =
        static_cast<std::uint8_t>((index >> (m - 1 - j)) & 1u);
  }
  return BobStrategy::table_strategy(n, std::move(tables));
}

}  // namespace carmen
