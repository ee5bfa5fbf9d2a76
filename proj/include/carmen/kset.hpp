#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "carmen/errors.hpp"
#include "carmen/types.hpp"

namespace carmen {

// A subset K of {0,1}^n as a 2^n-bit characteristic mask. Membership of a
// string y is the mask bit at index enc(y) = sum_i y_i * 2^(i-1); the hex
// serialization is the big-endian hex of the mask, zero-padded to 2^n/4
// digits (minimum 1).
class KSet {
 public:
  explicit KSet(int n);

  static KSet full(int n);
  static KSet from_members(int n, std::span<const std::uint32_t> codes);
  static KSet from_member_strings(int n, std::span<const std::string> strings);
  static KSet from_hex(int n, std::string_view hex);

  int n() const { return n_; }
  std::uint64_t universe() const { return std::uint64_t{1} << n_; }
  std::uint64_t size() const;

  bool contains(std::uint32_t code) const {
    return (words_[code >> 6] >> (code & 63u)) & 1u;
  }
  bool contains(const ClueString& b) const;

  void insert(std::uint32_t code);
  std::vector<std::uint32_t> members() const;  // ascending

  std::string hex() const;

  // Coordinate relabeling: member y maps to y' with y'_{sigma(i)} = y_i.
  KSet relabel(const Permutation& sigma) const;

  bool operator==(const KSet&) const = default;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

// |K(w)|: members of K agreeing with w on every fixed cell. Direct scan.
std::uint64_t restriction_count(const KSet& k, const PartialClue& w);

// Incremental restriction counting for game playout: one initial pass over K,
// then each refinement filters the surviving member list in place, so a full
// n-1 step game costs O(|K|) overall rather than O(n|K|).
class RestrictionCounter {
 public:
  explicit RestrictionCounter(const KSet& k);

  std::uint64_t count() const { return alive_.size(); }
  std::uint64_t count_with(int city, int bit) const;  // peek one refinement
  void refine(int city, int bit);                     // commit w[city <- bit]

 private:
  std::vector<std::uint32_t> alive_;
};

// Degree of member y inside the induced subgraph of the n-cube on K.
int induced_degree(const KSet& k, std::uint32_t code);
int induced_degree(const KSet& k, const ClueString& y);

struct DegreeReport {
  int n = 0;
  std::uint64_t size = 0;
  int max_degree = 0;
  std::uint32_t witness = 0;                           // smallest member attaining max
  std::vector<std::pair<std::uint32_t, int>> degrees;  // (member, degree), ascending
  std::map<int, std::uint64_t> histogram;              // degree -> member count
};

DegreeReport max_induced_degree(const KSet& k, int workers = 1);

struct MinMaxDegree {
  int n = 0;
  std::uint64_t size_threshold = 0;  // minimum |K|, inclusive
  int value = 0;
  KSet witness;
  bool exact = true;  // sampled mode yields an upper bound only
  std::uint64_t examined = 0;
};

// Minimum over all K with |K| >= size_threshold of max_induced_degree(K).
// Exhaustive over every subset of the n-cube; n <= cap.
MinMaxDegree min_max_degree(int n, std::uint64_t size_threshold,
                            int cap = kSubsetSearchCap, int workers = 1);

// Seeded upper bound from `samples` uniform K of size exactly size_threshold.
MinMaxDegree min_max_degree_sampled(int n, std::uint64_t size_threshold,
                                    std::uint64_t samples, std::uint64_t seed);

}  // namespace carmen
