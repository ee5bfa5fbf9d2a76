#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace carmen {

// Bit-layout convention used throughout: cities are 1-based, and the clue bit
// of city i sits at bit (i-1) of an integer code, i.e. b_1 is the least
// significant bit. Display strings are written b_1 b_2 ... b_n left to right.

std::uint64_t factorial(int n);  // n <= 20

// An itinerary: order[t-1] = pi(t), a bijection on 1..n.
struct Permutation {
  std::vector<int> order;

  int n() const { return static_cast<int>(order.size()); }
  int at(int t) const { return order[t - 1]; }  // pi(t), 1-based t
  int final_city() const { return order.back(); }

  static Permutation identity(int n);
  // Lexicographic unrank, rank in [0, n!).
  static Permutation from_rank(int n, std::uint64_t rank);
  std::uint64_t rank() const;

  void validate() const;  // throws input_error unless a bijection on 1..n, n > 1

  bool operator==(const Permutation&) const = default;
};

// Visits permutations of 1..n with ranks in [begin, end) in lexicographic
// order. fn(rank, perm).
void for_each_permutation(int n, std::uint64_t begin, std::uint64_t end,
                          const std::function<void(std::uint64_t, const Permutation&)>& fn);

// A fully placed clue string b in {0,1}^n.
struct ClueString {
  int n = 0;
  std::uint32_t code = 0;

  int bit(int city) const { return static_cast<int>((code >> (city - 1)) & 1u); }
  ClueString flipped(int city) const { return {n, code ^ (1u << (city - 1))}; }
  int parity() const;  // XOR of all n bits

  std::string str() const;
  static ClueString from_string(std::string_view s);

  auto operator<=>(const ClueString&) const = default;
};

// A partial clue vector w in {0,1,*}^n.
class PartialClue {
 public:
  explicit PartialClue(int n);
  static PartialClue from_string(std::string_view s);  // over "01*"

  int n() const { return n_; }
  int assigned_count() const;
  bool is_assigned(int city) const { return (assigned_ >> (city - 1)) & 1u; }
  int bit(int city) const { return static_cast<int>((bits_ >> (city - 1)) & 1u); }

  // w[city <- bit]; the cell must previously be *.
  PartialClue with(int city, int bit) const;

  // True when every fixed cell of *this agrees with b.
  bool consistent_with(std::uint32_t code) const {
    return (code & assigned_) == bits_;
  }

  std::uint32_t assigned_mask() const { return assigned_; }
  std::string str() const;

  bool operator==(const PartialClue&) const = default;

 private:
  int n_;
  std::uint32_t assigned_;  // mask of fixed cells
  std::uint32_t bits_;      // values on fixed cells, zero elsewhere
};

}  // namespace carmen
