#include "carmen/types.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "carmen/errors.hpp"

namespace carmen {

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw input_error("factorial: n out of range [0, 20]");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.order.resize(n);
  std::iota(p.order.begin(), p.order.end(), 1);
  return p;
}

Permutation Permutation::from_rank(int n, std::uint64_t rank) {
  // Factorial number system: digit t picks the (d_t)-th smallest unused city.
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  Permutation p;
  p.order.reserve(n);
  for (int t = n - 1; t >= 0; --t) {
    const std::uint64_t f = factorial(t);
    const auto d = static_cast<std::size_t>(rank / f);
    rank %= f;
    p.order.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return p;
}

std::uint64_t Permutation::rank() const {
  const int m = n();
  std::uint64_t r = 0;
  for (int t = 0; t < m; ++t) {
    int smaller = 0;
    for (int s = t + 1; s < m; ++s) smaller += order[s] < order[t];
    r += static_cast<std::uint64_t>(smaller) * factorial(m - 1 - t);
  }
  return r;
}

void Permutation::validate() const {
  const int m = n();
  if (m < 2) throw input_error("permutation: need n > 1");
  std::uint32_t seen = 0;
  for (int v : order) {
    if (v < 1 || v > m) throw input_error("permutation: entry out of range");
    if ((seen >> (v - 1)) & 1u) throw input_error("permutation: repeated entry");
    seen |= 1u << (v - 1);
  }
}

void for_each_permutation(int n, std::uint64_t begin, std::uint64_t end,
                          const std::function<void(std::uint64_t, const Permutation&)>& fn) {
  if (begin >= end) return;
  Permutation p = Permutation::from_rank(n, begin);
  for (std::uint64_t r = begin; r < end; ++r) {
    fn(r, p);
    std::next_permutation(p.order.begin(), p.order.end());
  }
}

int ClueString::parity() const {
  return std::popcount(code & ((n >= 32 ? 0u : (1u << n)) - 1u)) & 1;
}

std::string ClueString::str() const {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 1; i <= n; ++i) s[static_cast<std::size_t>(i - 1)] = bit(i) ? '1' : '0';
  return s;
}

ClueString ClueString::from_string(std::string_view s) {
  const int n = static_cast<int>(s.size());
  if (n < 1 || n > 31) throw input_error("clue string: length out of range");
  ClueString b{n, 0};
  for (int i = 1; i <= n; ++i) {
    const char c = s[static_cast<std::size_t>(i - 1)];
    if (c == '1')
      b.code |= 1u << (i - 1);
    else if (c != '0')
      throw input_error("clue string: expected 0/1 characters");
  }
  return b;
}

PartialClue::PartialClue(int n) : n_(n), assigned_(0), bits_(0) {
  if (n < 1 || n > 31) throw input_error("partial clue: n out of range");
}

PartialClue PartialClue::from_string(std::string_view s) {
  PartialClue w(static_cast<int>(s.size()));
  for (int i = 1; i <= w.n_; ++i) {
    const char c = s[static_cast<std::size_t>(i - 1)];
    if (c == '*') continue;
    if (c != '0' && c != '1') throw input_error("partial clue: expected 0/1/* characters");
    w.assigned_ |= 1u << (i - 1);
    if (c == '1') w.bits_ |= 1u << (i - 1);
  }
  return w;
}

int PartialClue::assigned_count() const { return std::popcount(assigned_); }

PartialClue PartialClue::with(int city, int bit) const {
  if (city < 1 || city > n_) throw input_error("partial clue: city out of range");
  if (is_assigned(city)) throw input_error("partial clue: cell already fixed");
  PartialClue w = *this;
  w.assigned_ |= 1u << (city - 1);
  if (bit) w.bits_ |= 1u << (city - 1);
  return w;
}

std::string PartialClue::str() const {
  std::string s(static_cast<std::size_t>(n_), '*');
  for (int i = 1; i <= n_; ++i)
    if (is_assigned(i)) s[static_cast<std::size_t>(i - 1)] = bit(i) ? '1' : '0';
  return s;
}

}  // namespace carmen
