#include "carmen/kset.hpp"

#include <algorithm>
#include <bit>

#include "carmen/parallel.hpp"
#include "carmen/rng.hpp"

namespace carmen {

namespace {
constexpr int kMaxN = 24;  // 2^24-bit mask = 2 MiB

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

KSet::KSet(int n) : n_(n) {
  if (n < 1 || n > kMaxN) throw input_error("kset: n out of range [1, 24]");
  words_.assign((universe() + 63) / 64, 0);
}

KSet KSet::full(int n) {
  KSet k(n);
  const std::uint64_t u = k.universe();
  for (std::uint64_t i = 0; i < u; ++i) k.words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  return k;
}

KSet KSet::from_members(int n, std::span<const std::uint32_t> codes) {
  KSet k(n);
  for (auto c : codes) k.insert(c);
  return k;
}

KSet KSet::from_member_strings(int n, std::span<const std::string> strings) {
  KSet k(n);
  for (const auto& s : strings) {
    const ClueString b = ClueString::from_string(s);
    if (b.n != n) throw input_error("kset: member string of wrong length");
    k.insert(b.code);
  }
  return k;
}

std::uint64_t KSet::size() const {
  std::uint64_t s = 0;
  for (auto w : words_) s += static_cast<std::uint64_t>(std::popcount(w));
  return s;
}

bool KSet::contains(const ClueString& b) const {
  if (b.n != n_) throw input_error("kset: dimension mismatch");
  return contains(b.code);
}

void KSet::insert(std::uint32_t code) {
  if (code >= universe()) throw input_error("kset: member code out of range");
  words_[code >> 6] |= std::uint64_t{1} << (code & 63u);
}

std::vector<std::uint32_t> KSet::members() const {
  std::vector<std::uint32_t> out;
  out.reserve(size());
  const std::uint64_t u = universe();
  for (std::uint64_t c = 0; c < u; ++c)
    if (contains(static_cast<std::uint32_t>(c))) out.push_back(static_cast<std::uint32_t>(c));
  return out;
}

std::string KSet::hex() const {
  const std::uint64_t digits = std::max<std::uint64_t>(1, universe() / 4);
  std::string s(digits, '0');
  for (std::uint64_t d = 0; d < digits; ++d) {
    // digit d counts from the least significant end; string is big-endian
    const std::uint64_t nibble = (words_[d >> 4] >> ((d & 15) * 4)) & 0xf;
    s[digits - 1 - d] = "0123456789abcdef"[nibble];
  }
  return s;
}

KSet KSet::from_hex(int n, std::string_view hex) {
  KSet k(n);
  const std::uint64_t digits = std::max<std::uint64_t>(1, k.universe() / 4);
  if (hex.size() != digits)
    throw input_error("kset: hex mask must have exactly " + std::to_string(digits) +
                      " digits for n=" + std::to_string(n));
  for (std::uint64_t d = 0; d < digits; ++d) {
    const int v = hex_digit(hex[hex.size() - 1 - d]);
    if (v < 0) throw input_error("kset: invalid hex digit");
    k.words_[d >> 4] |= static_cast<std::uint64_t>(v) << ((d & 15) * 4);
  }
  // reject set bits beyond the universe (only possible for n = 1)
  if (k.universe() < 4 && (k.words_[0] >> k.universe()) != 0)
    throw input_error("kset: mask bits beyond 2^n");
  return k;
}

KSet KSet::relabel(const Permutation& sigma) const {
  if (sigma.n() != n_) throw input_error("kset: relabel dimension mismatch");
  KSet out(n_);
  for (auto y : members()) {
    std::uint32_t mapped = 0;
    for (int i = 1; i <= n_; ++i)
      if ((y >> (i - 1)) & 1u) mapped |= 1u << (sigma.at(i) - 1);
    out.insert(mapped);
  }
  return out;
}

std::uint64_t restriction_count(const KSet& k, const PartialClue& w) {
  if (w.n() != k.n()) throw input_error("restriction_count: dimension mismatch");
  std::uint64_t count = 0;
  const std::uint64_t u = k.universe();
  for (std::uint64_t c = 0; c < u; ++c) {
    const auto code = static_cast<std::uint32_t>(c);
    if (k.contains(code) && w.consistent_with(code)) ++count;
  }
  return count;
}

RestrictionCounter::RestrictionCounter(const KSet& k) : alive_(k.members()) {}

std::uint64_t RestrictionCounter::count_with(int city, int bit) const {
  const std::uint32_t mask = 1u << (city - 1);
  const std::uint32_t want = bit ? mask : 0u;
  std::uint64_t c = 0;
  for (auto y : alive_) c += (y & mask) == want;
  return c;
}

void RestrictionCounter::refine(int city, int bit) {
  const std::uint32_t mask = 1u << (city - 1);
  const std::uint32_t want = bit ? mask : 0u;
  std::erase_if(alive_, [&](std::uint32_t y) { return (y & mask) != want; });
}

int induced_degree(const KSet& k, std::uint32_t code) {
  if (!k.contains(code)) throw input_error("induced_degree: string is not a member of K");
  int d = 0;
  for (int i = 0; i < k.n(); ++i) d += k.contains(code ^ (1u << i));
  return d;
}

int induced_degree(const KSet& k, const ClueString& y) {
  if (y.n != k.n()) throw input_error("induced_degree: dimension mismatch");
  return induced_degree(k, y.code);
}

DegreeReport max_induced_degree(const KSet& k, int workers) {
  const auto members = k.members();
  if (members.empty()) throw input_error("max_induced_degree: empty K");

  struct Part {
    int max_degree = -1;
    std::uint32_t witness = 0;
    std::vector<std::pair<std::uint32_t, int>> degrees;
    std::map<int, std::uint64_t> histogram;
  };
  auto chunk = [&](std::uint64_t b, std::uint64_t e) {
    Part p;
    for (std::uint64_t i = b; i < e; ++i) {
      const std::uint32_t y = members[i];
      int d = 0;
      for (int j = 0; j < k.n(); ++j) d += k.contains(y ^ (1u << j));
      p.degrees.emplace_back(y, d);
      ++p.histogram[d];
      if (d > p.max_degree) {
        p.max_degree = d;
        p.witness = y;
      }
    }
    return p;
  };
  auto combine = [](Part a, Part b) {
    if (b.max_degree > a.max_degree ||
        (b.max_degree == a.max_degree && b.witness < a.witness)) {
      a.max_degree = b.max_degree;
      a.witness = b.witness;
    }
    a.degrees.insert(a.degrees.end(), b.degrees.begin(), b.degrees.end());
    for (auto [d, c] : b.histogram) a.histogram[d] += c;
    return a;
  };
  Part p = parallel_reduce(members.size(), workers, Part{}, chunk, combine);

  DegreeReport r;
  r.n = k.n();
  r.size = members.size();
  r.max_degree = p.max_degree;
  r.witness = p.witness;
  r.degrees = std::move(p.degrees);
  r.histogram = std::move(p.histogram);
  return r;
}

namespace {

// max induced degree of the subset given by `mask` over the 2^nu-point cube;
// nu <= 6 so the whole characteristic vector fits one word.
int mask_max_degree(std::uint64_t mask, int n) {
  int best = 0;
  for (std::uint64_t rest = mask; rest;) {
    const int y = std::countr_zero(rest);
    rest &= rest - 1;
    int d = 0;
    for (int i = 0; i < n; ++i) d += (mask >> (y ^ (1 << i))) & 1u;
    best = std::max(best, d);
  }
  return best;
}

}  // namespace

MinMaxDegree min_max_degree(int n, std::uint64_t size_threshold, int cap, int workers) {
  if (n < 1) throw input_error("min_max_degree: n must be positive");
  if (n > cap)
    throw cap_exceeded("min_max_degree: exhaustive subset search capped at n <= " +
                       std::to_string(cap) + " (got n=" + std::to_string(n) +
                       "); use sampled mode");
  const std::uint64_t u = std::uint64_t{1} << n;
  if (size_threshold < 1 || size_threshold > u)
    throw input_error("min_max_degree: size threshold out of range");

  struct Part {
    int value = INT32_MAX;
    std::uint64_t witness_mask = 0;
    std::uint64_t examined = 0;
  };
  const std::uint64_t total = n >= 6 ? 0 : (std::uint64_t{1} << u);  // cap <= 4 in practice
  if (total == 0) throw cap_exceeded("min_max_degree: subset space too large");

  auto chunk = [&](std::uint64_t b, std::uint64_t e) {
    Part p;
    for (std::uint64_t mask = b; mask < e; ++mask) {
      if (static_cast<std::uint64_t>(std::popcount(mask)) < size_threshold) continue;
      ++p.examined;
      const int d = mask_max_degree(mask, n);
      if (d < p.value || (d == p.value && mask < p.witness_mask)) {
        p.value = d;
        p.witness_mask = mask;
      }
    }
    return p;
  };
  auto combine = [](Part a, Part b) {
    a.examined += b.examined;
    if (b.value < a.value || (b.value == a.value && b.witness_mask < a.witness_mask))
      a = Part{b.value, b.witness_mask, a.examined};
    return a;
  };
  Part p = parallel_reduce(total, workers, Part{}, chunk, combine);

  MinMaxDegree r{n, size_threshold, p.value, KSet(n), true, p.examined};
  for (std::uint64_t c = 0; c < u; ++c)
    if ((p.witness_mask >> c) & 1u) r.witness.insert(static_cast<std::uint32_t>(c));
  return r;
}

MinMaxDegree min_max_degree_sampled(int n, std::uint64_t size_threshold,
                                    std::uint64_t samples, std::uint64_t seed) {
  if (n < 1 || n > kMaxN) throw input_error("min_max_degree: n out of range");
  const std::uint64_t u = std::uint64_t{1} << n;
  if (size_threshold < 1 || size_threshold > u)
    throw input_error("min_max_degree: size threshold out of range");
  if (samples == 0) throw input_error("min_max_degree: need at least one sample");

  MinMaxDegree r{n, size_threshold, INT32_MAX, KSet(n), false, samples};
  for (std::uint64_t i = 0; i < samples; ++i) {
    Rng rng(derive_seed(seed, i));
    const auto codes = rng.subset(static_cast<std::uint32_t>(u),
                                  static_cast<std::uint32_t>(size_threshold));
    KSet k = KSet::from_members(n, codes);
    const int d = max_induced_degree(k).max_degree;
    if (d < r.value) {
      r.value = d;
      r.witness = std::move(k);
    }
  }
  return r;
}

}  // namespace carmen
