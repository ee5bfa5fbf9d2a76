#pragma once

#include <stdexcept>
#include <string>

namespace carmen {

// Bad input: dimension mismatch, malformed file, invalid table.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive enumeration refused: n above the configured cap.
class cap_exceeded : public std::runtime_error {
 public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// A construction's premise does not hold (e.g. |K| <= 2^(n-1)).
class premise_not_met : public std::runtime_error {
 public:
  explicit premise_not_met(const std::string& what) : std::runtime_error(what) {}
};

// Default enumeration caps. Exceeding one without an explicit override is an
// error, not a silent fallback.
inline constexpr int kSuspectCap = 10;      // suspect sets / outcome tables: n! * 2 pairs
inline constexpr int kExactMinCap = 3;      // strategy-space minimization: 2^(sum_t n!/(n-t)!) tables
inline constexpr int kEntropyCap = 9;       // posterior enumeration
inline constexpr int kSubsetSearchCap = 4;  // all K subsets of the n-cube
inline constexpr int kParityEnumCap = 20;   // 2^n input sweeps

}  // namespace carmen
