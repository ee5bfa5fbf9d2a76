#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace carmen {

// Exact rational probabilities. Everything stays exact until a final
// floating-point evaluation (entropy, report convenience fields).
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string rat_str(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double rat_double(const Rat& r) { return r.convert_to<double>(); }

// Parses "num/den" or a bare integer. Throws std::runtime_error on garbage.
Rat rat_parse(const std::string& s);

}  // namespace carmen
