#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace usf {

// Exact rational arithmetic for weights and verdicts. All quantities in the
// weight calculus are small (|numerator| well below 2^40 for every instance
// the exact scans accept), so a 64-bit backed rational is sufficient.
using Rat = boost::rational<long long>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

std::string to_string(const Rat& r);

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& text);

} // namespace usf
