#pragma once

// Exact rational scalars. Everything in the engine computes over these;
// no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ckgrass {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// True iff the reduced denominator is a power of two (the Z[1/2] lattice check).
inline bool has_power_of_two_denominator(const Rational& q) {
    BigInt d = boost::multiprecision::denominator(q);
    if (d <= 0) return false;
    return (d & (d - 1)) == 0;
}

inline std::string rational_to_string(const Rational& q) {
    return q.str();
}

}  // namespace ckgrass
