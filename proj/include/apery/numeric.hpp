#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace apery {

// Exact arbitrary-precision integers and rationals. Rationals are kept in
// lowest terms with a positive denominator, so equality is structural.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Floor division, b > 0. cpp_int's operator/ truncates toward zero.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline Int floor_rat(const Rat& q) {
    return floor_div(numerator(q), denominator(q));
}

// "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace apery
