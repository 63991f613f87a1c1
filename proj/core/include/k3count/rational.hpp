#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace k3count {

// Arbitrary-precision integer, used for curve counts and partition numbers
// (coefficients of q/Delta pass 2^64 well before order 30).
using Integer = boost::multiprecision::cpp_int;

// Exact rational coefficient field. cpp_rational keeps every value in
// canonical form: lowest terms, denominator > 0, zero stored as 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r)
{
    return boost::multiprecision::numerator(r);
}

inline Integer denominator(const Rational& r)
{
    return boost::multiprecision::denominator(r);
}

inline bool is_integer(const Rational& r)
{
    return denominator(r) == 1;
}

} // namespace k3count
