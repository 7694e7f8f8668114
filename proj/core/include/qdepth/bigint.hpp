#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace qdepth {

// Exact arbitrary-precision integers and rationals. Every alpha/beta count in
// the library is a BigInt; rationals appear only in the telescoped product
// form of E, where the final result must come out integral again.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// binomial(a, b) = C(a, b), with C(a, b) = 0 whenever a < 0, b < 0 or b > a.
// All alpha/beta routines share this one memoized implementation.
BigInt binomial(long long a, long long b);

std::string to_decimal(const BigInt& v);

// Parses an optionally signed decimal integer; throws std::invalid_argument on
// anything else (no whitespace, no hex).
BigInt bigint_from_decimal(const std::string& text);

} // namespace qdepth
