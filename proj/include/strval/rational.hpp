#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace strval {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Rationals are serialized as "p/q" (or "p" when q == 1) in every machine-readable output.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws DomainError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

BigInt floor_div(const Rational& q);
BigInt ceil_div(const Rational& q);

using RationalVector = std::vector<Rational>;

}  // namespace strval
