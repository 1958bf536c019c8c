#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace padspec {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Largest integer <= q.
inline Int rat_floor(const Rational& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

inline Int rat_ceil(const Rational& q) { return -rat_floor(-q); }

inline bool is_integer(const Rational& q) { return rat_den(q) == 1; }

Int int_pow(const Int& base, unsigned long e);
Rational rat_pow(const Rational& base, long e);

/// p-adic valuation of a nonzero integer.
long vp_int(Int n, const Int& p);

/// p-adic valuation of a nonzero rational.
long vp_rat(const Rational& q, const Int& p);

std::string rat_to_string(const Rational& q);

/// Parses "a" or "a/b"; empty optional on malformed input.
std::optional<Rational> rat_from_string(const std::string& s);

} // namespace padspec
