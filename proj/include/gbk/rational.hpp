#pragma once

#include <gmpxx.h>

#include <string>

namespace gbk {

// Exact rationals are GMP's canonical mpq_class: numerator and denominator
// coprime, denominator positive.
using Rational = mpq_class;

// Builds num/den in canonical form. The raw mpq_class(num, den) constructor
// skips canonicalization and later arithmetic on such a value is undefined,
// so fractions must go through here or through rat_parse.
inline Rational rat_of(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "a" or "a/b" with optional sign; canonicalizes. Throws InputError on
// garbage or zero denominator.
Rational rat_parse(const std::string& s);

// "a" when the denominator is 1, otherwise "a/b".
std::string rat_str(const Rational& q);

} // namespace gbk
