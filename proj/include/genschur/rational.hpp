#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace genschur {

// Exact scalars. mpq_class values are kept canonical by GMP: lowest terms,
// positive denominator, zero stored as 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parse "p/q" or "p" (optional leading '-'). Throws shape_error on bad
/// syntax or zero denominator.
Rational rat_parse(std::string_view s);

/// Render as "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer factorial(long k);

/// Binomial coefficient with C(a,b) = 0 for b < 0 or b > a.
Integer binomial(long a, long b);

} // namespace genschur
