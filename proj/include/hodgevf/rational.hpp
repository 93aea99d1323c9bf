#pragma once

// Exact rational numbers backed by GMP. Every value is kept canonical
// (reduced, positive denominator) by mpq_class itself.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hodgevf {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// "p/q", "-p/q" or "p". Throws std::invalid_argument on malformed text or a
// zero denominator.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace hodgevf
