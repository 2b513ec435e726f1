#pragma once

#include <gmpxx.h>

#include <string>

namespace doflab {

using Rational = mpq_class;

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "p/q" and "-p/q"; the result is canonicalized.
Rational parse_rational(const std::string& text);

Rational make_rational(long num, long den = 1);

}  // namespace doflab
