#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace sangaku {

// Exact scalars. mpq_class keeps rationals canonical (lowest terms, positive
// denominator) as long as every mutation goes through its operators.
using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);

// "p/q" for non-integers, "p" otherwise.
std::string to_string(const Rational& q);

// Accepts "p", "p/q", and finite decimals such as "-1.25" or "3e-2".
// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

Integer parse_integer(std::string_view text);

// Number of bits of |z| (0 for z == 0).
std::size_t bit_length(const Integer& z);

int sign(const Integer& z);
int sign(const Rational& q);

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

}  // namespace sangaku
