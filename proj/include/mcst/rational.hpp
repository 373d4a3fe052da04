#ifndef MCST_RATIONAL_HPP
#define MCST_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace mcst {

using Rational = mpq_class;
using Integer = mpz_class;

/// Builds a canonical rational from numerator/denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "7", "-3", "3.25", "-0.5" or "p/q" into an exact rational.
Rational rational_from_string(const std::string& text);

/// Canonical text form: "p" when the value is integral, "p/q" otherwise.
std::string rational_to_string(const Rational& value);

/// Smallest multiple of 2^-30 that is >= sqrt(k). Used wherever a bound
/// containing sqrt(k) has to be evaluated with exact arithmetic.
Rational sqrt_upper_bound(unsigned long k);

/// Exact test for lhs <= coeff * sqrt(k) with coeff >= 0 (compares squares).
bool le_coeff_sqrt(const Rational& lhs, const Rational& coeff, unsigned long k);

}  // namespace mcst

#endif
