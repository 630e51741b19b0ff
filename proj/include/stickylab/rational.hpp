#pragma once

#include <gmpxx.h>

#include <string>

namespace stickylab {

// Exact arithmetic carriers for all probabilities and expectations.
// BigRational is always stored reduced with a positive denominator
// (mpq_class canonicalizes on construction and after every operation
// we perform through its operators).
using BigInt = mpz_class;
using BigRational = mpq_class;

// Parses "3/10", "-1/4" or a plain integer "7". Throws std::invalid_argument
// on malformed input or a zero denominator.
BigRational rational_from_string(const std::string& text);

// Decimal rendering with a fixed number of significant digits, suitable for
// byte-stable artifacts. Rounding is toward zero on the last digit.
std::string decimal_string(const BigRational& value, int significant_digits = 30);

// "num/den" in lowest terms.
std::string fraction_string(const BigRational& value);

BigRational pow_rational(const BigRational& base, unsigned long exponent);

}  // namespace stickylab
