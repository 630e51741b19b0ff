#include "stickylab/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace stickylab {

BigRational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  BigRational value;
  if (value.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (value.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + text);
  value.canonicalize();
  return value;
}

std::string decimal_string(const BigRational& value, int significant_digits) {
  if (significant_digits < 1) throw std::invalid_argument("significant_digits < 1");
  if (value == 0) return "0";

  BigInt num = value.get_num();
  BigInt den = value.get_den();
  const bool negative = num < 0;
  if (negative) num = -num;

  // Scale so that the integer quotient carries exactly `significant_digits`
  // leading digits, then place the decimal point. decimal_exponent ends up as
  // the power of ten of the leading digit.
  BigInt intpart = num / den;
  long decimal_exponent;
  if (intpart > 0) {
    decimal_exponent = static_cast<long>(mpz_sizeinbase(intpart.get_mpz_t(), 10)) - 1;
    // sizeinbase may overestimate by one
    BigInt check;
    mpz_ui_pow_ui(check.get_mpz_t(), 10, static_cast<unsigned long>(decimal_exponent));
    if (intpart < check) --decimal_exponent;
  } else {
    decimal_exponent = -1;
    BigInt scaled = num * 10;
    while (scaled / den == 0) {
      scaled *= 10;
      --decimal_exponent;
    }
  }

  const long shift = significant_digits - 1 - decimal_exponent;
  BigInt scaled_num = num;
  BigInt scaled_den = den;
  if (shift >= 0) {
    BigInt tens;
    mpz_ui_pow_ui(tens.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    scaled_num *= tens;
  } else {
    BigInt tens;
    mpz_ui_pow_ui(tens.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    scaled_den *= tens;
  }
  BigInt digits_int = scaled_num / scaled_den;  // truncation
  std::string digits = digits_int.get_str();
  // Truncation can only lose digits, never gain them, so digits.size() is
  // significant_digits except when the value rounds down across a power of 10.
  while (static_cast<int>(digits.size()) < significant_digits) digits.insert(digits.begin(), '0');

  std::string out;
  if (negative) out += '-';
  if (decimal_exponent >= 0 && decimal_exponent < significant_digits) {
    out += digits.substr(0, decimal_exponent + 1);
    std::string frac = digits.substr(decimal_exponent + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else if (decimal_exponent < 0 && decimal_exponent >= -4) {
    out += "0.";
    out.append(static_cast<size_t>(-decimal_exponent - 1), '0');
    std::string frac = digits;
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    out += frac;
  } else {
    std::string frac = digits.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out += digits.substr(0, 1);
    if (!frac.empty()) out += "." + frac;
    out += "e" + std::to_string(decimal_exponent);
  }
  return out;
}

std::string fraction_string(const BigRational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigRational pow_rational(const BigRational& base, unsigned long exponent) {
  BigRational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

}  // namespace stickylab
