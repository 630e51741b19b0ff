#pragma once

#include <vector>

#include "stickylab/rational.hpp"

namespace stickylab {

// Dense univariate polynomial with exact rational coefficients. Used as the
// coefficient ring for the symbolic zero-count dynamic program: running the DP
// over Poly instead of BigRational yields the distribution as a polynomial in
// the mixing bias.
class Poly {
 public:
  Poly() : coeffs_{BigRational(0)} {}
  explicit Poly(BigRational constant) : coeffs_{std::move(constant)} { normalize(); }
  explicit Poly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Poly variable();  // the monomial x

  size_t degree() const { return coeffs_.size() - 1; }
  const BigRational& operator[](size_t i) const;
  const std::vector<BigRational>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator*(const BigRational& scalar) const;
  Poly& operator+=(const Poly& other) { return *this = *this + other; }

  bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }

  BigRational evaluate(const BigRational& x) const;  // Horner

 private:
  void normalize();
  std::vector<BigRational> coeffs_;  // coeffs_[i] multiplies x^i, never empty
};

}  // namespace stickylab
