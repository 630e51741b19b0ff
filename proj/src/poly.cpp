#include "stickylab/poly.hpp"

#include <stdexcept>

namespace stickylab {

namespace {
const BigRational kZero(0);
}

Poly Poly::variable() {
  return Poly(std::vector<BigRational>{BigRational(0), BigRational(1)});
}

const BigRational& Poly::operator[](size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

void Poly::normalize() {
  if (coeffs_.empty()) coeffs_.push_back(BigRational(0));
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator+(const Poly& other) const {
  std::vector<BigRational> out(std::max(coeffs_.size(), other.coeffs_.size()), BigRational(0));
  for (size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i] + other[i];
  return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& other) const {
  std::vector<BigRational> out(std::max(coeffs_.size(), other.coeffs_.size()), BigRational(0));
  for (size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i] - other[i];
  return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& other) const {
  std::vector<BigRational> out(coeffs_.size() + other.coeffs_.size() - 1, BigRational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly Poly::operator*(const BigRational& scalar) const {
  std::vector<BigRational> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * scalar;
  return Poly(std::move(out));
}

BigRational Poly::evaluate(const BigRational& x) const {
  BigRational acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

}  // namespace stickylab
