#include "stickylab/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stickylab {

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n < 0");
  if (k < 0 || k > n) return BigInt(0);
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BinomialRatioBound binomial_ratio_bound(long n, long k, long p) {
  if (p < 2 || k < 1 || k * p > n)
    throw std::invalid_argument("binomial_ratio_bound: need p >= 2 and 1 <= k <= n/p");
  BinomialRatioBound out;
  out.lhs = BigRational(binomial(n, k) * binomial(n, k), binomial(n, p * k));
  out.lhs.canonicalize();
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double pk = static_cast<double>(p) * kd;
  // evaluate in log space so large exponents stay representable
  out.rhs_bound = std::exp(2.0 * kd * std::log(nd * std::numbers::e / kd) +
                           pk * std::log(pk / nd));
  out.holds = out.lhs.get_d() <= out.rhs_bound * (1.0 + 1e-12);
  return out;
}

UnitComplex root_of_unity(int p, long j) {
  if (p < 2) throw std::invalid_argument("root_of_unity: p < 2");
  long r = j % p;
  if (r < 0) r += p;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(p);
  return UnitComplex(std::cos(angle), std::sin(angle));
}

UnitComplex root_power_sum(int p, int k) {
  if (p < 2) throw std::invalid_argument("root_power_sum: p < 2");
  if (k < 0 || k >= p) throw std::invalid_argument("root_power_sum: k out of [0,p)");
  UnitComplex total(0.0, 0.0);
  for (int j = 0; j < p; ++j) total += root_of_unity(p, static_cast<long>(k) * j);
  return total;
}

}  // namespace stickylab
