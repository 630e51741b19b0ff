#pragma once

#include <complex>

#include "stickylab/rational.hpp"

namespace stickylab {

using UnitComplex = std::complex<double>;

// C(n,k). Returns 0 when k < 0 or k > n, matching the summation conventions
// used throughout the Krawtchouk and shift-profile formulas.
BigInt binomial(long n, long k);

struct BinomialRatioBound {
  BigRational lhs;    // C(n,k)^2 / C(n,pk), exact
  double rhs_bound;   // (ne/k)^{2k} * (pk/n)^{pk}
  bool holds;         // lhs <= rhs_bound
};

// Elementary bound on C(n,k)^2 / C(n,pk) used by the geometric-tail argument.
// Preconditions: p >= 2, 1 <= k <= n/p.
BinomialRatioBound binomial_ratio_bound(long n, long k, long p);

// exp(2*pi*i*j/p), reduced mod p. Throws std::invalid_argument for p < 2.
UnitComplex root_of_unity(int p, long j);

// Sum over j in [0,p) of w_p^{kj}. Requires 0 <= k < p. Equals p at k = 0 and
// vanishes (numerically, ~1e-15) for 1 <= k < p.
UnitComplex root_power_sum(int p, int k);

}  // namespace stickylab
