#pragma once

#include <span>
#include <vector>

#include "stickylab/numerics.hpp"
#include "stickylab/rational.hpp"

namespace stickylab {

enum class KrawtchoukVariant { binary, generalized };

// Binary Krawtchouk value: sum_t (-1)^t C(l,t) C(n-l,k-t).
BigInt binary_krawtchouk(int n, int k, int l);

// Generalized Krawtchouk value for the defining character sum over strings
// y in Z_p^n with k zero coordinates, against a reference string alpha in
// {0,1}^n with l zero coordinates. Computed by the coordinate-factorized
// closed form
//   sum_a C(l,a) C(n-l,k-a) (p-1)^{l-a} (-1)^{n-l-k+a},
// which the test suite validates against the literal complex sum.
BigInt generalized_krawtchouk(int n, int p, int k, int l);

// Literal defining sums, used as small-instance oracles.
// alpha holds n entries in {0,1}.
BigInt binary_defining_sum(int n, int k, std::span<const int> alpha);
UnitComplex generalized_defining_sum(int n, int p, int k, std::span<const int> alpha);

struct KrawtchoukTable {
  KrawtchoukVariant variant;
  int n = 0;
  int p = 2;
  std::vector<BigInt> values;  // (n+1) x (n+1), row k, column l

  const BigInt& at(int k, int l) const { return values[static_cast<size_t>(k) * (n + 1) + l]; }

  static KrawtchoukTable binary(int n);
  static KrawtchoukTable generalized(int n, int p);
};

// E_{b ~ Bin(n,1/2)}[K_r(b) K_s(b)] for the binary table; equals
// delta_{rs} C(n,s).
BigRational binary_inner_product(int n, int r, int s);

// Inner product against the uniform zero distribution for the generalized
// table; equals delta_{rs} C(n,r) (p-1)^{n-r} (verified, not assumed, for
// composite p).
BigRational generalized_inner_product(int n, int p, int r, int s);

struct InvarianceReport {
  int alphas_checked = 0;
  double max_pairwise_deviation = 0.0;
  bool invariant = false;
};

// Evaluates the defining sum at every alpha with l zero coordinates and
// reports the maximum pairwise deviation (must be 0 for the table to be
// well-defined as a function of l alone).
InvarianceReport invariance_check(int n, int p, int k, int l);

struct ExpansionCoefficients {
  std::vector<BigRational> coeffs;  // index k
};

// Coefficients of f in the generalized Krawtchouk basis:
// f_hat(k) = E_{b ~ zero distribution}[f(b) K_k(b)] / (C(n,k) (p-1)^{n-k}).
ExpansionCoefficients expansion_coefficients(const std::vector<BigRational>& f, int n, int p);

// f(l) = sum_k f_hat(k) K_k(l). Right inverse of expansion_coefficients.
std::vector<BigRational> reconstruct(const ExpansionCoefficients& coeffs, int n, int p);

struct ReciprocityViolation {
  int k = 0;
  int l = 0;
  BigRational lhs;
  BigRational rhs;
};

struct ReciprocityReport {
  KrawtchoukVariant variant;
  int n = 0;
  int p = 2;
  std::vector<ReciprocityViolation> violations;

  bool holds() const { return violations.empty(); }
};

// Tests K_k(l) / (C(n,k)(p-1)^{n-k}) == K_l(k) / (C(n,l)(p-1)^{n-l}) over all
// (k,l). The generalized variant uses the generalized table; the binary
// variant applies the same (p-1)-weighted identity to the binary table, which
// is where the main text's claim breaks for p > 2.
ReciprocityReport reciprocity_check(int n, int p, KrawtchoukVariant variant);

}  // namespace stickylab
