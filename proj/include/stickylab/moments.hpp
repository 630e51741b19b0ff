#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stickylab/chain.hpp"
#include "stickylab/numerics.hpp"
#include "stickylab/poly.hpp"

namespace stickylab {

// shift_c(T) for a sorted 1-based subset T = {a_1 < ... < a_k} of [n]:
// sum over i of a_{c+ip} - a_{c+ip-1}, with a_t = 0 for t <= 0 and terms whose
// upper index exceeds k skipped.
long shift_value(const std::vector<int>& sorted_subset, int c, int p);

struct ShiftProfile {
  int n = 0, k = 0, p = 2, c = 0;
  std::map<long, BigInt> counts;  // shift value d -> number of k-subsets

  BigInt total() const;
};

// Exhaustive enumeration of all k-subsets of [n], bucketed by shift value.
// Throws std::length_error when C(n,k) > 10^6.
ShiftProfile shift_profile_oracle(int n, int k, int p, int c);

struct PhiClosedForm {
  BigRational without_prefactor;  // C(d-1, m-1) C(n-d, m), m = floor(|k-c|/(p-1))
  BigRational with_prefactor;     // the same divided by p^k
};

// Both printed candidates for the count of k-subsets with shift_c(T) = d;
// callers compare against shift_profile_oracle. Requires 0 <= c <= p and
// k <= d <= n-k.
PhiClosedForm phi_closed_form(int n, int k, int p, int c, int d);

// E[K_k(zero count)] via the exact DP distribution and the generalized table.
BigRational expected_krawtchouk_oracle(const WalkParams& params, int k);

// The same moment as an exact polynomial in the mixing bias.
Poly expected_krawtchouk_polynomial(int p, int n, int k);

struct ClosedFormEval {
  BigRational oracle;
  // Printed-variant values keyed by name:
  //   main_delta / main_lambda:      (1/p^k)   sum_d C(d-1,m-1)C(n-d,m) X^d
  //   appendix_delta / appendix_lambda: (p-1)^{n-k} sum_d ...            X^d
  //   shift_profile_delta: sum over (n-k)-subsets T of delta^{shift_0(T)}
  // with m = floor(k/(p-1)), d in [k, n-k], X = delta or delta/p.
  std::vector<std::pair<std::string, BigRational>> variants;
  std::vector<std::string> matches;  // names of variants equal to the oracle
};

// Tabulates every printed variant of the moment closed form against the
// oracle. Requires k % p == 0 and k <= n/2.
ClosedFormEval expected_krawtchouk_closed(int p, int n, int k, const BigRational& delta);

struct IncrementExpectation {
  UnitComplex numeric;   // sum_c w_p^c Pr[u = c]
  BigRational expected;  // delta, the exact value implied by the root sum
  bool matches;          // |numeric - delta| < 1e-12 and |imag| < 1e-12
};

IncrementExpectation increment_expectation(int p, const BigRational& delta);

struct ClosedFormReportRow {
  int p = 0, n = 0, k = 0;
  std::string delta_fraction;
  std::string matched;  // variant name, or "no variant matches"
};

// Runs expected_krawtchouk_closed over a grid and summarizes which printed
// variant (if any) the oracle pins per instance.
std::vector<ClosedFormReportRow> closed_form_report(
    const std::vector<std::tuple<int, int, BigRational>>& grid);  // (p, n, delta)

}  // namespace stickylab
