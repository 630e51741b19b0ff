#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "stickylab/chain.hpp"

namespace stickylab {

// q(l) = Pr[|s|_0 = l] * p^n / (C(n,l) (p-1)^{n-l}), from the exact DP.
std::vector<BigRational> probability_ratio(const WalkParams& params);

// Half the l1 distance between the walk's zero-count law and the uniform zero
// distribution. Also evaluates (1/2) E_b |q(b) - 1| and requires exact
// equality of the two forms.
BigRational tvd_exact(const WalkParams& params);

// Pr[|s|_0 = l] = (1/p^n) sum_k K_l(k) E[K_k(|s|_0)], rebuilt from the moment
// vector. A verification target compared against the DP, never a dependency
// of tvd_exact. Requires n <= 20.
ZeroCountDistribution reconstruct_via_krawtchouk(const WalkParams& params);

struct SecondMoment {
  BigRational direct;         // E_b[(q(b)-1)^2] under the zero distribution
  BigRational printed_rhs;    // sum_{k=1}^{n}   E[K_k]^2 / (C(n,k)(p-1)^{n-k})
  BigRational corrected_rhs;  // sum_{k=0}^{n-1} E[K_k]^2 / (C(n,k)(p-1)^{n-k})
  bool printed_matches = false;
  bool corrected_matches = false;
};

// Two-route evaluation of the second moment. Requires n <= 60. All downstream
// bounds use `direct`.
SecondMoment second_moment(const WalkParams& params);

// (1/2) sqrt(rho^2 / (1 - rho^2)) with rho = e*lambda / (1 - lambda), the
// geometric-tail envelope. Throws std::domain_error ("series does not
// converge") for lambda >= 1/(1+e).
double theorem_bound(double lambda);

struct TvdReport {
  WalkParams params;
  BigRational tvd;
  BigRational expectation_form;       // (1/2) E|q-1|, equal to tvd
  double cs_bound = 0.0;              // (1/2) sqrt(direct second moment)
  BigRational second_moment_direct;
  std::optional<double> envelope;     // theorem_bound at delta, when delta < 1/(1+e)
  double ratio_to_lambda = 0.0;       // tvd / paper_lambda, 0 at delta = 0
  double ratio_to_delta = 0.0;        // tvd / delta, 0 at delta = 0
};

TvdReport make_report(const WalkParams& params);

struct SweepCell {
  int p = 0, n = 0;
  BigRational delta;
  std::optional<TvdReport> report;
  std::string skip_reason;  // nonempty iff the cell was skipped
};

struct SweepResult {
  std::vector<SweepCell> cells;                 // grid order
  std::map<int, double> sup_ratio_lambda;       // per p, sup of tvd/paper_lambda
  std::map<int, double> sup_ratio_delta;        // per p, sup of tvd/delta
};

// Evaluates every (p, n, delta) cell with a pool of workers; cells beyond the
// DP caps are skipped with a note. Output order follows grid order.
SweepResult sweep(const std::vector<std::tuple<int, int, BigRational>>& grid);

// Columns: p,n,delta,paper_lambda,tvd_exact,cs_bound,second_moment,
// theorem_bound,ratio_tvd_over_lambda,ratio_tvd_over_delta. Exact rationals
// render as "<30-digit decimal> <num/den>"; floats use %.17g; skipped cells
// leave value columns empty.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

}  // namespace stickylab
