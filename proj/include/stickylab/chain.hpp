#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "stickylab/poly.hpp"
#include "stickylab/rational.hpp"

namespace stickylab {

// Parameters of the generalized sticky random walk on p states. The canonical
// bias is the mixture weight `delta` of the transition law
// (1-delta)*Uniform(Z_p) + delta*Stay, which is also the chain's second
// eigenvalue. `paper_lambda` = delta/p is the per-state surplus bias in the
// stay probability 1/p + (p-1)*paper_lambda.
struct WalkParams {
  int p = 2;
  int n = 1;
  BigRational delta;
  BigRational stay_prob;
  BigRational switch_prob;   // probability of each specific other state
  BigRational paper_lambda;  // = delta / p
};

// Requires p >= 2, n >= 1, 0 <= delta < 1.
WalkParams params_from_mixture(int p, int n, const BigRational& delta);

// Requires 0 <= lambda < 1/p. Equivalent to params_from_mixture(p, n, p*lambda).
WalkParams params_from_paper_lambda(int p, int n, const BigRational& lambda);

// Dense p x p matrix of exact rationals, row-stochastic by construction.
struct StochasticMatrix {
  int size = 0;
  std::vector<BigRational> entries;  // row-major

  const BigRational& at(int i, int j) const { return entries[static_cast<size_t>(i) * size + j]; }
  BigRational& at(int i, int j) { return entries[static_cast<size_t>(i) * size + j]; }

  bool is_symmetric() const;
  bool rows_sum_to_one() const;
  // Sticky form: constant diagonal and constant off-diagonal.
  bool is_sticky() const;
};

StochasticMatrix transition_matrix(const WalkParams& params);

struct WalkString {
  std::vector<int> symbols;  // each in [0, p)

  int zero_count() const;
};

// Direct Markov sampler: s_0 uniform, then stay/switch. Deterministic given
// seed; the sampling path uses only integer threshold comparisons.
WalkString sample_walk(const WalkParams& params, uint64_t seed);

// Increment sampler: s_i = sum_{j<=i} u_j mod p with u_1 uniform and
// u_j ~ (1-delta)*Uniform(Z_p) + delta*point_mass(0) for j >= 2. Same law as
// sample_walk.
WalkString sample_walk_increments(const WalkParams& params, uint64_t seed);

BigRational string_probability(const WalkParams& params, const WalkString& s);

// Default enumeration cap, overridable through STICKY_LAB_MAX_ENUM.
uint64_t enumeration_cap();

// Exact probability of every string in Z_p^n. Throws std::length_error when
// p^n exceeds the enumeration cap.
std::map<std::vector<int>, BigRational> enumerate_distribution(const WalkParams& params);

struct ZeroCountDistribution {
  std::vector<BigRational> probs;  // indexed by zero count, size n+1
};

// Law of the zero count under n i.i.d. uniform symbols:
// C(n,l) (p-1)^{n-l} / p^n.
ZeroCountDistribution uniform_zero_distribution(int p, int n);

// Exact distribution of the zero count via a DP over (zero count, indicator
// current-symbol-is-zero); the p-1 nonzero symbols collapse into one aggregate
// state, which permutation invariance justifies.
ZeroCountDistribution zero_count_distribution(const WalkParams& params);

// Same DP run in the ring of polynomials in the mixing bias; entry l is
// Pr[zero count = l] as an exact polynomial in delta.
std::vector<Poly> zero_count_polynomial(int p, int n);

struct GroupedChain {
  StochasticMatrix grouped;  // induced k-state chain
  WalkParams effective;      // sticky parameters of the grouped chain
};

// Partitions the p states into k equal blocks (block 0 holds symbol 0) and
// returns the induced chain. Requires k >= 2 and k | p. The grouped chain is
// sticky with the same mixture weight delta.
GroupedChain group_states(const WalkParams& params, int k);

}  // namespace stickylab
