#include "stickylab/chain.hpp"

#include <cstdlib>
#include <random>
#include <stdexcept>

#include "stickylab/numerics.hpp"

namespace stickylab {

namespace {

void validate_shape(int p, int n) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
}

// floor(q * 2^64) for q in [0,1]; saturates at 2^64-1 so that q == 1 always
// accepts. Used to turn rational probabilities into integer draw thresholds.
uint64_t threshold_u64(const BigRational& q) {
  BigInt scaled = (q.get_num() << 64) / q.get_den();
  if (mpz_sizeinbase(scaled.get_mpz_t(), 2) > 64) return ~uint64_t{0};
  uint64_t out = 0;
  for (int limb = 0; limb < 2; ++limb) {
    BigInt word = scaled % 4294967296UL;
    out |= static_cast<uint64_t>(word.get_ui()) << (32 * limb);
    scaled >>= 32;
  }
  return out;
}

}  // namespace

WalkParams params_from_mixture(int p, int n, const BigRational& delta_in) {
  validate_shape(p, n);
  BigRational delta = delta_in;
  delta.canonicalize();
  if (delta < 0 || delta >= 1) throw std::invalid_argument("delta must lie in [0,1)");
  WalkParams params;
  params.p = p;
  params.n = n;
  params.delta = delta;
  params.stay_prob = BigRational(1, p) + delta * BigRational(p - 1, p);
  params.switch_prob = (BigRational(1) - delta) / p;
  params.paper_lambda = delta / p;
  return params;
}

WalkParams params_from_paper_lambda(int p, int n, const BigRational& lambda) {
  validate_shape(p, n);
  if (lambda < 0 || lambda >= BigRational(1, p))
    throw std::invalid_argument("lambda must lie in [0, 1/p)");
  return params_from_mixture(p, n, lambda * p);
}

bool StochasticMatrix::is_symmetric() const {
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool StochasticMatrix::rows_sum_to_one() const {
  for (int i = 0; i < size; ++i) {
    BigRational sum(0);
    for (int j = 0; j < size; ++j) sum += at(i, j);
    if (sum != 1) return false;
  }
  return true;
}

bool StochasticMatrix::is_sticky() const {
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (at(i, j) != (i == j ? at(0, 0) : at(0, size > 1 ? 1 : 0))) return false;
  return true;
}

StochasticMatrix transition_matrix(const WalkParams& params) {
  StochasticMatrix m;
  m.size = params.p;
  m.entries.assign(static_cast<size_t>(params.p) * params.p, params.switch_prob);
  for (int i = 0; i < params.p; ++i) m.at(i, i) = params.stay_prob;
  return m;
}

int WalkString::zero_count() const {
  int count = 0;
  for (int s : symbols) count += (s == 0);
  return count;
}

WalkString sample_walk(const WalkParams& params, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const uint64_t stay_threshold = threshold_u64(params.stay_prob);
  WalkString walk;
  walk.symbols.reserve(params.n);
  int state = static_cast<int>(rng() % params.p);
  walk.symbols.push_back(state);
  for (int i = 1; i < params.n; ++i) {
    if (rng() >= stay_threshold) {
      // uniform over the other p-1 states
      int offset = 1 + static_cast<int>(rng() % (params.p - 1));
      state = (state + offset) % params.p;
    }
    walk.symbols.push_back(state);
  }
  return walk;
}

WalkString sample_walk_increments(const WalkParams& params, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const uint64_t delta_threshold = threshold_u64(params.delta);
  WalkString walk;
  walk.symbols.reserve(params.n);
  int state = static_cast<int>(rng() % params.p);
  walk.symbols.push_back(state);
  for (int i = 1; i < params.n; ++i) {
    int increment = 0;
    if (rng() >= delta_threshold) increment = static_cast<int>(rng() % params.p);
    state = (state + increment) % params.p;
    walk.symbols.push_back(state);
  }
  return walk;
}

BigRational string_probability(const WalkParams& params, const WalkString& s) {
  if (static_cast<int>(s.symbols.size()) != params.n)
    throw std::invalid_argument("string length does not match n");
  BigRational prob(1, params.p);
  for (size_t i = 0; i + 1 < s.symbols.size(); ++i) {
    if (s.symbols[i] < 0 || s.symbols[i] >= params.p)
      throw std::invalid_argument("symbol out of range");
    prob *= (s.symbols[i + 1] == s.symbols[i]) ? params.stay_prob : params.switch_prob;
  }
  if (!s.symbols.empty() && (s.symbols.back() < 0 || s.symbols.back() >= params.p))
    throw std::invalid_argument("symbol out of range");
  return prob;
}

uint64_t enumeration_cap() {
  if (const char* env = std::getenv("STICKY_LAB_MAX_ENUM")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) return parsed;
  }
  return 2'000'000;
}

std::map<std::vector<int>, BigRational> enumerate_distribution(const WalkParams& params) {
  const uint64_t cap = enumeration_cap();
  uint64_t total = 1;
  for (int i = 0; i < params.n; ++i) {
    total *= static_cast<uint64_t>(params.p);
    if (total > cap) throw std::length_error("enumeration cap exceeded");
  }
  std::map<std::vector<int>, BigRational> out;
  std::vector<int> symbols(params.n, 0);
  WalkString walk;
  for (uint64_t index = 0; index < total; ++index) {
    walk.symbols = symbols;
    out.emplace(symbols, string_probability(params, walk));
    for (int pos = params.n - 1; pos >= 0; --pos) {
      if (++symbols[pos] < params.p) break;
      symbols[pos] = 0;
    }
  }
  return out;
}

ZeroCountDistribution uniform_zero_distribution(int p, int n) {
  validate_shape(p, n);
  ZeroCountDistribution dist;
  dist.probs.resize(n + 1);
  BigInt pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
  for (int l = 0; l <= n; ++l) {
    BigInt weight;
    mpz_ui_pow_ui(weight.get_mpz_t(), static_cast<unsigned long>(p - 1),
                  static_cast<unsigned long>(n - l));
    dist.probs[l] = BigRational(binomial(n, l) * weight, pn);
    dist.probs[l].canonicalize();
  }
  return dist;
}

ZeroCountDistribution zero_count_distribution(const WalkParams& params) {
  const int n = params.n;
  // zero[c]: mass with c zeros so far and current symbol 0;
  // other[c]: same with current symbol nonzero (aggregate over p-1 symbols).
  std::vector<BigRational> zero(n + 1, BigRational(0)), other(n + 1, BigRational(0));
  zero[1] = BigRational(1, params.p);
  other[0] = BigRational(params.p - 1, params.p);

  const BigRational to_zero = params.switch_prob;
  const BigRational leave_zero = params.switch_prob * (params.p - 1);
  const BigRational stay_other = params.stay_prob + params.switch_prob * (params.p - 2);

  for (int step = 1; step < n; ++step) {
    std::vector<BigRational> next_zero(n + 1, BigRational(0)), next_other(n + 1, BigRational(0));
    for (int c = 0; c <= step; ++c) {
      if (zero[c] != 0) {
        next_zero[c + 1] += zero[c] * params.stay_prob;
        next_other[c] += zero[c] * leave_zero;
      }
      if (other[c] != 0) {
        next_zero[c + 1] += other[c] * to_zero;
        next_other[c] += other[c] * stay_other;
      }
    }
    zero = std::move(next_zero);
    other = std::move(next_other);
  }

  ZeroCountDistribution dist;
  dist.probs.resize(n + 1);
  for (int c = 0; c <= n; ++c) dist.probs[c] = zero[c] + other[c];
  return dist;
}

std::vector<Poly> zero_count_polynomial(int p, int n) {
  validate_shape(p, n);
  if (n > 60) throw std::invalid_argument("polynomial DP capped at n <= 60");
  // Transition weights as polynomials in the bias:
  //   stay       = (1 + (p-1) x) / p
  //   to_zero    = (1 - x) / p
  //   leave_zero = (p-1)(1 - x) / p
  //   stay_other = (p - 1 + x) / p
  const Poly stay(std::vector<BigRational>{BigRational(1, p), BigRational(p - 1, p)});
  const Poly to_zero(std::vector<BigRational>{BigRational(1, p), BigRational(-1, p)});
  const Poly leave_zero = to_zero * BigRational(p - 1);
  const Poly stay_other(std::vector<BigRational>{BigRational(p - 1, p), BigRational(1, p)});

  std::vector<Poly> zero(n + 1), other(n + 1);
  zero[1] = Poly(BigRational(1, p));
  other[0] = Poly(BigRational(p - 1, p));

  for (int step = 1; step < n; ++step) {
    std::vector<Poly> next_zero(n + 1), next_other(n + 1);
    for (int c = 0; c <= step; ++c) {
      if (!zero[c].is_zero()) {
        next_zero[c + 1] += zero[c] * stay;
        next_other[c] += zero[c] * leave_zero;
      }
      if (!other[c].is_zero()) {
        next_zero[c + 1] += other[c] * to_zero;
        next_other[c] += other[c] * stay_other;
      }
    }
    zero = std::move(next_zero);
    other = std::move(next_other);
  }

  std::vector<Poly> out(n + 1);
  for (int c = 0; c <= n; ++c) out[c] = zero[c] + other[c];
  return out;
}

GroupedChain group_states(const WalkParams& params, int k) {
  if (k < 2) throw std::invalid_argument("group_states: k must be >= 2");
  if (params.p % k != 0) throw std::invalid_argument("group_states: k must divide p");
  const int block = params.p / k;

  StochasticMatrix grouped;
  grouped.size = k;
  grouped.entries.assign(static_cast<size_t>(k) * k, BigRational(0));
  const StochasticMatrix full = transition_matrix(params);
  // Probability of moving from any fixed state of block i into block j; by
  // symmetry the choice of representative does not matter.
  for (int i = 0; i < k; ++i) {
    const int representative = i * block;
    for (int j = 0; j < k; ++j)
      for (int t = 0; t < block; ++t) grouped.at(i, j) += full.at(representative, j * block + t);
  }
  if (!grouped.is_sticky() || !grouped.rows_sum_to_one())
    throw std::logic_error("grouped chain is not sticky");

  GroupedChain out;
  out.grouped = std::move(grouped);
  out.effective = params_from_mixture(k, params.n, params.delta);
  if (out.grouped.at(0, 0) != out.effective.stay_prob)
    throw std::logic_error("grouped stay probability mismatch");
  return out;
}

}  // namespace stickylab
