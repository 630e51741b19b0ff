#include "stickylab/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "stickylab/krawtchouk.hpp"
#include "stickylab/numerics.hpp"

namespace stickylab {

namespace {

BigInt int_pow(long base, long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return out;
}

template <typename Fn>
void for_each_sorted_subset(int n, int size, Fn&& fn) {
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i + 1;  // 1-based elements
  while (true) {
    fn(idx);
    int pos = size - 1;
    while (pos >= 0 && idx[pos] == n - size + pos + 1) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

long shift_value(const std::vector<int>& sorted_subset, int c, int p) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  const int k = static_cast<int>(sorted_subset.size());
  auto element = [&](int t) -> long {
    if (t < 1 || t > k) return 0;  // a_t = 0 outside [1, k]
    return sorted_subset[t - 1];
  };
  long total = 0;
  const int bound = std::abs(k - c) / p;
  for (int i = 0; i <= bound; ++i) {
    const int upper = c + i * p;
    if (upper > k) continue;
    total += element(upper) - element(upper - 1);
  }
  return total;
}

BigInt ShiftProfile::total() const {
  BigInt sum(0);
  for (const auto& [d, count] : counts) sum += count;
  return sum;
}

ShiftProfile shift_profile_oracle(int n, int k, int p, int c) {
  if (k < 0 || k > n) throw std::invalid_argument("k must lie in [0, n]");
  if (binomial(n, k) > 1'000'000) throw std::length_error("subset enumeration cap exceeded");
  ShiftProfile profile;
  profile.n = n;
  profile.k = k;
  profile.p = p;
  profile.c = c;
  for_each_sorted_subset(n, k, [&](const std::vector<int>& subset) {
    profile.counts[shift_value(subset, c, p)] += 1;
  });
  return profile;
}

PhiClosedForm phi_closed_form(int n, int k, int p, int c, int d) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  const long m = std::abs(static_cast<long>(k) - c) / (p - 1);
  PhiClosedForm out;
  out.without_prefactor = BigRational(binomial(d - 1, m - 1) * binomial(n - d, m));
  out.with_prefactor = out.without_prefactor / BigRational(int_pow(p, k));
  out.with_prefactor.canonicalize();
  return out;
}

BigRational expected_krawtchouk_oracle(const WalkParams& params, int k) {
  const ZeroCountDistribution dist = zero_count_distribution(params);
  const KrawtchoukTable table = KrawtchoukTable::generalized(params.n, params.p);
  BigRational total(0);
  for (int l = 0; l <= params.n; ++l) total += dist.probs[l] * BigRational(table.at(k, l));
  return total;
}

Poly expected_krawtchouk_polynomial(int p, int n, int k) {
  const std::vector<Poly> dist = zero_count_polynomial(p, n);
  const KrawtchoukTable table = KrawtchoukTable::generalized(n, p);
  Poly total;
  for (int l = 0; l <= n; ++l) total += dist[l] * BigRational(table.at(k, l));
  return total;
}

ClosedFormEval expected_krawtchouk_closed(int p, int n, int k, const BigRational& delta) {
  if (k % p != 0) throw std::invalid_argument("closed form requires p | k");
  if (2 * k > n) throw std::invalid_argument("closed form requires k <= n/2");

  ClosedFormEval eval;
  eval.oracle = expected_krawtchouk_oracle(params_from_mixture(p, n, delta), k);

  const long m = k / (p - 1);
  const BigRational lambda = delta / p;
  BigRational core_delta(0), core_lambda(0);
  for (int d = k; d <= n - k; ++d) {
    const BigRational count(binomial(d - 1, m - 1) * binomial(n - d, m));
    core_delta += count * pow_rational(delta, d);
    core_lambda += count * pow_rational(lambda, d);
  }
  const BigRational main_prefactor(BigInt(1), int_pow(p, k));
  const BigRational appendix_prefactor(int_pow(p - 1, n - k));
  eval.variants.emplace_back("main_delta", main_prefactor * core_delta);
  eval.variants.emplace_back("main_lambda", main_prefactor * core_lambda);
  eval.variants.emplace_back("appendix_delta", appendix_prefactor * core_delta);
  eval.variants.emplace_back("appendix_lambda", appendix_prefactor * core_lambda);

  const ShiftProfile profile = shift_profile_oracle(n, n - k, p, 0);
  BigRational shift_sum(0);
  for (const auto& [d, count] : profile.counts) {
    if (d < 0) throw std::logic_error("negative shift value");
    shift_sum += BigRational(count) * pow_rational(delta, static_cast<unsigned long>(d));
  }
  eval.variants.emplace_back("shift_profile_delta", shift_sum);

  for (auto& [name, value] : eval.variants) {
    value.canonicalize();
    if (value == eval.oracle) eval.matches.push_back(name);
  }
  return eval;
}

IncrementExpectation increment_expectation(int p, const BigRational& delta) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  if (delta < 0 || delta >= 1) throw std::invalid_argument("delta must lie in [0,1)");
  const BigRational uniform_share = (BigRational(1) - delta) / p;
  const double share = uniform_share.get_d();
  IncrementExpectation out;
  out.numeric = UnitComplex(0.0, 0.0);
  for (int c = 0; c < p; ++c) {
    double prob = share;
    if (c == 0) prob += delta.get_d();
    out.numeric += root_of_unity(p, c) * prob;
  }
  out.expected = delta;
  out.matches = std::abs(out.numeric.imag()) < 1e-12 &&
                std::abs(out.numeric.real() - delta.get_d()) < 1e-12;
  return out;
}

std::vector<ClosedFormReportRow> closed_form_report(
    const std::vector<std::tuple<int, int, BigRational>>& grid) {
  std::vector<ClosedFormReportRow> rows;
  for (const auto& [p, n, delta] : grid) {
    for (int k = p; 2 * k <= n; k += p) {
      const ClosedFormEval eval = expected_krawtchouk_closed(p, n, k, delta);
      ClosedFormReportRow row;
      row.p = p;
      row.n = n;
      row.k = k;
      row.delta_fraction = fraction_string(delta);
      row.matched = eval.matches.empty() ? "no variant matches" : eval.matches.front();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace stickylab
