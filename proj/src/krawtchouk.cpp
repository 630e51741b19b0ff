#include "stickylab/krawtchouk.hpp"

#include <cmath>
#include <stdexcept>

#include "stickylab/chain.hpp"

namespace stickylab {

namespace {

void check_indices(int n, int k, int l) {
  if (n < 0 || k < 0 || k > n || l < 0 || l > n)
    throw std::out_of_range("krawtchouk index out of range");
}

BigInt int_pow(long base, long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return out;
}

// Visits every subset of {0..n-1} of the given size.
template <typename Fn>
void for_each_subset(int n, int size, Fn&& fn) {
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    fn(std::span<const int>(idx));
    int pos = size - 1;
    while (pos >= 0 && idx[pos] == n - size + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

BigInt binary_krawtchouk(int n, int k, int l) {
  check_indices(n, k, l);
  BigInt total(0);
  for (int t = 0; t <= k; ++t) {
    BigInt term = binomial(l, t) * binomial(n - l, k - t);
    total += (t % 2 == 0) ? term : -term;
  }
  return total;
}

BigInt generalized_krawtchouk(int n, int p, int k, int l) {
  check_indices(n, k, l);
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  BigInt total(0);
  for (int a = 0; a <= k; ++a) {
    if (a > l || k - a > n - l) continue;
    BigInt term = binomial(l, a) * binomial(n - l, k - a) * int_pow(p - 1, l - a);
    total += ((n - l - k + a) % 2 == 0) ? term : -term;
  }
  return total;
}

BigInt binary_defining_sum(int n, int k, std::span<const int> alpha) {
  if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("alpha size mismatch");
  BigInt total(0);
  for_each_subset(n, k, [&](std::span<const int> ones) {
    int dot = 0;
    for (int i : ones) dot += alpha[i];
    total += (dot % 2 == 0) ? 1 : -1;
  });
  return total;
}

UnitComplex generalized_defining_sum(int n, int p, int k, std::span<const int> alpha) {
  if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("alpha size mismatch");
  UnitComplex total(0.0, 0.0);
  for_each_subset(n, k, [&](std::span<const int> zeros) {
    std::vector<int> nonzero_positions;
    nonzero_positions.reserve(n - k);
    size_t zi = 0;
    for (int i = 0; i < n; ++i) {
      if (zi < zeros.size() && zeros[zi] == i) {
        ++zi;
      } else {
        nonzero_positions.push_back(i);
      }
    }
    // odometer over nonzero values in [1, p)
    std::vector<int> values(nonzero_positions.size(), 1);
    while (true) {
      long dot = 0;
      for (size_t i = 0; i < values.size(); ++i) dot += alpha[nonzero_positions[i]] * values[i];
      total += root_of_unity(p, dot);
      size_t pos = 0;
      while (pos < values.size() && values[pos] == p - 1) values[pos++] = 1;
      if (pos == values.size()) break;
      ++values[pos];
    }
  });
  return total;
}

KrawtchoukTable KrawtchoukTable::binary(int n) {
  KrawtchoukTable table;
  table.variant = KrawtchoukVariant::binary;
  table.n = n;
  table.p = 2;
  table.values.resize(static_cast<size_t>(n + 1) * (n + 1));
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= n; ++l) table.values[static_cast<size_t>(k) * (n + 1) + l] = binary_krawtchouk(n, k, l);
  return table;
}

KrawtchoukTable KrawtchoukTable::generalized(int n, int p) {
  KrawtchoukTable table;
  table.variant = KrawtchoukVariant::generalized;
  table.n = n;
  table.p = p;
  table.values.resize(static_cast<size_t>(n + 1) * (n + 1));
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= n; ++l)
      table.values[static_cast<size_t>(k) * (n + 1) + l] = generalized_krawtchouk(n, p, k, l);
  return table;
}

BigRational binary_inner_product(int n, int r, int s) {
  check_indices(n, r, s);
  BigInt total(0);
  for (int l = 0; l <= n; ++l)
    total += binomial(n, l) * binary_krawtchouk(n, r, l) * binary_krawtchouk(n, s, l);
  BigRational out(total, int_pow(2, n));
  out.canonicalize();
  return out;
}

BigRational generalized_inner_product(int n, int p, int r, int s) {
  check_indices(n, r, s);
  const ZeroCountDistribution weights = uniform_zero_distribution(p, n);
  BigRational total(0);
  for (int l = 0; l <= n; ++l)
    total += weights.probs[l] * BigRational(generalized_krawtchouk(n, p, r, l) *
                                            generalized_krawtchouk(n, p, s, l));
  return total;
}

InvarianceReport invariance_check(int n, int p, int k, int l) {
  check_indices(n, k, l);
  if (n > 8) throw std::invalid_argument("invariance_check capped at n <= 8");
  InvarianceReport report;
  UnitComplex first(0.0, 0.0);
  for_each_subset(n, l, [&](std::span<const int> zero_positions) {
    std::vector<int> alpha(n, 1);
    for (int i : zero_positions) alpha[i] = 0;
    const UnitComplex value = generalized_defining_sum(n, p, k, alpha);
    if (report.alphas_checked == 0) {
      first = value;
    } else {
      report.max_pairwise_deviation =
          std::max(report.max_pairwise_deviation, std::abs(value - first));
    }
    ++report.alphas_checked;
  });
  report.invariant = report.max_pairwise_deviation < 1e-9;
  return report;
}

ExpansionCoefficients expansion_coefficients(const std::vector<BigRational>& f, int n, int p) {
  if (static_cast<int>(f.size()) != n + 1) throw std::invalid_argument("f must have n+1 entries");
  const ZeroCountDistribution weights = uniform_zero_distribution(p, n);
  const KrawtchoukTable table = KrawtchoukTable::generalized(n, p);
  ExpansionCoefficients out;
  out.coeffs.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    BigRational inner(0);
    for (int l = 0; l <= n; ++l) inner += weights.probs[l] * f[l] * BigRational(table.at(k, l));
    out.coeffs[k] = inner / BigRational(binomial(n, k) * int_pow(p - 1, n - k));
  }
  return out;
}

std::vector<BigRational> reconstruct(const ExpansionCoefficients& coeffs, int n, int p) {
  if (static_cast<int>(coeffs.coeffs.size()) != n + 1)
    throw std::invalid_argument("coefficient count mismatch");
  const KrawtchoukTable table = KrawtchoukTable::generalized(n, p);
  std::vector<BigRational> out(n + 1, BigRational(0));
  for (int l = 0; l <= n; ++l)
    for (int k = 0; k <= n; ++k) out[l] += coeffs.coeffs[k] * BigRational(table.at(k, l));
  return out;
}

ReciprocityReport reciprocity_check(int n, int p, KrawtchoukVariant variant) {
  ReciprocityReport report;
  report.variant = variant;
  report.n = n;
  report.p = p;
  const KrawtchoukTable table = variant == KrawtchoukVariant::binary
                                    ? KrawtchoukTable::binary(n)
                                    : KrawtchoukTable::generalized(n, p);
  for (int k = 0; k <= n; ++k) {
    for (int l = 0; l <= n; ++l) {
      BigRational lhs(table.at(k, l), binomial(n, k) * int_pow(p - 1, n - k));
      BigRational rhs(table.at(l, k), binomial(n, l) * int_pow(p - 1, n - l));
      lhs.canonicalize();
      rhs.canonicalize();
      if (lhs != rhs) report.violations.push_back({k, l, lhs, rhs});
    }
  }
  return report;
}

}  // namespace stickylab
