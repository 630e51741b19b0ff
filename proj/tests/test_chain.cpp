#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <random>

#include "stickylab/chain.hpp"

using namespace stickylab;

namespace {

const BigRational kDeltas[] = {BigRational(0), BigRational(1, 4), BigRational(1, 2),
                               BigRational(9, 10)};

std::vector<BigRational> enumeration_marginal(const WalkParams& params) {
  std::vector<BigRational> marginal(params.n + 1, BigRational(0));
  for (const auto& [symbols, prob] : enumerate_distribution(params)) {
    int zeros = 0;
    for (int s : symbols) zeros += (s == 0);
    marginal[zeros] += prob;
  }
  return marginal;
}

double chi_square_p_value(const std::vector<long>& observed,
                          const std::vector<double>& expected) {
  double statistic = 0.0;
  int dof = 0;
  for (size_t i = 0; i < observed.size(); ++i) {
    if (expected[i] < 5.0) continue;  // merge-free: skip sparse bins
    const double diff = observed[i] - expected[i];
    statistic += diff * diff / expected[i];
    ++dof;
  }
  boost::math::chi_squared dist(dof - 1);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

}  // namespace

TEST_CASE("parameter constructors") {
  const WalkParams a = params_from_mixture(3, 6, BigRational(3, 10));
  CHECK(a.stay_prob == BigRational(8, 15));
  CHECK(a.switch_prob == BigRational(7, 30));
  CHECK(a.paper_lambda == BigRational(1, 10));
  CHECK(a.stay_prob + BigRational(a.p - 1) * a.switch_prob == 1);

  const WalkParams b = params_from_paper_lambda(4, 5, BigRational(1, 20));
  CHECK(b.delta == BigRational(1, 5));
  CHECK(b.stay_prob == BigRational(2, 5));

  const WalkParams c = params_from_mixture(5, 4, BigRational(0));
  CHECK(c.stay_prob == BigRational(1, 5));
  CHECK(c.switch_prob == BigRational(1, 5));

  const WalkParams d = params_from_mixture(2, 10, BigRational(1, 3));
  CHECK(d.stay_prob == BigRational(2, 3));  // (1 + delta) / 2 at p = 2

  CHECK_THROWS_AS(params_from_mixture(2, 3, BigRational(1)), std::invalid_argument);
  CHECK_THROWS_AS(params_from_mixture(1, 3, BigRational(0)), std::invalid_argument);
  CHECK_THROWS_AS(params_from_paper_lambda(2, 3, BigRational(1, 2)), std::invalid_argument);
}

TEST_CASE("transition matrix structure") {
  const WalkParams params = params_from_mixture(2, 4, BigRational(1, 2));
  const StochasticMatrix m = transition_matrix(params);
  CHECK(m.at(0, 0) == BigRational(3, 4));
  CHECK(m.at(0, 1) == BigRational(1, 4));
  CHECK(m.is_symmetric());
  CHECK(m.is_sticky());
  CHECK(m.rows_sum_to_one());

  for (int p = 2; p <= 6; ++p) {
    const StochasticMatrix u = transition_matrix(params_from_mixture(p, 2, BigRational(0)));
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) CHECK(u.at(i, j) == BigRational(1, p));
  }
}

TEST_CASE("string probability") {
  const WalkParams params = params_from_mixture(2, 2, BigRational(1, 4));
  WalkString s;
  s.symbols = {0, 0};
  CHECK(string_probability(params, s) == BigRational(1, 2) * params.stay_prob);

  const WalkParams uniform = params_from_mixture(3, 4, BigRational(0));
  WalkString t;
  t.symbols = {2, 0, 1, 1};
  CHECK(string_probability(uniform, t) == BigRational(1, 81));

  WalkString bad;
  bad.symbols = {0, 2};
  CHECK_THROWS_AS(string_probability(params, bad), std::invalid_argument);
}

TEST_CASE("string probability is permutation invariant") {
  const WalkParams params = params_from_mixture(3, 6, BigRational(1, 4));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    WalkString s;
    for (int i = 0; i < params.n; ++i) s.symbols.push_back(static_cast<int>(rng() % 3));
    std::vector<int> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    WalkString mapped;
    for (int v : s.symbols) mapped.symbols.push_back(perm[v]);
    CHECK(string_probability(params, s) == string_probability(params, mapped));
  }
}

TEST_CASE("enumeration examples") {
  const WalkParams coin = params_from_mixture(2, 1, BigRational(1, 3));
  const auto single = enumerate_distribution(coin);
  CHECK(single.at({0}) == BigRational(1, 2));
  CHECK(single.at({1}) == BigRational(1, 2));

  const BigRational d(1, 4);
  const WalkParams params = params_from_mixture(2, 2, d);
  const auto dist = enumerate_distribution(params);
  CHECK(dist.at({0, 0}) == (1 + d) / 4);
  CHECK(dist.at({1, 1}) == (1 + d) / 4);
  CHECK(dist.at({0, 1}) == (1 - d) / 4);
  CHECK(dist.at({1, 0}) == (1 - d) / 4);

  const auto uniform = enumerate_distribution(params_from_mixture(3, 2, BigRational(0)));
  CHECK(uniform.size() == 9);
  for (const auto& [s, prob] : uniform) CHECK(prob == BigRational(1, 9));
}

TEST_CASE("DP equals enumeration marginal on the acceptance grid") {
  for (int p = 2; p <= 4; ++p) {
    for (int n = 1; n <= 8; ++n) {
      for (const BigRational& delta : kDeltas) {
        const WalkParams params = params_from_mixture(p, n, delta);
        const auto marginal = enumeration_marginal(params);
        const ZeroCountDistribution dp = zero_count_distribution(params);
        for (int l = 0; l <= n; ++l) CHECK(dp.probs[l] == marginal[l]);
      }
    }
  }
}

TEST_CASE("zero count distribution closed cases") {
  const BigRational d(1, 2);
  const ZeroCountDistribution two = zero_count_distribution(params_from_mixture(2, 2, d));
  CHECK(two.probs[2] == (1 + d) / 4);
  CHECK(two.probs[1] == (1 - d) / 2);
  CHECK(two.probs[0] == (1 + d) / 4);

  const ZeroCountDistribution one = zero_count_distribution(params_from_mixture(5, 1, d));
  CHECK(one.probs[1] == BigRational(1, 5));
  CHECK(one.probs[0] == BigRational(4, 5));

  const ZeroCountDistribution flat = zero_count_distribution(params_from_mixture(3, 7, BigRational(0)));
  const ZeroCountDistribution reference = uniform_zero_distribution(3, 7);
  for (int l = 0; l <= 7; ++l) CHECK(flat.probs[l] == reference.probs[l]);
}

TEST_CASE("polynomial DP matches the rational DP") {
  const std::vector<Poly> polys = zero_count_polynomial(2, 2);
  const BigRational d(1, 2);
  CHECK(polys[2].evaluate(d) == (1 + d) / 4);

  for (int p = 2; p <= 4; ++p) {
    for (int n = 1; n <= 10; ++n) {
      const std::vector<Poly> family = zero_count_polynomial(p, n);
      const ZeroCountDistribution at_zero = uniform_zero_distribution(p, n);
      const WalkParams third = params_from_mixture(p, n, BigRational(1, 3));
      const ZeroCountDistribution dp = zero_count_distribution(third);
      for (int l = 0; l <= n; ++l) {
        CHECK(family[l].evaluate(BigRational(0)) == at_zero.probs[l]);
        CHECK(family[l].evaluate(BigRational(1, 3)) == dp.probs[l]);
      }
    }
  }
}

TEST_CASE("samplers are deterministic given the seed") {
  const WalkParams params = params_from_mixture(3, 20, BigRational(1, 4));
  CHECK(sample_walk(params, 99).symbols == sample_walk(params, 99).symbols);
  CHECK(sample_walk_increments(params, 99).symbols ==
        sample_walk_increments(params, 99).symbols);
}

TEST_CASE("sampler histograms match the DP within 4 sigma") {
  const WalkParams params = params_from_mixture(3, 10, BigRational(1, 4));
  const ZeroCountDistribution dp = zero_count_distribution(params);
  const long samples = 200000;

  for (const bool increments : {false, true}) {
    std::vector<long> histogram(params.n + 1, 0);
    for (long i = 0; i < samples; ++i) {
      const WalkString walk = increments
                                  ? sample_walk_increments(params, static_cast<uint64_t>(i))
                                  : sample_walk(params, static_cast<uint64_t>(i));
      ++histogram[walk.zero_count()];
    }
    for (int l = 0; l <= params.n; ++l) {
      const double expected = dp.probs[l].get_d() * samples;
      const double sigma = std::sqrt(expected * (1.0 - dp.probs[l].get_d()));
      if (sigma < 1.0) continue;
      CHECK(std::abs(histogram[l] - expected) < 4.0 * sigma);
    }
  }
}

TEST_CASE("direct and increment samplers agree distributionally") {
  const WalkParams params = params_from_mixture(3, 10, BigRational(1, 4));
  const ZeroCountDistribution dp = zero_count_distribution(params);
  const long samples = 200000;
  std::vector<long> histogram(params.n + 1, 0);
  for (long i = 0; i < samples; ++i)
    ++histogram[sample_walk_increments(params, static_cast<uint64_t>(i)).zero_count()];
  std::vector<double> expected(params.n + 1);
  for (int l = 0; l <= params.n; ++l) expected[l] = dp.probs[l].get_d() * samples;
  CHECK(chi_square_p_value(histogram, expected) > 1e-6);
}

TEST_CASE("enumeration cap") {
  CHECK(enumeration_cap() == 2000000);
  const WalkParams params = params_from_mixture(2, 25, BigRational(1, 4));
  CHECK_THROWS_AS(enumerate_distribution(params), std::length_error);
}

TEST_CASE("state grouping") {
  const WalkParams params = params_from_paper_lambda(4, 6, BigRational(1, 20));
  const GroupedChain grouped = group_states(params, 2);
  // grouped stay = 1/2 + p*lambda*(1 - 1/2) = 1/2 + 2*lambda
  CHECK(grouped.grouped.at(0, 0) ==
        BigRational(1, 2) + BigRational(4) * params.paper_lambda * BigRational(1, 2));
  CHECK(grouped.effective.delta == params.delta);
  CHECK(grouped.grouped.is_sticky());
  CHECK(grouped.grouped.rows_sum_to_one());

  const GroupedChain uniform = group_states(params_from_mixture(6, 3, BigRational(0)), 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(uniform.grouped.at(i, j) == BigRational(1, 3));

  const WalkParams six = params_from_mixture(6, 5, BigRational(1, 4));
  const GroupedChain halved = group_states(six, 2);
  const StochasticMatrix direct = transition_matrix(params_from_mixture(2, 5, BigRational(1, 4)));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(halved.grouped.at(i, j) == direct.at(i, j));

  CHECK_THROWS_AS(group_states(six, 4), std::invalid_argument);
  CHECK_THROWS_AS(group_states(six, 1), std::invalid_argument);
}

TEST_CASE("grouped walk zero-count law equals the effective chain's") {
  const WalkParams params = params_from_mixture(6, 6, BigRational(1, 3));
  const GroupedChain grouped = group_states(params, 3);
  const ZeroCountDistribution effective = zero_count_distribution(grouped.effective);
  // Relabel blocks of the 6-state walk: block = symbol / 2 under the
  // contiguous partition, with block 0 holding symbol 0.
  std::vector<BigRational> marginal(params.n + 1, BigRational(0));
  for (const auto& [symbols, prob] : enumerate_distribution(params)) {
    int zeros = 0;
    for (int s : symbols) zeros += (s / 2 == 0);
    marginal[zeros] += prob;
  }
  for (int l = 0; l <= params.n; ++l) CHECK(marginal[l] == effective.probs[l]);
}
