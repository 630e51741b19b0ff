#include "stickylab/verify.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

#include "stickylab/krawtchouk.hpp"
#include "stickylab/moments.hpp"
#include "stickylab/spectral.hpp"
#include "stickylab/tvd.hpp"

namespace stickylab {

namespace {

CheckResult make_check(std::string id, CheckClass check_class, bool ok, std::string detail) {
  CheckResult result;
  result.id = std::move(id);
  result.check_class = check_class;
  result.status = ok ? CheckStatus::verified : CheckStatus::deviation;
  result.detail = std::move(detail);
  return result;
}

CheckResult skip_check(std::string id, CheckClass check_class, std::string reason) {
  CheckResult result;
  result.id = std::move(id);
  result.check_class = check_class;
  result.status = CheckStatus::skipped;
  result.detail = std::move(reason);
  return result;
}

CheckResult check_dp_vs_enumeration(const WalkParams& params) {
  uint64_t total = 1;
  bool within_cap = true;
  for (int i = 0; i < params.n && within_cap; ++i) {
    total *= static_cast<uint64_t>(params.p);
    within_cap = total <= enumeration_cap();
  }
  if (!within_cap)
    return skip_check("dp_vs_enumeration", CheckClass::assertion, "p^n exceeds enumeration cap");
  const auto strings = enumerate_distribution(params);
  std::vector<BigRational> marginal(params.n + 1, BigRational(0));
  for (const auto& [symbols, prob] : strings) {
    int zeros = 0;
    for (int s : symbols) zeros += (s == 0);
    marginal[zeros] += prob;
  }
  const ZeroCountDistribution dp = zero_count_distribution(params);
  bool ok = true;
  for (int l = 0; l <= params.n; ++l) ok = ok && marginal[l] == dp.probs[l];
  return make_check("dp_vs_enumeration", CheckClass::assertion, ok,
                    ok ? "exact match on all zero counts" : "marginal mismatch");
}

CheckResult check_normalization(const WalkParams& params) {
  const ZeroCountDistribution dp = zero_count_distribution(params);
  BigRational sum(0);
  for (const BigRational& prob : dp.probs) sum += prob;
  return make_check("distribution_normalization", CheckClass::assertion, sum == 1,
                    "zero-count probabilities sum to " + fraction_string(sum));
}

CheckResult check_orthogonality(const WalkParams& params) {
  if (params.n > 8)
    return skip_check("krawtchouk_orthogonality", CheckClass::assertion, "n exceeds 8");
  bool ok = true;
  for (int r = 0; r <= params.n && ok; ++r) {
    for (int s = 0; s <= params.n && ok; ++s) {
      BigRational expected(0);
      if (r == s) {
        BigInt weight;
        mpz_ui_pow_ui(weight.get_mpz_t(), static_cast<unsigned long>(params.p - 1),
                      static_cast<unsigned long>(params.n - r));
        expected = BigRational(binomial(params.n, r) * weight);
      }
      ok = generalized_inner_product(params.n, params.p, r, s) == expected;
    }
  }
  return make_check("krawtchouk_orthogonality", CheckClass::assertion, ok,
                    ok ? "diagonal C(n,r)(p-1)^(n-r), off-diagonal 0" : "inner product mismatch");
}

CheckResult check_moment_two_route(const WalkParams& params) {
  bool ok = true;
  for (int k = 0; k <= params.n && ok; ++k) {
    const Poly poly = expected_krawtchouk_polynomial(params.p, params.n, k);
    ok = poly.evaluate(params.delta) == expected_krawtchouk_oracle(params, k);
  }
  return make_check("moment_two_route", CheckClass::assertion, ok,
                    ok ? "polynomial route equals oracle for every k" : "route mismatch");
}

CheckResult check_moment_vanishing(const WalkParams& params) {
  std::vector<int> nonzero_ks;
  for (int k = 0; k <= params.n; ++k) {
    if (k % params.p == 0) continue;
    if (expected_krawtchouk_oracle(params, k) != 0) nonzero_ks.push_back(k);
  }
  std::ostringstream detail;
  if (nonzero_ks.empty()) {
    detail << "all moments with p not dividing k vanish";
  } else {
    detail << "nonzero moments at k =";
    for (int k : nonzero_ks) detail << ' ' << k;
  }
  return make_check("moment_vanishing", CheckClass::measurement, nonzero_ks.empty(), detail.str());
}

CheckResult check_closed_form_variants(const WalkParams& params) {
  std::vector<std::string> rows;
  bool any_match = true;
  for (int k = params.p; 2 * k <= params.n; k += params.p) {
    const ClosedFormEval eval =
        expected_krawtchouk_closed(params.p, params.n, k, params.delta);
    std::ostringstream row;
    row << "k=" << k << ": ";
    if (eval.matches.empty()) {
      row << "no variant matches";
      any_match = false;
    } else {
      for (size_t i = 0; i < eval.matches.size(); ++i)
        row << (i ? "," : "") << eval.matches[i];
    }
    rows.push_back(row.str());
  }
  if (rows.empty())
    return skip_check("moment_closed_form", CheckClass::measurement, "no k with p | k, k <= n/2");
  std::ostringstream detail;
  for (size_t i = 0; i < rows.size(); ++i) detail << (i ? "; " : "") << rows[i];
  return make_check("moment_closed_form", CheckClass::measurement, any_match, detail.str());
}

CheckResult check_tvd_equality(const WalkParams& params) {
  // tvd_exact throws if the half-l1 and expectation forms disagree.
  const BigRational tvd = tvd_exact(params);
  const bool in_range = tvd >= 0 && tvd <= 1;
  return make_check("tvd_expectation_equality", CheckClass::assertion, in_range,
                    "tvd = " + fraction_string(tvd));
}

CheckResult check_cs_bound(const WalkParams& params) {
  const BigRational tvd = tvd_exact(params);
  const SecondMoment sm = second_moment(params);
  const bool ok = BigRational(4) * tvd * tvd <= sm.direct;
  return make_check("tvd_cauchy_schwarz", CheckClass::assertion, ok,
                    "4*tvd^2 vs second moment " + fraction_string(sm.direct));
}

CheckResult check_second_moment_printed(const WalkParams& params) {
  const SecondMoment sm = second_moment(params);
  std::ostringstream detail;
  detail << "printed index range " << (sm.printed_matches ? "matches" : "deviates")
         << "; shifted range " << (sm.corrected_matches ? "matches" : "deviates");
  return make_check("second_moment_printed_rhs", CheckClass::measurement, sm.printed_matches,
                    detail.str());
}

CheckResult check_reconstruction(const WalkParams& params) {
  if (params.n > 20)
    return skip_check("krawtchouk_reconstruction", CheckClass::measurement, "n exceeds 20");
  const ZeroCountDistribution rebuilt = reconstruct_via_krawtchouk(params);
  const ZeroCountDistribution dp = zero_count_distribution(params);
  bool ok = true;
  for (int l = 0; l <= params.n; ++l) ok = ok && rebuilt.probs[l] == dp.probs[l];
  return make_check("krawtchouk_reconstruction", CheckClass::measurement, ok,
                    ok ? "entry-wise exact" : "entry-wise deviation");
}

CheckResult check_reciprocity(const WalkParams& params, KrawtchoukVariant variant) {
  const int n = std::min(params.n, 10);
  const ReciprocityReport report = reciprocity_check(n, params.p, variant);
  const std::string id = variant == KrawtchoukVariant::binary ? "reciprocity_binary_table"
                                                              : "reciprocity_generalized_table";
  std::ostringstream detail;
  detail << report.violations.size() << " violating (k,l) pairs at n=" << n;
  return make_check(id, CheckClass::measurement, report.holds(), detail.str());
}

CheckResult check_envelope(const WalkParams& params) {
  constexpr double e = 2.718281828459045235;
  const double delta = params.delta.get_d();
  if (delta >= 1.0 / (1.0 + e))
    return skip_check("geometric_envelope", CheckClass::measurement,
                      "bias outside the convergence radius");
  const SecondMoment sm = second_moment(params);
  const double cs = 0.5 * std::sqrt(sm.direct.get_d());
  const double bound = theorem_bound(delta);
  std::ostringstream detail;
  detail << "cs_bound " << cs << " vs envelope " << bound;
  return make_check("geometric_envelope", CheckClass::measurement,
                    cs <= bound * (1.0 + 1e-9), detail.str());
}

CheckResult check_spectral(const WalkParams& params) {
  const SpectrumReport report = verify_expander(params);
  const bool ok = report.residual < 1e-10 && report.solver_disagreement < 1e-9 &&
                  report.witness_verified && std::abs(report.eigenvalues[0] - 1.0) < 1e-10;
  std::ostringstream detail;
  detail << "second eigenvalue residual " << report.residual << ", solver disagreement "
         << report.solver_disagreement;
  return make_check("spectral_gap", CheckClass::assertion, ok, detail.str());
}

CheckResult check_increment(const WalkParams& params) {
  const IncrementExpectation inc = increment_expectation(params.p, params.delta);
  std::ostringstream detail;
  detail << "numeric " << inc.numeric.real() << " vs delta " << fraction_string(inc.expected);
  return make_check("increment_expectation", CheckClass::assertion, inc.matches, detail.str());
}

CheckResult check_grouping(const WalkParams& params) {
  int k = 0;
  for (int candidate = 2; candidate < params.p; ++candidate) {
    if (params.p % candidate == 0) {
      k = candidate;
      break;
    }
  }
  if (k == 0)
    return skip_check("state_grouping", CheckClass::assertion, "p has no proper divisor >= 2");
  const GroupedChain grouped = group_states(params, k);
  const BigRational expected_stay =
      BigRational(1, k) + params.delta * BigRational(k - 1, k);
  const bool ok = grouped.grouped.at(0, 0) == expected_stay &&
                  grouped.effective.delta == params.delta;
  return make_check("state_grouping", CheckClass::assertion, ok,
                    "grouped stay probability " + fraction_string(grouped.grouped.at(0, 0)));
}

}  // namespace

bool InstanceSuite::passed() const {
  for (const CheckResult& check : checks)
    if (check.check_class == CheckClass::assertion && check.status == CheckStatus::deviation)
      return false;
  return true;
}

InstanceSuite run_instance_suite(const WalkParams& params) {
  InstanceSuite suite;
  suite.params = params;
  suite.checks.push_back(check_dp_vs_enumeration(params));
  suite.checks.push_back(check_normalization(params));
  suite.checks.push_back(check_orthogonality(params));
  suite.checks.push_back(check_moment_two_route(params));
  suite.checks.push_back(check_moment_vanishing(params));
  suite.checks.push_back(check_closed_form_variants(params));
  suite.checks.push_back(check_tvd_equality(params));
  suite.checks.push_back(check_cs_bound(params));
  suite.checks.push_back(check_second_moment_printed(params));
  suite.checks.push_back(check_reconstruction(params));
  suite.checks.push_back(check_reciprocity(params, KrawtchoukVariant::generalized));
  suite.checks.push_back(check_reciprocity(params, KrawtchoukVariant::binary));
  suite.checks.push_back(check_envelope(params));
  suite.checks.push_back(check_spectral(params));
  suite.checks.push_back(check_increment(params));
  suite.checks.push_back(check_grouping(params));
  return suite;
}

std::string verification_report_json(const InstanceSuite& suite) {
  nlohmann::ordered_json doc;
  doc["schema"] = "sticky-lab/1";
  doc["instance"] = {
      {"p", suite.params.p},
      {"n", suite.params.n},
      {"delta", fraction_string(suite.params.delta)},
      {"paper_lambda", fraction_string(suite.params.paper_lambda)},
  };
  doc["passed"] = suite.passed();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& check : suite.checks) {
    const char* status = check.status == CheckStatus::verified    ? "verified"
                         : check.status == CheckStatus::deviation ? "deviation"
                                                                  : "skipped";
    doc["checks"].push_back({
        {"id", check.id},
        {"class", check.check_class == CheckClass::assertion ? "assert" : "measure"},
        {"status", status},
        {"detail", check.detail},
    });
  }
  return doc.dump(2) + "\n";
}

}  // namespace stickylab
