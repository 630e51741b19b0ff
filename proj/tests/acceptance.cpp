// Acceptance gate: each criterion runs standalone (selected by argv[1]) and
// prints exactly one pass/fail line. Criteria that measure a printed claim
// which the oracles refute fail honestly and print the evidence.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stickylab/krawtchouk.hpp"
#include "stickylab/moments.hpp"
#include "stickylab/numerics.hpp"
#include "stickylab/spectral.hpp"
#include "stickylab/tvd.hpp"

using namespace stickylab;

namespace {

BigInt int_pow(long base, long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return out;
}

int report(int criterion, bool pass, const std::string& summary) {
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << summary
            << "\n";
  return pass ? 0 : 1;
}

const std::vector<BigRational>& bias_grid() {
  static const std::vector<BigRational> grid = {BigRational(0), BigRational(1, 4),
                                                BigRational(1, 2), BigRational(9, 10)};
  return grid;
}

int criterion_1() {
  for (int p = 2; p <= 4; ++p) {
    for (int n = 1; n <= 8; ++n) {
      for (const BigRational& delta : bias_grid()) {
        const WalkParams params = params_from_mixture(p, n, delta);
        std::vector<BigRational> marginal(n + 1, BigRational(0));
        for (const auto& [symbols, prob] : enumerate_distribution(params)) {
          int zeros = 0;
          for (int s : symbols) zeros += (s == 0);
          marginal[zeros] += prob;
        }
        const ZeroCountDistribution dp = zero_count_distribution(params);
        for (int l = 0; l <= n; ++l) {
          if (dp.probs[l] != marginal[l])
            return report(1, false, "DP/enumeration mismatch at p=" + std::to_string(p) +
                                        " n=" + std::to_string(n) + " l=" + std::to_string(l));
        }
      }
    }
  }
  return report(1, true, "zero-count DP equals the enumeration marginal on the full grid");
}

int criterion_2() {
  for (int n = 1; n <= 12; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (int s = 0; s <= n; ++s) {
        const BigRational expected = r == s ? BigRational(binomial(n, s)) : BigRational(0);
        if (binary_inner_product(n, r, s) != expected)
          return report(2, false, "binary inner product mismatch at n=" + std::to_string(n));
      }
    }
  }
  return report(2, true, "binary inner products are exactly diag(C(n,s)) for n <= 12");
}

int criterion_3() {
  for (int n = 1; n <= 8; ++n) {
    for (int p : {2, 3, 5}) {
      for (int r = 0; r <= n; ++r) {
        for (int s = 0; s <= n; ++s) {
          const BigRational expected =
              r == s ? BigRational(binomial(n, r) * int_pow(p - 1, n - r)) : BigRational(0);
          if (generalized_inner_product(n, p, r, s) != expected)
            return report(3, false, "generalized inner product mismatch at n=" +
                                        std::to_string(n) + " p=" + std::to_string(p));
        }
      }
    }
  }
  return report(3, true,
                "generalized inner products are exactly diag(C(n,r)(p-1)^(n-r)) for n <= 8");
}

int criterion_4() {
  // Claim under test: E[K_k(|s|_0)] = 0 whenever k mod p != 0. The exact
  // oracles refute it for p >= 3; counterexamples are printed and the
  // criterion fails honestly.
  const std::vector<BigRational> deltas = {BigRational(1, 8), BigRational(1, 4),
                                           BigRational(1, 2), BigRational(3, 4)};
  std::vector<std::string> counterexamples;
  for (int p : {2, 3, 5}) {
    for (int n = 1; n <= 10; ++n) {
      for (const BigRational& delta : deltas) {
        const WalkParams params = params_from_mixture(p, n, delta);
        for (int k = 0; k <= n; ++k) {
          if (k % p == 0) continue;
          const BigRational moment = expected_krawtchouk_oracle(params, k);
          if (moment != 0 && counterexamples.size() < 5)
            counterexamples.push_back("p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                      " k=" + std::to_string(k) + " delta=" +
                                      fraction_string(delta) + " -> " + fraction_string(moment));
        }
      }
    }
  }
  if (counterexamples.empty())
    return report(4, true, "moments vanish for every k not divisible by p");
  std::string summary = "moment vanishing for k mod p != 0 is refuted by the exact oracle; "
                        "first counterexamples:";
  for (const std::string& c : counterexamples) summary += " [" + c + "]";
  return report(4, false, summary);
}

int criterion_5() {
  int pinned = 0, unmatched = 0;
  for (int p : {2, 3, 5}) {
    for (int n = 1; n <= 10; ++n) {
      for (const BigRational& delta : bias_grid()) {
        const WalkParams params = params_from_mixture(p, n, delta);
        for (int k = 0; k <= n; ++k) {
          if (expected_krawtchouk_polynomial(p, n, k).evaluate(delta) !=
              expected_krawtchouk_oracle(params, k))
            return report(5, false, "polynomial and oracle routes disagree at p=" +
                                        std::to_string(p) + " n=" + std::to_string(n) +
                                        " k=" + std::to_string(k));
        }
        if (delta == 0) continue;
        for (int k = p; 2 * k <= n; k += p) {
          const ClosedFormEval eval = expected_krawtchouk_closed(p, n, k, delta);
          if (eval.matches.empty())
            ++unmatched;
          else
            ++pinned;
        }
      }
    }
  }
  std::ostringstream summary;
  summary << "two-route moments agree exactly everywhere; closed-form report: " << pinned
          << " instances pinned a variant, " << unmatched
          << " recorded 'no variant matches' (documented deviation)";
  return report(5, true, summary.str());
}

int criterion_6() {
  for (int p = 2; p <= 4; ++p) {
    for (int n = 1; n <= 10; ++n) {
      for (const BigRational& delta : bias_grid()) {
        const WalkParams params = params_from_mixture(p, n, delta);
        BigRational tvd;
        try {
          tvd = tvd_exact(params);  // throws if the two forms disagree
        } catch (const std::logic_error&) {
          return report(6, false, "half-l1 and expectation forms disagree at p=" +
                                      std::to_string(p) + " n=" + std::to_string(n));
        }
        const SecondMoment sm = second_moment(params);
        if (BigRational(4) * tvd * tvd > sm.direct)
          return report(6, false, "Cauchy-Schwarz bound violated at p=" + std::to_string(p) +
                                      " n=" + std::to_string(n));
      }
    }
  }
  return report(6, true, "TVD equals its expectation form and respects the half-sqrt bound");
}

int criterion_7() {
  // Claim under test: per-p sups of tvd/paper_lambda grow by at most a factor
  // of 2 from p=2 to p=6. The exact sweep refutes the factor-2 clause because
  // tvd tracks delta = p*lambda; both normalizations are printed.
  std::map<int, double> sup_lambda, sup_delta;
  for (int p = 2; p <= 6; ++p) {
    for (int n : {16, 32, 64}) {
      for (int i = 1; i <= 12; ++i) {
        const BigRational lambda(i, 100);
        if (lambda >= BigRational(1, p)) continue;
        const WalkParams params = params_from_paper_lambda(p, n, lambda);
        const double tvd = tvd_exact(params).get_d();
        sup_lambda[p] = std::max(sup_lambda[p], tvd / lambda.get_d());
        sup_delta[p] = std::max(sup_delta[p], tvd / params.delta.get_d());
      }
    }
  }
  std::ostringstream summary;
  summary << "per-p sup of tvd/lambda:";
  bool finite = true;
  for (const auto& [p, sup] : sup_lambda) {
    summary << " p=" << p << ":" << sup;
    finite = finite && std::isfinite(sup);
  }
  summary << "; sup of tvd/delta:";
  for (const auto& [p, sup] : sup_delta) summary << " p=" << p << ":" << sup;
  const double growth = sup_lambda.at(6) / sup_lambda.at(2);
  const double growth_delta = sup_delta.at(6) / sup_delta.at(2);
  summary << "; growth p=2 -> p=6: " << growth << " in the lambda normalization, "
          << growth_delta << " in the delta normalization";
  const bool pass = finite && growth <= 2.0;
  if (!pass)
    summary << "; the factor-2 clause fails in the lambda normalization because tvd scales "
               "with delta = p*lambda";
  return report(7, pass, summary.str());
}

int criterion_8() {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int p = 2 + static_cast<int>(rng() % 15);
    BigRational delta(static_cast<long>(rng() % 100), 100);
    delta.canonicalize();
    const WalkParams params = params_from_mixture(p, 2, delta);
    const SpectrumReport report_data = verify_expander(params);
    if (report_data.residual >= 1e-10)
      return report(8, false, "second eigenvalue off delta at p=" + std::to_string(p));
    if (report_data.solver_disagreement >= 1e-9)
      return report(8, false, "closed-form and Jacobi solvers disagree at p=" + std::to_string(p));
  }
  return report(8, true, "second eigenvalue equals delta within 1e-10 on 50 random instances");
}

int criterion_9() {
  for (int p = 4; p <= 12; ++p) {
    for (int k = 2; k < p; ++k) {
      if (p % k != 0) continue;
      for (const BigRational& delta : bias_grid()) {
        const WalkParams params = params_from_mixture(p, 4, delta);
        const GroupedChain grouped = group_states(params, k);
        const BigRational expected_stay =
            BigRational(1, k) +
            BigRational(p) * params.paper_lambda * (BigRational(1) - BigRational(1, k));
        if (grouped.grouped.at(0, 0) != expected_stay || !grouped.grouped.is_sticky())
          return report(9, false, "grouped stay probability mismatch at p=" + std::to_string(p) +
                                      " k=" + std::to_string(k));
      }
    }
  }
  return report(9, true, "grouped chains are sticky with stay 1/k + p*lambda*(1-1/k), exactly");
}

int criterion_10() {
  const WalkParams params = params_from_mixture(3, 10, BigRational(1, 4));
  const ZeroCountDistribution dp = zero_count_distribution(params);
  const long samples = 1000000;
  for (const bool increments : {false, true}) {
    std::vector<long> histogram(params.n + 1, 0);
    for (long i = 0; i < samples; ++i) {
      const WalkString walk = increments
                                  ? sample_walk_increments(params, static_cast<uint64_t>(i))
                                  : sample_walk(params, static_cast<uint64_t>(i));
      ++histogram[walk.zero_count()];
    }
    for (int l = 0; l <= params.n; ++l) {
      const double q = dp.probs[l].get_d();
      const double expected = q * samples;
      const double sigma = std::sqrt(samples * q * (1.0 - q));
      if (sigma < 1.0) continue;
      if (std::abs(histogram[l] - expected) >= 4.0 * sigma)
        return report(10, false, std::string(increments ? "increment" : "direct") +
                                     " sampler off by more than 4 sigma at l=" +
                                     std::to_string(l));
    }
  }
  return report(10, true, "both samplers match the exact distribution within 4 sigma per bin");
}

int criterion_11() {
  for (int p = 2; p <= 12; ++p)
    for (int k = 1; k < p; ++k)
      if (std::abs(root_power_sum(p, k)) >= 1e-10)
        return report(11, false, "root power sum nonzero at p=" + std::to_string(p));
  for (int p = 2; p <= 12; ++p) {
    for (const BigRational& delta : bias_grid()) {
      const IncrementExpectation inc = increment_expectation(p, delta);
      if (!inc.matches || inc.expected != delta)
        return report(11, false, "increment expectation mismatch at p=" + std::to_string(p));
    }
  }
  return report(11, true, "root-of-unity sums vanish and increment expectations equal delta");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int criterion_12(const std::string& cli_path) {
  if (cli_path.empty()) return report(12, false, "path to the CLI binary was not provided");
  const std::string dir = "acceptance_artifacts";
  std::filesystem::create_directories(dir);
  const std::string verify_cmd = "\"" + cli_path +
                                 "\" verify --p 3 --n 6 --bias 1/4 --bias-kind delta --output " +
                                 dir + "/verify_";
  const std::string sweep_cmd = "\"" + cli_path +
                                "\" sweep --p 2..3 --n 8 --lambda 0.01..0.05 --step 0.02 "
                                "--output " +
                                dir + "/sweep_";
  for (const char* run : {"a", "b"}) {
    if (std::system((verify_cmd + run + ".json").c_str()) != 0)
      return report(12, false, "verify run failed");
    if (std::system((sweep_cmd + run + ".csv").c_str()) != 0)
      return report(12, false, "sweep run failed");
  }
  const std::string va = read_file(dir + "/verify_a.json"), vb = read_file(dir + "/verify_b.json");
  const std::string sa = read_file(dir + "/sweep_a.csv"), sb = read_file(dir + "/sweep_b.csv");
  if (va.empty() || sa.empty()) return report(12, false, "artifact files are empty");
  if (va != vb) return report(12, false, "verify artifacts differ between runs");
  if (sa != sb) return report(12, false, "sweep artifacts differ between runs");
  return report(12, true, "repeated verify and sweep runs produce byte-identical artifacts");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <criterion 1..12> [cli-path]\n";
    return 2;
  }
  const int criterion = std::atoi(argv[1]);
  switch (criterion) {
    case 1: return criterion_1();
    case 2: return criterion_2();
    case 3: return criterion_3();
    case 4: return criterion_4();
    case 5: return criterion_5();
    case 6: return criterion_6();
    case 7: return criterion_7();
    case 8: return criterion_8();
    case 9: return criterion_9();
    case 10: return criterion_10();
    case 11: return criterion_11();
    case 12: return criterion_12(argc > 2 ? argv[2] : "");
    default:
      std::cerr << "unknown criterion\n";
      return 2;
  }
}
