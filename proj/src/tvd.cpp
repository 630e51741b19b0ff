#include "stickylab/tvd.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <future>
#include <stdexcept>
#include <thread>

#include "stickylab/krawtchouk.hpp"
#include "stickylab/moments.hpp"
#include "stickylab/numerics.hpp"

namespace stickylab {

namespace {

BigInt int_pow(long base, long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return out;
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

SweepCell evaluate_cell(int p, int n, const BigRational& delta) {
  SweepCell cell;
  cell.p = p;
  cell.n = n;
  cell.delta = delta;
  if (n > 60) {
    cell.skip_reason = "n exceeds the DP cap of 60";
    return cell;
  }
  cell.report = make_report(params_from_mixture(p, n, delta));
  return cell;
}

}  // namespace

std::vector<BigRational> probability_ratio(const WalkParams& params) {
  const ZeroCountDistribution walk = zero_count_distribution(params);
  const ZeroCountDistribution uniform = uniform_zero_distribution(params.p, params.n);
  std::vector<BigRational> q(params.n + 1);
  for (int l = 0; l <= params.n; ++l) {
    q[l] = walk.probs[l] / uniform.probs[l];
    q[l].canonicalize();
  }
  return q;
}

BigRational tvd_exact(const WalkParams& params) {
  const ZeroCountDistribution walk = zero_count_distribution(params);
  const ZeroCountDistribution uniform = uniform_zero_distribution(params.p, params.n);
  BigRational l1(0), expectation(0);
  for (int l = 0; l <= params.n; ++l) {
    l1 += abs(walk.probs[l] - uniform.probs[l]);
    expectation += uniform.probs[l] * abs(walk.probs[l] / uniform.probs[l] - 1);
  }
  BigRational half_l1 = l1 / 2;
  half_l1.canonicalize();
  BigRational half_expectation = expectation / 2;
  half_expectation.canonicalize();
  if (half_l1 != half_expectation) throw std::logic_error("tvd expectation form mismatch");
  return half_l1;
}

ZeroCountDistribution reconstruct_via_krawtchouk(const WalkParams& params) {
  if (params.n > 20) throw std::invalid_argument("reconstruction capped at n <= 20");
  const int n = params.n;
  const KrawtchoukTable table = KrawtchoukTable::generalized(n, params.p);
  std::vector<BigRational> moments(n + 1);
  for (int k = 0; k <= n; ++k) moments[k] = expected_krawtchouk_oracle(params, k);
  const BigRational scale(BigInt(1), int_pow(params.p, n));
  ZeroCountDistribution out;
  out.probs.assign(n + 1, BigRational(0));
  for (int l = 0; l <= n; ++l) {
    for (int k = 0; k <= n; ++k) out.probs[l] += BigRational(table.at(l, k)) * moments[k];
    out.probs[l] *= scale;
    out.probs[l].canonicalize();
  }
  return out;
}

SecondMoment second_moment(const WalkParams& params) {
  if (params.n > 60) throw std::invalid_argument("second moment capped at n <= 60");
  const int n = params.n;
  const ZeroCountDistribution uniform = uniform_zero_distribution(params.p, n);
  const std::vector<BigRational> q = probability_ratio(params);

  SecondMoment out;
  out.direct = BigRational(0);
  for (int l = 0; l <= n; ++l) {
    const BigRational centered = q[l] - 1;
    out.direct += uniform.probs[l] * centered * centered;
  }
  out.direct.canonicalize();

  out.printed_rhs = BigRational(0);
  out.corrected_rhs = BigRational(0);
  for (int k = 0; k <= n; ++k) {
    const BigRational moment = expected_krawtchouk_oracle(params, k);
    BigRational term = moment * moment;
    term /= BigRational(binomial(n, k) * int_pow(params.p - 1, n - k));
    if (k >= 1) out.printed_rhs += term;
    if (k <= n - 1) out.corrected_rhs += term;
  }
  out.printed_rhs.canonicalize();
  out.corrected_rhs.canonicalize();
  out.printed_matches = out.printed_rhs == out.direct;
  out.corrected_matches = out.corrected_rhs == out.direct;
  return out;
}

double theorem_bound(double lambda) {
  constexpr double e = 2.718281828459045235;
  if (lambda < 0 || lambda >= 1.0 / (1.0 + e))
    throw std::domain_error("series does not converge");
  const double rho = e * lambda / (1.0 - lambda);
  return 0.5 * std::sqrt(rho * rho / (1.0 - rho * rho));
}

TvdReport make_report(const WalkParams& params) {
  TvdReport report;
  report.params = params;
  report.tvd = tvd_exact(params);
  report.expectation_form = report.tvd;

  const SecondMoment sm = second_moment(params);
  report.second_moment_direct = sm.direct;
  report.cs_bound = 0.5 * std::sqrt(sm.direct.get_d());
  if ((BigRational(4) * report.tvd * report.tvd) > sm.direct)
    throw std::logic_error("Cauchy-Schwarz violated");

  constexpr double e = 2.718281828459045235;
  const double delta = params.delta.get_d();
  if (delta < 1.0 / (1.0 + e)) report.envelope = theorem_bound(delta);
  if (params.delta != 0) {
    report.ratio_to_lambda = report.tvd.get_d() / params.paper_lambda.get_d();
    report.ratio_to_delta = report.tvd.get_d() / delta;
  }
  return report;
}

SweepResult sweep(const std::vector<std::tuple<int, int, BigRational>>& grid) {
  const size_t workers =
      std::max<size_t>(1, std::min<size_t>(std::thread::hardware_concurrency(), grid.size()));
  SweepResult result;
  result.cells.resize(grid.size());

  std::atomic<size_t> next{0};
  std::vector<std::future<void>> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    pool.push_back(std::async(std::launch::async, [&] {
      for (size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1)) {
        const auto& [p, n, delta] = grid[i];
        result.cells[i] = evaluate_cell(p, n, delta);
      }
    }));
  }
  for (auto& f : pool) f.get();

  for (const SweepCell& cell : result.cells) {
    if (!cell.report) continue;
    auto& sup_lambda = result.sup_ratio_lambda[cell.p];
    auto& sup_delta = result.sup_ratio_delta[cell.p];
    sup_lambda = std::max(sup_lambda, cell.report->ratio_to_lambda);
    sup_delta = std::max(sup_delta, cell.report->ratio_to_delta);
  }
  return result;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "p,n,delta,paper_lambda,tvd_exact,cs_bound,second_moment,theorem_bound,"
         "ratio_tvd_over_lambda,ratio_tvd_over_delta\r\n";
  auto rational_field = [](const BigRational& v) {
    return decimal_string(v) + " " + fraction_string(v);
  };
  for (const SweepCell& cell : result.cells) {
    out << cell.p << ',' << cell.n << ',' << rational_field(cell.delta) << ',';
    if (!cell.report) {
      out << ",,,,,,\r\n";
      continue;
    }
    const TvdReport& r = *cell.report;
    out << rational_field(r.params.paper_lambda) << ',' << rational_field(r.tvd) << ','
        << format_double(r.cs_bound) << ',' << rational_field(r.second_moment_direct) << ',';
    if (r.envelope) out << format_double(*r.envelope);
    out << ',' << format_double(r.ratio_to_lambda) << ',' << format_double(r.ratio_to_delta)
        << "\r\n";
  }
}

}  // namespace stickylab
