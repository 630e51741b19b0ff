#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stickylab/chain.hpp"
#include "stickylab/moments.hpp"
#include "stickylab/spectral.hpp"
#include "stickylab/tvd.hpp"
#include "stickylab/verify.hpp"

namespace {

using namespace stickylab;

// Accepts "3/10", "7", or a decimal like "0.25", all parsed exactly.
BigRational parse_rational(const std::string& text) {
  if (text.find('/') != std::string::npos) return rational_from_string(text);
  const size_t dot = text.find('.');
  if (dot == std::string::npos) return rational_from_string(text);
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const size_t frac_len = text.size() - dot - 1;
  BigRational value = rational_from_string(digits);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_len);
  value /= BigRational(scale);
  value.canonicalize();
  return value;
}

struct Range {
  BigRational lo, hi;
};

// "0.01..0.25" or a single value.
Range parse_range(const std::string& text) {
  const size_t sep = text.find("..");
  if (sep == std::string::npos) {
    const BigRational v = parse_rational(text);
    return {v, v};
  }
  return {parse_rational(text.substr(0, sep)), parse_rational(text.substr(sep + 2))};
}

WalkParams resolve_params(int p, int n, const std::string& bias, const std::string& bias_kind) {
  const BigRational value = parse_rational(bias);
  if (bias_kind == "delta") return params_from_mixture(p, n, value);
  return params_from_paper_lambda(p, n, value);
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

int write_artifact(const std::string& output, const std::string& content) {
  if (output.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) {
    std::cerr << "cannot open output path: " << output << "\n";
    return 2;
  }
  file << content;
  return 0;
}

int run_sample(int p, int n, const std::string& bias, const std::string& bias_kind,
               uint64_t seed, int count, const std::string& sampler, const std::string& output) {
  const WalkParams params = resolve_params(p, n, bias, bias_kind);
  std::ostringstream out;
  for (int i = 0; i < count; ++i) {
    const WalkString walk = sampler == "increments"
                                ? sample_walk_increments(params, seed + static_cast<uint64_t>(i))
                                : sample_walk(params, seed + static_cast<uint64_t>(i));
    for (size_t j = 0; j < walk.symbols.size(); ++j) out << (j ? " " : "") << walk.symbols[j];
    out << "  zeros=" << walk.zero_count() << "\n";
  }
  return write_artifact(output, out.str());
}

int run_dist(int p, int n, const std::string& bias, const std::string& bias_kind,
             const std::string& format, const std::string& output) {
  const WalkParams params = resolve_params(p, n, bias, bias_kind);
  const ZeroCountDistribution dist = zero_count_distribution(params);
  std::ostringstream out;
  if (format == "csv") {
    out << "zero_count,probability\r\n";
    for (int l = 0; l <= n; ++l)
      out << l << ',' << decimal_string(dist.probs[l]) << ' ' << fraction_string(dist.probs[l])
          << "\r\n";
  } else {
    out << "{\n  \"schema\": \"sticky-lab/1\",\n  \"zero_count_distribution\": [\n";
    for (int l = 0; l <= n; ++l)
      out << "    \"" << fraction_string(dist.probs[l]) << (l < n ? "\",\n" : "\"\n");
    out << "  ]\n}\n";
  }
  return write_artifact(output, out.str());
}

int run_moments(int p, int n, const std::string& bias, const std::string& bias_kind,
                const std::string& output) {
  const WalkParams params = resolve_params(p, n, bias, bias_kind);
  std::ostringstream out;
  for (int k = 0; k <= n; ++k)
    out << "k=" << k << "  E[K_k] = " << fraction_string(expected_krawtchouk_oracle(params, k))
        << "\n";
  for (int k = p; 2 * k <= n; k += p) {
    const ClosedFormEval eval = expected_krawtchouk_closed(p, n, k, params.delta);
    out << "closed form k=" << k << ": ";
    if (eval.matches.empty()) {
      out << "no variant matches";
    } else {
      for (size_t i = 0; i < eval.matches.size(); ++i) out << (i ? "," : "") << eval.matches[i];
    }
    out << "\n";
  }
  return write_artifact(output, out.str());
}

int run_tvd(int p, int n, const std::string& bias, const std::string& bias_kind,
            const std::string& output) {
  const WalkParams params = resolve_params(p, n, bias, bias_kind);
  const TvdReport report = make_report(params);
  std::ostringstream out;
  out << "p=" << p << " n=" << n << " delta=" << fraction_string(params.delta)
      << " paper_lambda=" << fraction_string(params.paper_lambda) << "\n"
      << "tvd_exact = " << fraction_string(report.tvd) << " (" << decimal_string(report.tvd, 17)
      << ")\n"
      << "cs_bound = " << format_double(report.cs_bound) << "\n"
      << "second_moment = " << fraction_string(report.second_moment_direct) << "\n";
  if (report.envelope) out << "theorem_bound = " << format_double(*report.envelope) << "\n";
  out << "ratio_tvd_over_lambda = " << format_double(report.ratio_to_lambda) << "\n"
      << "ratio_tvd_over_delta = " << format_double(report.ratio_to_delta) << "\n";
  return write_artifact(output, out.str());
}

int run_sweep(const std::string& p_range, const std::string& n_values,
              const std::string& lambda_range, const std::string& delta_range,
              const std::string& step_text, const std::string& output) {
  if (lambda_range.empty() == delta_range.empty()) {
    std::cerr << "exactly one of --lambda and --delta is required\n";
    return 2;
  }
  const Range p_bounds = parse_range(p_range);
  std::vector<int> ns;
  std::stringstream n_stream(n_values);
  for (std::string token; std::getline(n_stream, token, ',');)
    ns.push_back(std::stoi(token));
  const bool use_lambda = !lambda_range.empty();
  const Range bias = parse_range(use_lambda ? lambda_range : delta_range);
  const BigRational step = parse_rational(step_text);
  if (step <= 0) {
    std::cerr << "--step must be positive\n";
    return 2;
  }

  std::vector<std::tuple<int, int, BigRational>> grid;
  for (BigRational p_value = p_bounds.lo; p_value <= p_bounds.hi; p_value += 1) {
    const int p = static_cast<int>(p_value.get_num().get_si());
    for (int n : ns) {
      for (BigRational b = bias.lo; b <= bias.hi; b += step) {
        BigRational delta = use_lambda ? BigRational(b * p) : b;
        delta.canonicalize();
        if (use_lambda && b >= BigRational(1, p)) continue;
        if (delta >= 1) continue;
        grid.emplace_back(p, n, delta);
      }
    }
  }
  if (grid.empty()) {
    std::cerr << "sweep grid is empty\n";
    return 2;
  }
  const SweepResult result = sweep(grid);
  std::ostringstream out;
  write_sweep_csv(out, result);
  return write_artifact(output, out.str());
}

int run_verify(int p, int n, const std::string& bias, const std::string& bias_kind,
               const std::string& output) {
  const WalkParams params = resolve_params(p, n, bias, bias_kind);
  const InstanceSuite suite = run_instance_suite(params);
  const int rc = write_artifact(output, verification_report_json(suite));
  if (rc != 0) return rc;
  return suite.passed() ? 0 : 1;
}

int run_spectral(int p, int n, const std::string& bias, const std::string& bias_kind,
                 const std::string& output) {
  const WalkParams params = resolve_params(p, n, bias, bias_kind);
  const SpectrumReport report = verify_expander(params);
  std::ostringstream out;
  out << "eigenvalues =";
  for (double v : report.eigenvalues) out << ' ' << format_double(v);
  out << "\nsecond_largest_magnitude = " << format_double(report.second_largest_magnitude)
      << "\npredicted = " << format_double(report.predicted)
      << "\nresidual = " << format_double(report.residual)
      << "\nsolver_disagreement = " << format_double(report.solver_disagreement)
      << "\nwitness_verified = " << (report.witness_verified ? "true" : "false") << "\n";
  const int rc = write_artifact(output, out.str());
  if (rc != 0) return rc;
  return (report.residual < 1e-10 && report.witness_verified) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for the generalized sticky random walk"};
  app.require_subcommand(1);

  int p = 2, n = 1, count = 1;
  uint64_t seed = 0;
  std::string bias = "0", bias_kind = "delta", output, format = "csv", sampler = "direct";
  std::string p_range = "2", n_values = "16", lambda_range, delta_range, step_text = "1/100";

  auto add_instance_flags = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "number of states")->required();
    cmd->add_option("--n", n, "walk length")->required();
    cmd->add_option("--bias", bias, "bias as a fraction string, e.g. 3/10")->required();
    cmd->add_option("--bias-kind", bias_kind, "delta or lambda")
        ->check(CLI::IsMember({"delta", "lambda"}));
    cmd->add_option("--output", output, "output path (default stdout)");
  };

  CLI::App* sample_cmd = app.add_subcommand("sample", "draw walk strings");
  add_instance_flags(sample_cmd);
  sample_cmd->add_option("--seed", seed, "64-bit RNG seed");
  sample_cmd->add_option("--count", count, "number of strings");
  sample_cmd->add_option("--sampler", sampler, "direct or increments")
      ->check(CLI::IsMember({"direct", "increments"}));

  CLI::App* dist_cmd = app.add_subcommand("dist", "exact zero-count distribution");
  add_instance_flags(dist_cmd);
  dist_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* moments_cmd = app.add_subcommand("moments", "Krawtchouk moments and closed forms");
  add_instance_flags(moments_cmd);

  CLI::App* tvd_cmd = app.add_subcommand("tvd", "total variation report");
  add_instance_flags(tvd_cmd);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "grid sweep to CSV");
  sweep_cmd->add_option("--p", p_range, "p range, e.g. 2..5")->required();
  sweep_cmd->add_option("--n", n_values, "comma-separated walk lengths")->required();
  sweep_cmd->add_option("--lambda", lambda_range, "paper-lambda range, e.g. 0.01..0.25");
  sweep_cmd->add_option("--delta", delta_range, "delta range");
  sweep_cmd->add_option("--step", step_text, "grid step");
  sweep_cmd->add_option("--output", output, "output path (default stdout)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "per-instance verification suite");
  add_instance_flags(verify_cmd);

  CLI::App* spectral_cmd = app.add_subcommand("spectral", "eigenvalue report");
  add_instance_flags(spectral_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (sample_cmd->parsed()) return run_sample(p, n, bias, bias_kind, seed, count, sampler, output);
    if (dist_cmd->parsed()) return run_dist(p, n, bias, bias_kind, format, output);
    if (moments_cmd->parsed()) return run_moments(p, n, bias, bias_kind, output);
    if (tvd_cmd->parsed()) return run_tvd(p, n, bias, bias_kind, output);
    if (sweep_cmd->parsed())
      return run_sweep(p_range, n_values, lambda_range, delta_range, step_text, output);
    if (verify_cmd->parsed()) return run_verify(p, n, bias, bias_kind, output);
    if (spectral_cmd->parsed()) return run_spectral(p, n, bias, bias_kind, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
