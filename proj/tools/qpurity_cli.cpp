#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpurity/optimizer.hpp"
#include "qpurity/pauli.hpp"
#include "qpurity/reductions.hpp"
#include "qpurity/state.hpp"
#include "qpurity/state_io.hpp"
#include "qpurity/uniformity.hpp"
#include "report.hpp"

namespace {

using namespace qpurity;
using tool::AnalysisReport;

constexpr int kExitUnreadable = 2;
constexpr int kExitMalformed = 3;
constexpr int kExitInvalidArg = 4;

struct Fail {
  int code;
  std::string message;
};

StateVector resolve_state(const std::string& builtin, int n,
                          const std::string& path, std::string& descriptor) {
  if (!builtin.empty()) {
    descriptor = "builtin:" + builtin;
    if (builtin == "zero") return product_state(n);
    if (builtin == "ghz") return ghz_state(n);
    if (builtin == "zha9") return zha_nine_qubit_state();
    throw Fail{kExitInvalidArg, "unknown builtin state: " + builtin};
  }
  descriptor = "file:" + path;
  try {
    return read_state_file(path);
  } catch (const StateParseError& e) {
    throw Fail{kExitMalformed, std::string("malformed state file: ") + e.what()};
  } catch (const std::exception& e) {
    throw Fail{kExitUnreadable, e.what()};
  }
}

std::vector<int> parse_k_list(const std::string& csv, int n) {
  std::vector<int> ks;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    int k = 0;
    try {
      std::size_t pos = 0;
      k = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw Fail{kExitInvalidArg, "bad marginal size: " + item};
    }
    if (k < 1 || k > n - 1) {
      throw Fail{kExitInvalidArg, "marginal size out of range: " + item};
    }
    ks.push_back(k);
  }
  if (ks.empty()) throw Fail{kExitInvalidArg, "empty k list"};
  return ks;
}

int cmd_analyze(const std::string& builtin, int n, const std::string& path,
                const std::string& k_csv, const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  AnalysisReport report;
  StateVector state = resolve_state(builtin, n, path, report.state_descriptor);
  report.n = state.num_qubits();

  for (int k : parse_k_list(k_csv, report.n)) {
    report.spectra.push_back(purity_spectrum(state, k));
    if (k <= report.n / 2) {
      report.uniformity.push_back(is_k_uniform(state, k));
    }
  }

  report.invariants = aggregate_invariants(state);
  report.pi_me_direct = average_balanced_purity(state);
  if (report.n == 9) {
    report.pi_me_invariant_form = pi_me_from_invariants(*report.invariants);
    report.pi_me_floor_form = pi_me_lower_bound_form(state);
    report.inversion_identity_residual = eq_identity_residual(state);
    report.mmes = mmes_verdict(state);
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::string text = tool::render_report(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    tool::write_text_atomic(out_path, text);
    std::cout << out_path << "\n";
  }
  return 0;
}

struct Check {
  std::string name;
  bool passed;
  double observed;
  double expected;
};

void check(std::vector<Check>& checks, const std::string& name, double observed,
           double expected, double tol) {
  checks.push_back({name, std::abs(observed - expected) <= tol, observed, expected});
}

int report_checks(const std::vector<Check>& checks) {
  int failures = 0;
  std::string first_failure;
  double max_residual = 0.0;
  for (const Check& c : checks) {
    max_residual = std::max(max_residual, std::abs(c.observed - c.expected));
    if (!c.passed) {
      ++failures;
      if (first_failure.empty()) first_failure = c.name;
      std::cerr << "FAIL " << c.name << ": observed " << c.observed << " expected "
                << c.expected << "\n";
    }
  }
  if (failures == 0) {
    std::cout << "pass (" << checks.size() << " checks, max residual "
              << max_residual << ")\n";
    return 0;
  }
  std::cout << "fail (" << failures << "/" << checks.size()
            << " checks; first failing check: " << first_failure << ")\n";
  return 1;
}

int cmd_verify_reference() {
  std::vector<Check> checks;
  const StateVector zero = product_state(9);
  const StateVector ghz = ghz_state(9);
  const StateVector zha = zha_nine_qubit_state();

  auto three_ways = [&checks](const std::string& tag, const StateVector& s,
                              double expected) {
    check(checks, tag + ".pi_me_direct", average_balanced_purity(s), expected, 1e-9);
    check(checks, tag + ".pi_me_invariant_form",
          pi_me_from_invariants(aggregate_invariants(s)), expected, 1e-9);
    check(checks, tag + ".pi_me_floor_form", pi_me_lower_bound_form(s), expected, 1e-9);
  };
  three_ways("product", zero, 1.0);
  three_ways("ghz", ghz, 0.5);

  check(checks, "product.inversion_overlap_sum",
        inversion_overlap_combination(zero), 0.0, 1e-9);
  check(checks, "ghz.inversion_overlap_sum",
        inversion_overlap_combination(ghz), 4.5, 1e-9);

  // Reference targets for the reconstructed explicit state. The
  // surviving transcription does not meet them all; the failures below
  // are reported, not suppressed (see the repository README).
  check(checks, "explicit9.purity_1234",
        purity(zha, QubitSubset({1, 2, 3, 4}, 9)), 0.25, 1e-9);
  check(checks, "explicit9.purity_1278",
        purity(zha, QubitSubset({1, 2, 7, 8}, 9)), 0.125, 1e-9);
  check(checks, "explicit9.pi_me", average_balanced_purity(zha), 1.0 / 14.0, 1e-9);
  for (int k = 1; k <= 3; ++k) {
    check(checks, "explicit9.uniform_k" + std::to_string(k),
          is_k_uniform(zha, k).worst_deviation, 0.0, 1e-9);
  }
  return report_checks(checks);
}

int cmd_verify_identities(int seeds) {
  std::vector<Check> checks;
  for (int s = 0; s < seeds; ++s) {
    const StateVector psi = random_state(9, 1000 + static_cast<std::uint64_t>(s));
    const double direct = average_balanced_purity(psi);
    const std::string tag = "seed" + std::to_string(s);
    check(checks, tag + ".invariant_form_agreement",
          pi_me_from_invariants(aggregate_invariants(psi)), direct, 1e-10);
    check(checks, tag + ".floor_form_agreement", pi_me_lower_bound_form(psi),
          direct, 1e-10);
    check(checks, tag + ".inversion_identity", eq_identity_residual(psi), 0.0, 1e-9);
  }
  return report_checks(checks);
}

int cmd_search(int n, int restarts, std::uint64_t seed, const std::string& out_path) {
  if (n < 2 || n > 10) {
    throw Fail{kExitInvalidArg, "search supports 2 <= n <= 10"};
  }
  SearchConfig config;
  config.n = n;
  config.restarts = restarts;
  config.hops = 8;
  config.seed = seed;
  config.target = known_floor(n);
  // The stored explicit nine-qubit state lies in the basin of a true
  // 1/14 minimizer; seed the first restart with it as the
  // attainability witness (random starts stall ~1.4e-3 above).
  if (n == 9) config.warm_start = zha_nine_qubit_state();
  const SearchTrace trace = minimize_pi_me(config);

  std::cout << "best_pi_me " << tool::format_value(trace.best_value);
  if (auto floor = known_floor(n)) {
    std::cout << " gap_to_floor " << tool::format_value(trace.best_value - *floor);
  }
  std::cout << "\n";
  if (!out_path.empty() && trace.best_state) {
    std::ostringstream text;
    write_state(text, *trace.best_state);
    tool::write_text_atomic(out_path, text.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multipartite entanglement analysis for n-qubit pure states"};
  app.require_subcommand(1);

  std::string builtin, state_path, k_csv = "4", out_path, suite;
  int n = 9, restarts = 1, seeds = 100;
  std::uint64_t seed = 0;

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze one state");
  auto* opt_builtin =
      analyze->add_option("--builtin", builtin, "zero | ghz | zha9");
  analyze->add_option("--state", state_path, "state file path")->excludes(opt_builtin);
  analyze->add_option("--n", n, "qubit count for builtin states");
  analyze->add_option("--k", k_csv, "comma-separated marginal sizes");
  analyze->add_option("--out", out_path, "report path (stdout when absent)");

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "reference | identities")->required();
  verify->add_option("--seeds", seeds, "random-state count for identities");

  CLI::App* search = app.add_subcommand("search", "Minimize the averaged purity");
  search->add_option("--n", n, "qubit count");
  search->add_option("--restarts", restarts, "restart count");
  search->add_option("--seed", seed, "base RNG seed");
  search->add_option("--out", out_path, "best-state file path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      if (builtin.empty() && state_path.empty()) {
        throw Fail{kExitInvalidArg, "analyze needs --builtin or --state"};
      }
      return cmd_analyze(builtin, n, state_path, k_csv, out_path);
    }
    if (verify->parsed()) {
      if (suite == "reference") return cmd_verify_reference();
      if (suite == "identities") return cmd_verify_identities(seeds);
      throw Fail{kExitInvalidArg, "unknown suite: " + suite};
    }
    return cmd_search(n, restarts, seed, out_path);
  } catch (const Fail& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
