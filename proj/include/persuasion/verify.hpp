#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "persuasion/model.hpp"

namespace persuasion {

/// One line of a verification report.
struct CheckResult {
  std::string name;
  std::size_t draws = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::size_t draws = 1000;
  double grid_step = 1e-4;
  std::uint64_t seed = 42;
  std::size_t martingale_draws = 10000;
  std::size_t sign_draws = 200;
  double fd_step = 1e-6;
  std::size_t mc_pairs = 50;
  std::uint64_t mc_trials = 1'000'000;
  unsigned threads = 0;

  /// Throws InvalidConfig on zero counts or a step outside (0, 1].
  void validate() const;
};

// Each check draws from its own stream of the master seed, so any subset can
// be run alone with the same results.

/// Closed-form k = 0 solver against the exhaustive grid.
CheckResult check_grid_baseline(const VerifyOptions& opt);
/// Biased solver against the grid, including winner labels and the
/// rejection region.
CheckResult check_grid_biased(const VerifyOptions& opt);

CheckResult check_martingale(const VerifyOptions& opt);
CheckResult check_biased_reduction(const VerifyOptions& opt);
CheckResult check_multi_reduction(const VerifyOptions& opt);

/// 101 x 101 regime maps over (rho0, v).
CheckResult check_regime_maps(const VerifyOptions& opt);

/// Worked anchors at q = 0.3, v = 0.1.
CheckResult check_profit_anchors(const VerifyOptions& opt);

/// Derivative-sign claims, one result per claim.
std::vector<CheckResult> check_comparative_statics(const VerifyOptions& opt);

/// Simulated support frequency and inauthentic share against the analytic
/// values.
CheckResult check_monte_carlo(const VerifyOptions& opt);

/// Bisection on alpha_M / alpha_MS against switch_thresholds.
CheckResult check_switch_thresholds(const VerifyOptions& opt);

/// Segment-weighted grid against solve_multireceiver.
CheckResult check_grid_multireceiver(const VerifyOptions& opt);

/// A numbered acceptance criterion made of one or more checks.
struct Criterion {
  int number = 0;
  std::string title;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Runs criteria 1..8 in order.
std::vector<Criterion> run_acceptance(const VerifyOptions& opt);

/// Locates the alpha_M / alpha_MS ratio in [lo, hi] at which the
/// multi-receiver strategy stops matching the label at `lo`. Requires a
/// single switch inside the bracket.
double bisect_switch_ratio(const ModelParams& params, double lo, double hi,
                           double tol);

}  // namespace persuasion
