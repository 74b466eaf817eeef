#pragma once

#include <string_view>

#include "persuasion/model.hpp"

namespace persuasion {

enum class Regime {
  AutomaticAffirmation,
  SelfSufficiency,
  Complementarity,
  AutomaticRejection,
};

std::string_view to_string(Regime regime);

/// Closed-form cutoffs of the Bayesian (k = 0) game.
struct Thresholds {
  double rho_bar = 0.0;       ///< prior above which every message is supported
  double p_bar = 0.0;         ///< internal/external focus cutoff on p
  double rho_hat = 0.0;       ///< complementarity -> self-sufficiency switch
  double rho_underbar = 0.0;  ///< prior at which r_B^comp reaches 1
};

struct EquilibriumOutcome {
  Regime regime = Regime::SelfSufficiency;
  double rG_star = 1.0;
  double rB_star = 0.0;
  double profit = 0.0;
  bool self_feasible = false;
  bool comp_feasible = false;

  SenderStrategy strategy() const { return {rG_star, rB_star}; }
};

/// Evaluates rho_bar, p_bar, rho_hat and rho_underbar; k is ignored.
Thresholds baseline_thresholds(const ModelParams& params);

/// Largest r_B keeping the s = 0 posterior at the support threshold.
/// Unclamped; requires rho0 < 1.
double rb_self(const ModelParams& params);

/// Largest r_B keeping the s = 1 posterior at the support threshold, capped
/// at 1. Requires rho0 < 1.
double rb_comp(const ModelParams& params);

/// Bayesian equilibrium. Requires k = 0 (use solve_equilibrium_biased
/// otherwise).
///
/// Boundary convention: rho0 = rho_bar is automatic affirmation and
/// rho0 = rho_hat is self-sufficiency. The closed-form profit is
/// cross-checked against sender_expected_payoff; a mismatch beyond 1e-9 throws
/// std::logic_error.
EquilibriumOutcome solve_equilibrium(const ModelParams& params);

/// Clamp a closed-form rate into [0, 1].
double clamp_rate(double r);

}  // namespace persuasion
