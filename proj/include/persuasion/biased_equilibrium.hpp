#pragma once

#include "persuasion/equilibrium.hpp"
#include "persuasion/model.hpp"

namespace persuasion {

/// Cutoffs of the confirmation-bias game.
///
/// p1 is the largest p at which self-sufficiency is still feasible
/// (r_B^self >= 0); p2 is the p at which self-sufficiency and interior
/// complementarity earn the same profit; p_bbar = min(p1, p2). rho_hat_cb is
/// the prior equating self-sufficiency with capped (r_B^comp = 1)
/// complementarity, and rho_plus is the prior where d r_B^self / dk changes
/// sign. Values that are undefined at the given point (p1, p2 at rho0 in
/// {0, 1} or k = 1) are NaN.
struct BiasedThresholds {
  double rho_bbar = 0.0;
  double rho_uubar = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double p_bbar = 0.0;
  double rho_hat_cb = 0.0;
  double rho_plus = 0.0;
};

BiasedThresholds biased_thresholds(const ModelParams& params);

/// The same prior cutoffs written through the ratio of modified likelihoods.
/// Algebraically identical to the fields of biased_thresholds; a second route.
double rho_bbar_ratio_form(const ModelParams& params);
double rho_uubar_ratio_form(const ModelParams& params);

/// Raw self-sufficiency rate under bias; negative means infeasible.
/// Throws KFullBias at k = 1, InvalidParams at rho0 = 1.
double rb_self_biased(const ModelParams& params);

/// Raw complementarity rate under bias (before the cap at 1).
double rb_comp_biased_raw(const ModelParams& params);

/// min(1, raw); a negative value marks the automatic-rejection region.
double rb_comp_biased(const ModelParams& params);

/// Equilibrium under confirmation bias.
///
/// rho0 >= rho_bbar: automatic affirmation; rho0 < rho_uubar: automatic
/// rejection (profit 0, strategy (1, 0)). In between the two candidate
/// strategies are scored with sender_expected_payoff and the larger profit
/// wins; ties go to the lower r_B. k = 1 decides on the prior alone.
EquilibriumOutcome solve_equilibrium_biased(const ModelParams& params);

/// Classification by p_bbar and rho_hat_cb (self-sufficiency iff
/// p <= p_bbar or rho0 >= rho_hat_cb), plus the two automatic regions.
/// Only guaranteed to match the solver where that rule was derived:
/// self-sufficiency feasible and r_B^comp capped at 1.
Regime threshold_regime(const ModelParams& params);

}  // namespace persuasion
