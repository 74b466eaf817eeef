#pragma once

#include "persuasion/model.hpp"

namespace persuasion {

/// Belief after observing m = 1.
///
/// With confirmation bias the receiver mixes weight k of the prior into both
/// likelihoods; k = 0 is Bayes' rule and k = 1 returns rho0 unchanged.
/// Throws Error{NoMessagePossible} when m = 1 has zero probability under the
/// receiver's updating rule (only possible at k = 0).
double posterior_after_message(const ModelParams& params,
                               const SenderStrategy& strategy);

/// Belief after the investigator's signal, starting from rho1.
double posterior_after_signal(double rho1, Signal s, const ModelParams& params);

/// Bayesian posterior from the signal alone, the message being uninformative.
double signal_only_posterior(const ModelParams& params, Signal s);

/// Pr(s | m = 1) under the true data-generating process.
/// Throws NoMessagePossible if rG*rho0 + rB*(1-rho0) = 0.
double signal_probability_given_message(const ModelParams& params,
                                        const SenderStrategy& strategy,
                                        Signal s);

/// rho0 -> rho1 -> rho2 for one signal realization.
BeliefState belief_path(const ModelParams& params,
                        const SenderStrategy& strategy, Signal s);

}  // namespace persuasion
