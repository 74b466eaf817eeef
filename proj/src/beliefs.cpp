#include "persuasion/beliefs.hpp"

namespace persuasion {

namespace {

double likelihood_good(Signal s, const ModelParams& params) {
  return s == Signal::Present ? params.p : 1.0 - params.p;
}

double likelihood_bad(Signal s, const ModelParams& params) {
  return s == Signal::Present ? params.q : 1.0 - params.q;
}

// Weighted update shared by both stages: the prior enters each likelihood
// with weight k.
double biased_update(double prior, double like_good, double like_bad,
                     double k) {
  const double good = k * prior + (1.0 - k) * like_good * prior;
  const double bad = k * (1.0 - prior) + (1.0 - k) * like_bad * (1.0 - prior);
  return good / (good + bad);
}

}  // namespace

double posterior_after_message(const ModelParams& params,
                               const SenderStrategy& strategy) {
  const double rho0 = params.rho0;
  const double k = params.k;
  const double good = k * rho0 + (1.0 - k) * strategy.rG * rho0;
  const double denom =
      good + k * (1.0 - rho0) + (1.0 - k) * strategy.rB * (1.0 - rho0);
  if (!(denom > 0.0)) {
    throw Error(ErrorCode::NoMessagePossible,
                "m = 1 has zero probability; posterior undefined");
  }
  return good / denom;
}

double posterior_after_signal(double rho1, Signal s, const ModelParams& params) {
  if (!(rho1 >= 0.0 && rho1 <= 1.0)) {
    throw Error(ErrorCode::InvalidParams, "rho1 must lie in [0,1]");
  }
  return biased_update(rho1, likelihood_good(s, params),
                       likelihood_bad(s, params), params.k);
}

double signal_only_posterior(const ModelParams& params, Signal s) {
  return biased_update(params.rho0, likelihood_good(s, params),
                       likelihood_bad(s, params), 0.0);
}

double signal_probability_given_message(const ModelParams& params,
                                        const SenderStrategy& strategy,
                                        Signal s) {
  const double good = strategy.rG * params.rho0;
  const double bad = strategy.rB * (1.0 - params.rho0);
  if (!(good + bad > 0.0)) {
    throw Error(ErrorCode::NoMessagePossible,
                "m = 1 has zero probability; signal law undefined");
  }
  return (likelihood_good(s, params) * good + likelihood_bad(s, params) * bad) /
         (good + bad);
}

BeliefState belief_path(const ModelParams& params,
                        const SenderStrategy& strategy, Signal s) {
  BeliefState state;
  state.rho0 = params.rho0;
  state.rho1 = posterior_after_message(params, strategy);
  state.rho2 = posterior_after_signal(state.rho1, s, params);
  return state;
}

}  // namespace persuasion
