#include "persuasion/multi_receiver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "persuasion/beliefs.hpp"
#include "persuasion/decision.hpp"
#include "persuasion/equilibrium.hpp"

namespace persuasion {

void SegmentShares::validate() const {
  const bool nonneg = alpha_m >= 0.0 && alpha_ms >= 0.0 && alpha_n >= 0.0;
  const double sum = alpha_m + alpha_ms + alpha_n;
  if (!nonneg || !(std::abs(sum - 1.0) <= 1e-12)) {
    std::ostringstream os;
    os << "segment shares must be nonnegative and sum to 1 (alpha_M="
       << alpha_m << ", alpha_MS=" << alpha_ms << ", alpha_N=" << alpha_n
       << ")";
    throw Error(ErrorCode::InvalidShares, os.str());
  }
}

SegmentShares shares_from_ratio(double ratio) {
  if (!(ratio >= 0.0) || !std::isfinite(ratio)) {
    throw Error(ErrorCode::InvalidShares, "segment ratio must be finite and >= 0");
  }
  SegmentShares s;
  s.alpha_ms = 1.0 / (1.0 + ratio);
  s.alpha_m = 1.0 - s.alpha_ms;
  s.alpha_n = 0.0;
  return s;
}

std::string_view to_string(MultiStrategy s) {
  switch (s) {
    case MultiStrategy::SelfSufficiency: return "SelfSufficiency";
    case MultiStrategy::Complementarity: return "Complementarity";
    case MultiStrategy::DirectPersuasion: return "DirectPersuasion";
    case MultiStrategy::AutomaticAffirmation: return "AutomaticAffirmation";
  }
  return "Unknown";
}

namespace {

void require_bayesian(const ModelParams& params) {
  if (params.k != 0.0) {
    throw Error(ErrorCode::UnsupportedCombination,
                "multiple receiver groups are only modeled for k = 0");
  }
}

}  // namespace

SegmentPayoff segment_weighted_payoff(const ModelParams& params,
                                      const SenderStrategy& strategy,
                                      const SegmentShares& shares) {
  params.validate();
  shares.validate();
  require_bayesian(params);

  SegmentPayoff out;
  double rho1 = 0.0;
  try {
    rho1 = posterior_after_message(params, strategy);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoMessagePossible) throw;
    return out;
  }
  const double good = params.rho0 * strategy.rG;
  const double bad = (1.0 - params.rho0) * strategy.rB;
  out.prob_message = good + bad;
  const double prob_s1 = good * params.p + bad * params.q;
  const double prob_s0 = good * (1.0 - params.p) + bad * (1.0 - params.q);

  out.m_supported = receiver_supports(rho1, params.v);
  out.ms_s1_supported = receiver_supports(
      posterior_after_signal(rho1, Signal::Present, params), params.v);
  out.ms_s0_supported = receiver_supports(
      posterior_after_signal(rho1, Signal::Absent, params), params.v);

  if (out.m_supported) out.total += shares.alpha_m * out.prob_message;
  double ms = 0.0;
  if (out.ms_s1_supported) ms += prob_s1;
  if (out.ms_s0_supported) ms += prob_s0;
  out.total += shares.alpha_ms * ms;
  return out;
}

double rb_direct(const ModelParams& params) {
  params.validate();
  require_bayesian(params);
  return std::min(1.0, params.incentive_ratio() * params.prior_ratio());
}

CandidateProfits multireceiver_profits(const ModelParams& params,
                                       const SegmentShares& shares) {
  params.validate();
  shares.validate();
  require_bayesian(params);

  CandidateProfits c;
  c.rb_self = clamp_rate(rb_self(params));
  c.rb_comp = clamp_rate(rb_comp(params));
  c.rb_direct = clamp_rate(rb_direct(params));
  c.self = segment_weighted_payoff(params, {1.0, c.rb_self}, shares).total;
  c.comp = segment_weighted_payoff(params, {1.0, c.rb_comp}, shares).total;
  c.direct = segment_weighted_payoff(params, {1.0, c.rb_direct}, shares).total;
  return c;
}

MultiReceiverOutcome solve_multireceiver(const ModelParams& params,
                                         const SegmentShares& shares) {
  params.validate();
  shares.validate();
  require_bayesian(params);

  MultiReceiverOutcome out;
  const Thresholds t = baseline_thresholds(params);
  if (params.rho0 >= t.rho_bar) {
    out.strategy_label = MultiStrategy::AutomaticAffirmation;
    out.rB_star = 1.0;
    out.profit = segment_weighted_payoff(params, {1.0, 1.0}, shares).total;
    out.candidates = {out.profit, out.profit, out.profit, 1.0, 1.0, 1.0};
    return out;
  }

  out.candidates = multireceiver_profits(params, shares);
  const CandidateProfits& c = out.candidates;

  struct Candidate {
    MultiStrategy label;
    double rate;
    double profit;
  };
  std::array<Candidate, 3> order{{
      {MultiStrategy::SelfSufficiency, c.rb_self, c.self},
      {MultiStrategy::Complementarity, c.rb_comp, c.comp},
      {MultiStrategy::DirectPersuasion, c.rb_direct, c.direct},
  }};
  // Benchmark strategy first so that it survives exact (profit, rate) ties.
  const Regime benchmark = solve_equilibrium(params).regime;
  if (benchmark == Regime::Complementarity) std::swap(order[0], order[1]);

  const Candidate* best = &order[0];
  for (const Candidate& cand : order) {
    if (cand.profit > best->profit ||
        (cand.profit == best->profit && cand.rate < best->rate)) {
      best = &cand;
    }
  }
  out.strategy_label = best->label;
  out.rB_star = best->rate;
  out.profit = best->profit;
  return out;
}

SwitchThresholds switch_thresholds(const ModelParams& params) {
  params.validate();
  const double p = params.p;
  const double q = params.q;
  const double v = params.v;
  SwitchThresholds s;
  s.comp_case = std::min(0.5 * (1.0 + v) * (p - q),
                         2.0 * p * (1.0 - q) /
                                 (2.0 - p * (1.0 + v) - q * (1.0 - v)) -
                             1.0);
  s.self_case = ((1.0 - v) * (1.0 - p) * (1.0 - q) +
                 (1.0 + v) * (1.0 - p - q + q * q)) /
                ((1.0 + v) * (p - q));
  return s;
}

}  // namespace persuasion
