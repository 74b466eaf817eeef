#include "persuasion/biased_equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "persuasion/decision.hpp"

namespace persuasion {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Closed forms that land a hair outside [0, 1] from rounding.
constexpr double kRateGuard = 1e-12;

void require_partial_bias(const ModelParams& params) {
  if (params.k >= 1.0) {
    throw Error(ErrorCode::KFullBias,
                "strategy formulas divide by 1 - k; at k = 1 the receiver "
                "decides on the prior alone");
  }
}

}  // namespace

BiasedThresholds biased_thresholds(const ModelParams& params) {
  params.validate();
  const double rho0 = params.rho0;
  const double p = params.p;
  const double q = params.q;
  const double v = params.v;
  const double k = params.k;
  const double c = 1.0 - k;

  BiasedThresholds t;
  const double keep_bad = k + c * (1.0 - q);
  const double keep_good = k + c * (1.0 - p);
  t.rho_bbar =
      (1.0 - v) * keep_bad / ((1.0 - v) * keep_bad + (1.0 + v) * keep_good);

  const double pos_bad = k + c * q;
  const double pos_good = k + c * p;
  t.rho_uubar = (1.0 - v) * k * pos_bad /
                ((1.0 - v) * k * pos_bad + (1.0 + v) * pos_good);

  t.rho_plus = (v - 1.0) * ((k - 1.0) * q + 1.0) * ((k - 1.0) * q + 1.0) /
               ((k - 1.0) * q *
                    (-(k - 1.0) * p * (v + 1.0) + (k - 1.0) * q * (v - 1.0) -
                     4.0) -
                2.0);

  t.rho_hat_cb = (v - 1.0) * (k * (q - 1.0) - q) * ((k - 1.0) * q + 1.0) /
                 ((1.0 - k) * p * ((k - 1.0) * q * (v - 1.0) - 2.0) +
                  (k - 1.0) * (k - 1.0) * q * q * (v - 1.0) + 2.0);

  if (k < 1.0 && rho0 > 0.0 && rho0 < 1.0) {
    const double lean = k * (v - 1.0) * ((k - 1.0) * q + 1.0);
    t.p1 = (rho0 * (lean - v - 1.0) - lean) / ((k - 1.0) * rho0 * (v + 1.0));

    // Root in p of rho0 + (1-rho0) r_B^self = rho0 p + (1-rho0) q r_B^comp
    // with r_B^comp uncapped; both sides are affine in p.
    const double vr = params.incentive_ratio();
    const double inv_prior_ratio = (1.0 - rho0) / rho0;
    const double num = 1.0 + vr / (c * (1.0 - c * q)) -
                       vr * q * k / (c * (k + c * q)) -
                       k * (1.0 - q) * inv_prior_ratio / c;
    const double den = 1.0 + vr / (1.0 - c * q) + vr * q / (k + c * q);
    t.p2 = num / den;
    t.p_bbar = std::min(t.p1, t.p2);
  } else {
    t.p1 = kNaN;
    t.p2 = kNaN;
    t.p_bbar = kNaN;
  }
  return t;
}

double rho_bbar_ratio_form(const ModelParams& params) {
  params.validate();
  const double k = params.k;
  const double v = params.v;
  const double ratio =
      (k + (1.0 - k) * (1.0 - params.p)) / (k + (1.0 - k) * (1.0 - params.q));
  return (1.0 - v) / ((1.0 - v) + (1.0 + v) * ratio);
}

double rho_uubar_ratio_form(const ModelParams& params) {
  params.validate();
  const double k = params.k;
  const double v = params.v;
  const double ratio =
      (k + (1.0 - k) * params.p) / (k + (1.0 - k) * params.q);
  return (1.0 - v) * k / ((1.0 - v) * k + (1.0 + v) * ratio);
}

double rb_self_biased(const ModelParams& params) {
  params.validate();
  require_partial_bias(params);
  const double k = params.k;
  const double c = 1.0 - k;
  const double odds = (1.0 - c * params.p) / (1.0 - c * params.q);
  return (odds * params.incentive_ratio() * params.prior_ratio() - k) / c;
}

double rb_comp_biased_raw(const ModelParams& params) {
  params.validate();
  require_partial_bias(params);
  const double k = params.k;
  const double odds =
      (params.p + k * (1.0 - params.p)) / (params.q + k * (1.0 - params.q));
  return (odds * params.incentive_ratio() * params.prior_ratio() - k) /
         (1.0 - k);
}

double rb_comp_biased(const ModelParams& params) {
  return std::min(1.0, rb_comp_biased_raw(params));
}

EquilibriumOutcome solve_equilibrium_biased(const ModelParams& params) {
  params.validate();
  EquilibriumOutcome out;
  out.rG_star = 1.0;

  if (params.k >= 1.0) {
    if (params.rho0 >= params.support_threshold() - kSupportTolerance) {
      out.regime = Regime::AutomaticAffirmation;
      out.rB_star = 1.0;
      out.profit = 1.0;
      out.self_feasible = out.comp_feasible = true;
    } else {
      out.regime = Regime::AutomaticRejection;
      out.rB_star = 0.0;
      out.profit = 0.0;
    }
    return out;
  }

  const BiasedThresholds t = biased_thresholds(params);
  if (params.rho0 >= t.rho_bbar) {
    out.regime = Regime::AutomaticAffirmation;
    out.rB_star = 1.0;
    out.profit = sender_expected_payoff(params, out.strategy()).total;
    out.self_feasible = out.comp_feasible = true;
    return out;
  }
  if (params.rho0 < t.rho_uubar) {
    out.regime = Regime::AutomaticRejection;
    out.rB_star = 0.0;
    out.profit = 0.0;
    return out;
  }

  const double self_raw = rb_self_biased(params);
  const double comp_raw = rb_comp_biased(params);
  out.self_feasible = self_raw >= -kRateGuard;
  out.comp_feasible = comp_raw >= -kRateGuard;

  double best_profit = -1.0;
  if (out.self_feasible) {
    const double rate = clamp_rate(self_raw);
    best_profit = sender_expected_payoff(params, {1.0, rate}).total;
    out.regime = Regime::SelfSufficiency;
    out.rB_star = rate;
  }
  if (out.comp_feasible) {
    const double rate = clamp_rate(comp_raw);
    const double profit = sender_expected_payoff(params, {1.0, rate}).total;
    // Self-sufficiency always has the lower rate, so it keeps exact ties.
    if (profit > best_profit) {
      best_profit = profit;
      out.regime = Regime::Complementarity;
      out.rB_star = rate;
    }
  }
  if (best_profit < 0.0) {
    // Unreachable for rho0 >= rho_uubar up to rounding; treat as rejection.
    out.regime = Regime::AutomaticRejection;
    out.rB_star = 0.0;
    best_profit = 0.0;
  }
  out.profit = best_profit;
  return out;
}

Regime threshold_regime(const ModelParams& params) {
  params.validate();
  if (params.k >= 1.0) {
    return params.rho0 >= params.support_threshold() - kSupportTolerance
               ? Regime::AutomaticAffirmation
               : Regime::AutomaticRejection;
  }
  const BiasedThresholds t = biased_thresholds(params);
  if (params.rho0 >= t.rho_bbar) return Regime::AutomaticAffirmation;
  if (params.rho0 < t.rho_uubar) return Regime::AutomaticRejection;
  if (params.p <= t.p_bbar || params.rho0 >= t.rho_hat_cb) {
    return Regime::SelfSufficiency;
  }
  return Regime::Complementarity;
}

}  // namespace persuasion
