#include "persuasion/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "persuasion/decision.hpp"

namespace persuasion {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::AutomaticAffirmation: return "AutomaticAffirmation";
    case Regime::SelfSufficiency: return "SelfSufficiency";
    case Regime::Complementarity: return "Complementarity";
    case Regime::AutomaticRejection: return "AutomaticRejection";
  }
  return "Unknown";
}

double clamp_rate(double r) { return std::clamp(r, 0.0, 1.0); }

Thresholds baseline_thresholds(const ModelParams& params) {
  params.validate();
  const double p = params.p;
  const double q = params.q;
  const double v = params.v;

  Thresholds t;
  const double keep = (1.0 - v) * (1.0 - q);
  t.rho_bar = keep / (keep + (1.0 + v) * (1.0 - p));
  t.p_bar = (2.0 - (1.0 - v) * q) / (3.0 - 2.0 * q + v);
  t.rho_hat =
      (1.0 - q) * q * (1.0 - v) / ((p - q) * q * (1.0 - v) + 2.0 * (1.0 - p));
  // Prior at which (p/q) vRatio rRatio reaches 1.
  t.rho_underbar = (1.0 - v) * q / ((1.0 - v) * q + p * (1.0 + v));
  return t;
}

double rb_self(const ModelParams& params) {
  params.validate();
  return ((1.0 - params.p) / (1.0 - params.q)) * params.incentive_ratio() *
         params.prior_ratio();
}

double rb_comp(const ModelParams& params) {
  params.validate();
  return std::min(
      (params.p / params.q) * params.incentive_ratio() * params.prior_ratio(),
      1.0);
}

namespace {

void cross_check_profit(const ModelParams& params,
                        const EquilibriumOutcome& out) {
  const double direct = sender_expected_payoff(params, out.strategy()).total;
  if (std::abs(direct - out.profit) > 1e-9) {
    std::ostringstream os;
    os << "closed-form profit " << out.profit
       << " disagrees with evaluated payoff " << direct << " in regime "
       << to_string(out.regime);
    throw std::logic_error(os.str());
  }
}

}  // namespace

EquilibriumOutcome solve_equilibrium(const ModelParams& params) {
  params.validate();
  if (params.k != 0.0) {
    throw Error(ErrorCode::InvalidParams,
                "solve_equilibrium is the k = 0 model; use "
                "solve_equilibrium_biased");
  }
  const Thresholds t = baseline_thresholds(params);

  EquilibriumOutcome out;
  out.rG_star = 1.0;
  if (params.rho0 >= t.rho_bar) {
    out.regime = Regime::AutomaticAffirmation;
    out.rB_star = 1.0;
    out.profit = 1.0;
    out.self_feasible = true;
    out.comp_feasible = true;
    cross_check_profit(params, out);
    return out;
  }

  const double self_rate = clamp_rate(rb_self(params));
  const double comp_rate = clamp_rate(rb_comp(params));
  out.self_feasible = true;
  out.comp_feasible = true;

  const double vr = params.incentive_ratio();
  const double rho0 = params.rho0;
  const double p = params.p;
  const double q = params.q;
  if (p <= t.p_bar || rho0 >= t.rho_hat) {
    out.regime = Regime::SelfSufficiency;
    out.rB_star = self_rate;
    out.profit = rho0 * (1.0 + vr * (1.0 - p) / (1.0 - q));
  } else {
    out.regime = Regime::Complementarity;
    out.rB_star = comp_rate;
    out.profit = std::min(rho0 * p + (1.0 - rho0) * q, rho0 * p * (1.0 + vr));
  }
  cross_check_profit(params, out);
  return out;
}

}  // namespace persuasion
