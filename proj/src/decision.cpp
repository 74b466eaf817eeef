#include "persuasion/decision.hpp"

#include "persuasion/beliefs.hpp"

namespace persuasion {

double receiver_utility(Message m, std::optional<ReceiverAction> a,
                        SenderType theta, double v) {
  if (m == Message::Silent) {
    if (a.has_value()) {
      throw Error(ErrorCode::ActionWithoutMessage,
                  "receiver acts only after a message");
    }
    return 0.0;
  }
  if (!a.has_value()) {
    throw Error(ErrorCode::InvalidParams, "m = 1 requires a receiver action");
  }
  const double action = *a == ReceiverAction::Support ? 1.0 : 0.0;
  const double type = theta == SenderType::Good ? 1.0 : 0.0;
  const double self_signal = action * v;
  return self_signal - (action - type) * (action - type);
}

bool receiver_supports(double rho2, double v) {
  return rho2 >= 0.5 * (1.0 - v) - kSupportTolerance;
}

PayoffReport sender_expected_payoff(const ModelParams& params,
                                    const SenderStrategy& strategy) {
  PayoffReport report;
  const double good = params.rho0 * strategy.rG;
  const double bad = (1.0 - params.rho0) * strategy.rB;
  double rho1 = 0.0;
  try {
    rho1 = posterior_after_message(params, strategy);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoMessagePossible) throw;
    return report;
  }

  report.prob_s1 = good * params.p + bad * params.q;
  report.prob_s0 = good * (1.0 - params.p) + bad * (1.0 - params.q);
  report.prob_message = good + bad;

  report.branch_s1_supported = receiver_supports(
      posterior_after_signal(rho1, Signal::Present, params), params.v);
  report.branch_s0_supported = receiver_supports(
      posterior_after_signal(rho1, Signal::Absent, params), params.v);

  if (report.branch_s1_supported) report.total += report.prob_s1;
  if (report.branch_s0_supported) report.total += report.prob_s0;
  return report;
}

}  // namespace persuasion
