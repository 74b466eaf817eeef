#pragma once

#include <optional>

#include "persuasion/model.hpp"

namespace persuasion {

/// Absolute slack on the support comparison. Closed-form strategies place a
/// posterior exactly on the threshold; rounding must not flip that decision.
inline constexpr double kSupportTolerance = 1e-12;

/// u(a) - (a - theta)^2 with u(0) = 0, u(1) = v when a message was sent;
/// 0 when m = 0. Supplying an action with m = 0 throws ActionWithoutMessage,
/// omitting it with m = 1 throws InvalidParams.
double receiver_utility(Message m, std::optional<ReceiverAction> a,
                        SenderType theta, double v);

/// rho2 >= (1 - v) / 2; indifference counts as support.
bool receiver_supports(double rho2, double v);

struct PayoffReport {
  double total = 0.0;
  bool branch_s1_supported = false;
  bool branch_s0_supported = false;
  double prob_message = 0.0;
  double prob_s1 = 0.0;  // Pr(m = 1, s = 1)
  double prob_s0 = 0.0;  // Pr(m = 1, s = 0)
};

/// Expected sender profit (normalized so that support is worth 1): the sum of
/// Pr(m = 1, s) over signal branches in which the receiver supports.
/// A strategy that never sends a message yields the all-zero report.
PayoffReport sender_expected_payoff(const ModelParams& params,
                                    const SenderStrategy& strategy);

}  // namespace persuasion
