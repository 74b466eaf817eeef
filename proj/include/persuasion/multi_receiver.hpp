#pragma once

#include <string_view>

#include "persuasion/model.hpp"

namespace persuasion {

/// Population weights of the three ex-post receiver groups: M sees only the
/// message, MS sees message and signal, N sees neither.
struct SegmentShares {
  double alpha_m = 0.0;
  double alpha_ms = 1.0;
  double alpha_n = 0.0;

  /// Nonnegative and summing to 1 within 1e-12; throws InvalidShares.
  void validate() const;
  bool operator==(const SegmentShares&) const = default;
};

/// Shares with alpha_M / alpha_MS = ratio and no uninformed receivers.
SegmentShares shares_from_ratio(double ratio);

enum class MultiStrategy {
  SelfSufficiency,
  Complementarity,
  DirectPersuasion,
  AutomaticAffirmation,
};

std::string_view to_string(MultiStrategy s);

struct SegmentPayoff {
  double total = 0.0;
  bool m_supported = false;      ///< group M supports after m = 1
  bool ms_s1_supported = false;  ///< group MS supports after (m = 1, s = 1)
  bool ms_s0_supported = false;  ///< group MS supports after (m = 1, s = 0)
  double prob_message = 0.0;
};

/// Segment-weighted sender payoff: alpha_M Pr(m=1) 1[rho1 supports] +
/// alpha_MS sum_s Pr(m=1, s) 1[rho2(s) supports]. Requires k = 0.
SegmentPayoff segment_weighted_payoff(const ModelParams& params,
                                      const SenderStrategy& strategy,
                                      const SegmentShares& shares);

struct CandidateProfits {
  double self = 0.0;
  double comp = 0.0;
  double direct = 0.0;
  double rb_self = 0.0;
  double rb_comp = 0.0;
  double rb_direct = 0.0;
};

struct MultiReceiverOutcome {
  MultiStrategy strategy_label = MultiStrategy::SelfSufficiency;
  double rB_star = 0.0;
  double profit = 0.0;
  CandidateProfits candidates;
};

struct SwitchThresholds {
  /// alpha_M / alpha_MS above which the sender leaves complementarity.
  double comp_case = 0.0;
  /// alpha_M / alpha_MS above which the sender leaves self-sufficiency for
  /// direct persuasion.
  double self_case = 0.0;
};

/// Largest r_B at which the message alone keeps rho1 at the support
/// threshold, capped at 1. Requires k = 0 and rho0 < 1.
double rb_direct(const ModelParams& params);

/// Profits of the three candidate strategies, each evaluated with
/// segment_weighted_payoff at its own (clamped) r_B.
CandidateProfits multireceiver_profits(const ModelParams& params,
                                       const SegmentShares& shares);

/// Multi-receiver equilibrium. rho0 >= rho_bar is automatic affirmation
/// (r_B = 1); otherwise the best candidate wins. Ties: lowest r_B, then the
/// single-receiver benchmark strategy. k > 0 throws UnsupportedCombination.
MultiReceiverOutcome solve_multireceiver(const ModelParams& params,
                                         const SegmentShares& shares);

SwitchThresholds switch_thresholds(const ModelParams& params);

}  // namespace persuasion
