#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace persuasion {

enum class ErrorCode {
  InvalidParams,
  InvalidShares,
  NoMessagePossible,
  ActionWithoutMessage,
  KFullBias,
  UnsupportedCombination,
  InvalidStep,
  DomainExit,
  InvalidConfig,
  IOFailure,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Game primitives.
///
/// rho0 is the receiver's prior that the sender is a good fit, p and q are the
/// investigator's true- and false-positive rates, v is the receiver's
/// self-signaling premium and k the confirmation-bias weight (k = 0 is
/// Bayesian, k = 1 ignores all new information).
struct ModelParams {
  double rho0 = 0.5;
  double p = 0.9;
  double q = 0.1;
  double v = 0.0;
  double k = 0.0;

  /// Throws Error{InvalidParams} unless 0 <= rho0 <= 1, 0 < q < 1/2 < p < 1,
  /// 0 <= v < 1 and 0 <= k <= 1.
  void validate() const;
  bool is_valid() const noexcept;

  /// rho0 / (1 - rho0); throws InvalidParams at rho0 = 1.
  double prior_ratio() const;
  /// (1 + v) / (1 - v).
  double incentive_ratio() const noexcept { return (1.0 + v) / (1.0 - v); }
  /// Support threshold (1 - v) / 2 on the posterior.
  double support_threshold() const noexcept { return 0.5 * (1.0 - v); }

  bool operator==(const ModelParams&) const = default;
};

ModelParams make_params(double rho0, double p, double q, double v,
                        double k = 0.0);

/// Message probabilities: rG when the sender is a good fit, rB when not.
struct SenderStrategy {
  double rG = 1.0;
  double rB = 0.0;

  /// Both rates in [0, 1].
  void validate() const;
  bool operator==(const SenderStrategy&) const = default;
};

enum class Signal : int { Absent = 0, Present = 1 };
enum class Message : int { Silent = 0, Sent = 1 };
enum class ReceiverAction : int { Ignore = 0, Support = 1 };
enum class SenderType : int { Bad = 0, Good = 1 };

/// Posterior path of a single receiver: prior, after message, after signal.
struct BeliefState {
  double rho0 = 0.0;
  double rho1 = 0.0;
  double rho2 = 0.0;
};

}  // namespace persuasion
