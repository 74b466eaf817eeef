#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "persuasion/model.hpp"
#include "persuasion/multi_receiver.hpp"

namespace persuasion {

// Independent checks of the closed forms. The grid and the simulator never
// call the solvers; finite differences evaluate them only as values under
// test.

struct GridResult {
  double argmax_rB = 0.0;
  double max_payoff = 0.0;
  double step = 0.0;
  std::size_t evaluations = 0;
};

/// Bound on |d payoff / d rB| used to budget grid error: Pr(m=1) at rG=rB=1.
inline constexpr double kPayoffSlopeBound = 1.0;

/// Points 0, step, 2 step, ... and always 1.
std::size_t grid_size(double step);
double grid_point(std::size_t i, double step);

/// Maximizes sender_expected_payoff over r_B on the grid with rG = 1.
/// Ties resolve to the smallest r_B. Throws InvalidStep unless 0 < step <= 1.
GridResult best_response_grid(const ModelParams& params, double step);

/// Same search over segment_weighted_payoff.
GridResult best_response_grid(const ModelParams& params,
                              const SegmentShares& shares, double step);

struct SimulationStats {
  std::uint64_t trials = 0;
  std::uint64_t messages_sent = 0;
  std::uint64_t inauthentic_messages = 0;
  std::uint64_t support_count = 0;
  /// Supporting receivers by group M, MS, N (multi-receiver runs only).
  std::array<std::uint64_t, 3> segment_support{0, 0, 0};
  std::array<std::uint64_t, 3> segment_draws{0, 0, 0};
  double support_frequency = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
};

/// Forward simulation of the game: theta ~ Bernoulli(rho0), m from the
/// strategy, s from (p, q) when m = 1, then the receiver's decision. With
/// shares, each trial's receiver group is drawn from the shares as well.
///
/// Trials run in chunks of kSimulationChunk; chunk c draws from
/// std::mt19937_64 seeded with stream_seed(seed, c), so results do not
/// depend on `threads` (0 picks hardware concurrency).
SimulationStats simulate_game(const ModelParams& params,
                              const SenderStrategy& strategy,
                              const std::optional<SegmentShares>& shares,
                              std::uint64_t trials, std::uint64_t seed,
                              unsigned threads = 0);

inline constexpr std::uint64_t kSimulationChunk = 1u << 16;

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);
/// Seed of stream `index` derived from `master`.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index);

enum class Parameter { Rho0, P, Q, V, K };
std::string_view to_string(Parameter param);
double& parameter_ref(ModelParams& params, Parameter param);

enum class Quantity {
  RhoBar,
  PBar,
  RhoHat,
  RhoUnderbar,
  RhoBBar,
  RhoUUBar,
  PBBar,
  RhoPlus,
  RbSelf,
  RbComp,
  RbSelfBiased,
  RbCompBiased,
  RbDirect,
  EquilibriumProfit,
  BiasedEquilibriumProfit,
};
std::string_view to_string(Quantity quantity);

/// Evaluates a named threshold or strategy value at `params`.
double evaluate_quantity(Quantity quantity, const ModelParams& params);

enum class Sign { Negative, Zero, Positive };
std::string_view to_string(Sign sign);

using ScalarField = std::function<double(const ModelParams&)>;

/// (f(x + h) - f(x - h)) / 2h along one parameter. Throws DomainExit if
/// either perturbed point is invalid.
double central_difference(const ScalarField& f, Parameter wrt,
                          const ModelParams& at, double h);

/// Four-point mixed second difference d^2 f / (da db).
double mixed_difference(const ScalarField& f, Parameter a, Parameter b,
                        const ModelParams& at, double h);

/// Sign of a derivative estimate; |d| < 1e-10 * max(1, |f(at)|) is Zero.
Sign classify_sign(double derivative, double scale);

/// Sign of the central difference of a named quantity. h must lie in
/// [1e-8, 1e-3] (InvalidStep otherwise).
Sign finite_difference_sign(Quantity quantity, Parameter wrt,
                            const ModelParams& at, double h);

}  // namespace persuasion
