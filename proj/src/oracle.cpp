#include "persuasion/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "persuasion/beliefs.hpp"
#include "persuasion/biased_equilibrium.hpp"
#include "persuasion/decision.hpp"
#include "persuasion/equilibrium.hpp"

namespace persuasion {

// ---------------------------------------------------------------------------
// Grid best response

std::size_t grid_size(double step) {
  if (!(step > 0.0 && step <= 1.0) || !std::isfinite(step)) {
    std::ostringstream os;
    os << "grid step must lie in (0, 1], got " << step;
    throw Error(ErrorCode::InvalidStep, os.str());
  }
  // Number of interior multiples of step strictly below 1, plus both ends.
  const auto below = static_cast<std::size_t>(std::ceil(1.0 / step - 1e-9));
  return below + 1;
}

double grid_point(std::size_t i, double step) {
  if (i + 1 >= grid_size(step)) return 1.0;
  return static_cast<double>(i) * step;
}

namespace {

template <typename Payoff>
GridResult scan_grid(double step, Payoff&& payoff) {
  GridResult result;
  result.step = step;
  const std::size_t n = grid_size(step);
  result.max_payoff = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double rb = i + 1 == n ? 1.0 : static_cast<double>(i) * step;
    const double value = payoff(rb);
    if (value > result.max_payoff) {
      result.max_payoff = value;
      result.argmax_rB = rb;
    }
  }
  result.evaluations = n;
  return result;
}

}  // namespace

GridResult best_response_grid(const ModelParams& params, double step) {
  params.validate();
  return scan_grid(step, [&](double rb) {
    return sender_expected_payoff(params, {1.0, rb}).total;
  });
}

GridResult best_response_grid(const ModelParams& params,
                              const SegmentShares& shares, double step) {
  params.validate();
  shares.validate();
  return scan_grid(step, [&](double rb) {
    return segment_weighted_payoff(params, {1.0, rb}, shares).total;
  });
}

// ---------------------------------------------------------------------------
// Monte-Carlo

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

namespace {

struct ChunkCounts {
  std::uint64_t trials = 0;
  std::uint64_t messages = 0;
  std::uint64_t inauthentic = 0;
  std::uint64_t support = 0;
  std::array<std::uint64_t, 3> segment_support{0, 0, 0};
  std::array<std::uint64_t, 3> segment_draws{0, 0, 0};
};

struct ReceiverRule {
  bool on_message = false;  // group M: decides on rho1
  bool on_s1 = false;
  bool on_s0 = false;
};

inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

ReceiverRule receiver_rule(const ModelParams& params,
                           const SenderStrategy& strategy) {
  ReceiverRule rule;
  try {
    const double rho1 = posterior_after_message(params, strategy);
    rule.on_message = receiver_supports(rho1, params.v);
    rule.on_s1 = receiver_supports(
        posterior_after_signal(rho1, Signal::Present, params), params.v);
    rule.on_s0 = receiver_supports(
        posterior_after_signal(rho1, Signal::Absent, params), params.v);
  } catch (const Error& e) {
    // m = 1 never happens; the rule is never consulted.
    if (e.code() != ErrorCode::NoMessagePossible) throw;
  }
  return rule;
}

ChunkCounts run_chunk(const ModelParams& params, const SenderStrategy& strategy,
                      const std::optional<SegmentShares>& shares,
                      const ReceiverRule& rule, std::uint64_t trials,
                      std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  ChunkCounts c;
  c.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const bool good = uniform01(gen) < params.rho0;
    const bool sent = uniform01(gen) < (good ? strategy.rG : strategy.rB);
    bool s1 = false;
    if (sent) {
      ++c.messages;
      if (!good) ++c.inauthentic;
      s1 = uniform01(gen) < (good ? params.p : params.q);
    }
    const bool informed_support = s1 ? rule.on_s1 : rule.on_s0;
    if (!shares) {
      if (sent && informed_support) ++c.support;
      continue;
    }
    const double u = uniform01(gen);
    int group = 2;
    if (u < shares->alpha_m) {
      group = 0;
    } else if (u < shares->alpha_m + shares->alpha_ms) {
      group = 1;
    }
    ++c.segment_draws[group];
    bool supports = false;
    if (group == 0) supports = sent && rule.on_message;
    if (group == 1) supports = sent && informed_support;
    if (supports) {
      ++c.support;
      ++c.segment_support[group];
    }
  }
  return c;
}

}  // namespace

SimulationStats simulate_game(const ModelParams& params,
                              const SenderStrategy& strategy,
                              const std::optional<SegmentShares>& shares,
                              std::uint64_t trials, std::uint64_t seed,
                              unsigned threads) {
  params.validate();
  strategy.validate();
  if (trials == 0) {
    throw Error(ErrorCode::InvalidParams, "simulation needs at least one trial");
  }
  if (shares) {
    shares->validate();
    if (params.k != 0.0) {
      throw Error(ErrorCode::UnsupportedCombination,
                  "multiple receiver groups are only modeled for k = 0");
    }
  }

  const ReceiverRule rule = receiver_rule(params, strategy);
  const std::uint64_t chunks = (trials + kSimulationChunk - 1) / kSimulationChunk;
  std::vector<ChunkCounts> results(chunks);

  auto work = [&](std::uint64_t c) {
    const std::uint64_t begin = c * kSimulationChunk;
    const std::uint64_t n = std::min(kSimulationChunk, trials - begin);
    results[c] = run_chunk(params, strategy, shares, rule, n, stream_seed(seed, c));
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, chunks));
  if (threads <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) work(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) {
      pool.emplace_back([&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) work(c);
      });
    }
  }

  SimulationStats stats;
  stats.seed = seed;
  for (const ChunkCounts& c : results) {
    stats.trials += c.trials;
    stats.messages_sent += c.messages;
    stats.inauthentic_messages += c.inauthentic;
    stats.support_count += c.support;
    for (int g = 0; g < 3; ++g) {
      stats.segment_support[g] += c.segment_support[g];
      stats.segment_draws[g] += c.segment_draws[g];
    }
  }
  const double n = static_cast<double>(stats.trials);
  stats.support_frequency = static_cast<double>(stats.support_count) / n;
  stats.std_error =
      std::sqrt(stats.support_frequency * (1.0 - stats.support_frequency) / n);
  return stats;
}

// ---------------------------------------------------------------------------
// Finite differences

std::string_view to_string(Parameter param) {
  switch (param) {
    case Parameter::Rho0: return "rho0";
    case Parameter::P: return "p";
    case Parameter::Q: return "q";
    case Parameter::V: return "v";
    case Parameter::K: return "k";
  }
  return "unknown";
}

double& parameter_ref(ModelParams& params, Parameter param) {
  switch (param) {
    case Parameter::Rho0: return params.rho0;
    case Parameter::P: return params.p;
    case Parameter::Q: return params.q;
    case Parameter::V: return params.v;
    case Parameter::K: return params.k;
  }
  return params.rho0;
}

std::string_view to_string(Quantity quantity) {
  switch (quantity) {
    case Quantity::RhoBar: return "rho_bar";
    case Quantity::PBar: return "p_bar";
    case Quantity::RhoHat: return "rho_hat";
    case Quantity::RhoUnderbar: return "rho_underbar";
    case Quantity::RhoBBar: return "rho_bbar";
    case Quantity::RhoUUBar: return "rho_uubar";
    case Quantity::PBBar: return "p_bbar";
    case Quantity::RhoPlus: return "rho_plus";
    case Quantity::RbSelf: return "rb_self";
    case Quantity::RbComp: return "rb_comp";
    case Quantity::RbSelfBiased: return "rb_self_biased";
    case Quantity::RbCompBiased: return "rb_comp_biased";
    case Quantity::RbDirect: return "rb_direct";
    case Quantity::EquilibriumProfit: return "profit";
    case Quantity::BiasedEquilibriumProfit: return "profit_biased";
  }
  return "unknown";
}

double evaluate_quantity(Quantity quantity, const ModelParams& params) {
  switch (quantity) {
    case Quantity::RhoBar: return baseline_thresholds(params).rho_bar;
    case Quantity::PBar: return baseline_thresholds(params).p_bar;
    case Quantity::RhoHat: return baseline_thresholds(params).rho_hat;
    case Quantity::RhoUnderbar: return baseline_thresholds(params).rho_underbar;
    case Quantity::RhoBBar: return biased_thresholds(params).rho_bbar;
    case Quantity::RhoUUBar: return biased_thresholds(params).rho_uubar;
    case Quantity::PBBar: return biased_thresholds(params).p_bbar;
    case Quantity::RhoPlus: return biased_thresholds(params).rho_plus;
    case Quantity::RbSelf: return rb_self(params);
    case Quantity::RbComp: return rb_comp(params);
    case Quantity::RbSelfBiased: return rb_self_biased(params);
    case Quantity::RbCompBiased: return rb_comp_biased(params);
    case Quantity::RbDirect: return rb_direct(params);
    case Quantity::EquilibriumProfit: return solve_equilibrium(params).profit;
    case Quantity::BiasedEquilibriumProfit:
      return solve_equilibrium_biased(params).profit;
  }
  return 0.0;
}

std::string_view to_string(Sign sign) {
  switch (sign) {
    case Sign::Negative: return "Negative";
    case Sign::Zero: return "Zero";
    case Sign::Positive: return "Positive";
  }
  return "unknown";
}

namespace {

ModelParams shifted(const ModelParams& at, Parameter wrt, double delta) {
  ModelParams moved = at;
  parameter_ref(moved, wrt) += delta;
  if (!moved.is_valid()) {
    std::ostringstream os;
    os << "perturbing " << to_string(wrt) << " by " << delta
       << " leaves the valid parameter region";
    throw Error(ErrorCode::DomainExit, os.str());
  }
  return moved;
}

}  // namespace

double central_difference(const ScalarField& f, Parameter wrt,
                          const ModelParams& at, double h) {
  const ModelParams up = shifted(at, wrt, h);
  const ModelParams down = shifted(at, wrt, -h);
  return (f(up) - f(down)) / (2.0 * h);
}

double mixed_difference(const ScalarField& f, Parameter a, Parameter b,
                        const ModelParams& at, double h) {
  const ModelParams pp = shifted(shifted(at, a, h), b, h);
  const ModelParams pm = shifted(shifted(at, a, h), b, -h);
  const ModelParams mp = shifted(shifted(at, a, -h), b, h);
  const ModelParams mm = shifted(shifted(at, a, -h), b, -h);
  return (f(pp) - f(pm) - f(mp) + f(mm)) / (4.0 * h * h);
}

Sign classify_sign(double derivative, double scale) {
  const double floor = 1e-10 * std::max(1.0, std::abs(scale));
  if (std::abs(derivative) < floor) return Sign::Zero;
  return derivative > 0.0 ? Sign::Positive : Sign::Negative;
}

Sign finite_difference_sign(Quantity quantity, Parameter wrt,
                            const ModelParams& at, double h) {
  if (!(h >= 1e-8 && h <= 1e-3)) {
    throw Error(ErrorCode::InvalidStep, "finite-difference h must lie in [1e-8, 1e-3]");
  }
  at.validate();
  const ScalarField f = [quantity](const ModelParams& x) {
    return evaluate_quantity(quantity, x);
  };
  const double d = central_difference(f, wrt, at, h);
  return classify_sign(d, f(at));
}

}  // namespace persuasion
