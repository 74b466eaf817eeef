#pragma once

#include <cmath>
#include <random>

#include "persuasion/model.hpp"

namespace testing {

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

/// Beliefs and payoff from a full joint table over (theta, m, s), without the
/// library's update formulas. The receiver's table uses the perceived
/// likelihoods k + (1 - k) * L; payoffs use the true ones.
struct Enumerated {
  double rho1 = 0.0;
  double rho2[2] = {0.0, 0.0};
  double payoff = 0.0;
  double prob_message = 0.0;
};

inline Enumerated enumerate_game(const persuasion::ModelParams& m,
                                 const persuasion::SenderStrategy& st) {
  const double prior[2] = {1.0 - m.rho0, m.rho0};
  const double send[2] = {st.rB, st.rG};
  const double pos[2] = {m.q, m.p};
  auto perceived = [&](double like) { return m.k + (1.0 - m.k) * like; };

  Enumerated e;
  double seen_m[2], seen_ms[2][2];
  for (int t = 0; t < 2; ++t) {
    seen_m[t] = prior[t] * perceived(send[t]);
    seen_ms[t][1] = seen_m[t] * perceived(pos[t]);
    seen_ms[t][0] = seen_m[t] * perceived(1.0 - pos[t]);
  }
  e.rho1 = seen_m[1] / (seen_m[0] + seen_m[1]);
  for (int s = 0; s < 2; ++s) e.rho2[s] = seen_ms[1][s] / (seen_ms[0][s] + seen_ms[1][s]);

  const double threshold = 0.5 * (1.0 - m.v);
  for (int t = 0; t < 2; ++t) {
    const double joint_m = prior[t] * send[t];
    e.prob_message += joint_m;
    const double joint_s[2] = {joint_m * (1.0 - pos[t]), joint_m * pos[t]};
    for (int s = 0; s < 2; ++s) {
      if (e.rho2[s] >= threshold - 1e-12) e.payoff += joint_s[s];
    }
  }
  return e;
}

/// Uniform draws over the valid region, away from the edges.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  persuasion::ModelParams params(double k_max = 0.0) {
    persuasion::ModelParams m;
    m.rho0 = uniform(0.01, 0.99);
    m.p = uniform(0.505, 0.995);
    m.q = uniform(0.005, 0.495);
    m.v = uniform(0.0, 0.9);
    m.k = k_max > 0.0 ? uniform(0.0, k_max) : 0.0;
    return m;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace testing
