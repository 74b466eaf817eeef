#include "doctest.h"
#include "persuasion/beliefs.hpp"
#include "support.hpp"

using namespace persuasion;
using testing::near;

TEST_CASE("posterior after message") {
  CHECK(near(posterior_after_message(make_params(0.5, 0.9, 0.1, 0.0), {1.0, 0.5}), 2.0 / 3.0, 1e-15));
  CHECK(near(posterior_after_message(make_params(0.3, 0.9, 0.1, 0.0), {0.7, 0.7}), 0.3, 1e-15));
  CHECK(near(posterior_after_message(make_params(0.3, 0.9, 0.1, 0.0, 0.4), {1.0, 0.0}), 15.0 / 29.0, 1e-15));
  CHECK(near(posterior_after_message(make_params(0.3, 0.9, 0.1, 0.0, 0.4), {1.0, 0.0}), 0.517241, 5e-7));
  CHECK(posterior_after_message(make_params(0.3, 0.9, 0.1, 0.0, 1.0), {1.0, 0.0}) == 0.3);
}

TEST_CASE("no message possible") {
  try {
    posterior_after_message(make_params(0.3, 0.9, 0.1, 0.0), {0.0, 0.0});
    FAIL("expected NoMessagePossible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoMessagePossible);
  }
  // A good-fit sender who never speaks, facing a sure good fit.
  CHECK_THROWS_AS(posterior_after_message(make_params(1.0, 0.9, 0.1, 0.0), {0.0, 1.0}), Error);
  // With bias the receiver still forms a belief.
  CHECK(near(posterior_after_message(make_params(0.3, 0.9, 0.1, 0.0, 0.2), {0.0, 0.0}), 0.3, 1e-15));
}

TEST_CASE("posterior after signal") {
  const ModelParams m = make_params(0.5, 0.9, 0.1, 0.0);
  CHECK(near(posterior_after_signal(0.5, Signal::Present, m), 0.9, 1e-15));
  CHECK(posterior_after_signal(0.0, Signal::Present, m) == 0.0);
  CHECK(posterior_after_signal(0.0, Signal::Absent, m) == 0.0);
  CHECK(near(posterior_after_signal(0.6, Signal::Absent, m), 1.0 / 7.0, 1e-15));
  CHECK(posterior_after_signal(0.6, Signal::Absent, make_params(0.5, 0.9, 0.1, 0.0, 1.0)) == 0.6);
  CHECK_THROWS_AS(posterior_after_signal(1.2, Signal::Absent, m), Error);
}

TEST_CASE("signal-only posterior") {
  CHECK(near(signal_only_posterior(make_params(0.5, 0.9, 0.1, 0.0), Signal::Absent), 0.1, 1e-15));
  CHECK(signal_only_posterior(make_params(1.0, 0.9, 0.1, 0.0), Signal::Absent) == 1.0);
  CHECK(near(signal_only_posterior(make_params(0.65, 0.65, 0.35, 0.0), Signal::Present),
             0.7752293577981652, 1e-15));
}

TEST_CASE("belief path and signal probabilities") {
  const ModelParams m = make_params(0.4, 0.8, 0.2, 0.0);
  const SenderStrategy st{1.0, 0.25};
  const BeliefState b = belief_path(m, st, Signal::Present);
  CHECK(b.rho0 == 0.4);
  CHECK(near(b.rho1, 0.4 / (0.4 + 0.15), 1e-15));
  CHECK(near(b.rho2, posterior_after_signal(b.rho1, Signal::Present, m), 0.0));
  const double s1 = signal_probability_given_message(m, st, Signal::Present);
  const double s0 = signal_probability_given_message(m, st, Signal::Absent);
  CHECK(near(s1 + s0, 1.0, 1e-15));
  CHECK(near(s1, (0.4 * 0.8 + 0.6 * 0.25 * 0.2) / 0.55, 1e-15));
}

TEST_CASE("beliefs agree with joint enumeration") {
  testing::Draws draws(7);
  for (int i = 0; i < 2000; ++i) {
    const ModelParams m = draws.params(1.0);
    const SenderStrategy st{draws.uniform(0.05, 1.0), draws.uniform(0.0, 1.0)};
    const testing::Enumerated e = testing::enumerate_game(m, st);
    const double rho1 = posterior_after_message(m, st);
    REQUIRE(near(rho1, e.rho1, 1e-12));
    CHECK(near(posterior_after_signal(rho1, Signal::Absent, m), e.rho2[0], 1e-12));
    CHECK(near(posterior_after_signal(rho1, Signal::Present, m), e.rho2[1], 1e-12));
  }
}

TEST_CASE("property: beliefs stay in [0, 1]") {
  testing::Draws draws(11);
  for (int i = 0; i < 5000; ++i) {
    ModelParams m = draws.params(1.0);
    if (i % 10 == 0) m.rho0 = (i % 20 == 0) ? 0.0 : 1.0;
    const SenderStrategy st{draws.uniform(0.0, 1.0), draws.uniform(0.0, 1.0)};
    for (Signal s : {Signal::Absent, Signal::Present}) {
      try {
        const BeliefState b = belief_path(m, st, s);
        CHECK((b.rho1 >= 0.0 && b.rho1 <= 1.0));
        CHECK((b.rho2 >= 0.0 && b.rho2 <= 1.0));
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoMessagePossible);
      }
      const double only = signal_only_posterior(m, s);
      CHECK((only >= 0.0 && only <= 1.0));
    }
  }
}

TEST_CASE("property: martingale at k = 0") {
  testing::Draws draws(13);
  for (int i = 0; i < 10000; ++i) {
    const ModelParams m = draws.params();
    const SenderStrategy st{draws.uniform(0.01, 1.0), draws.uniform(0.0, 1.0)};
    const double rho1 = posterior_after_message(m, st);
    const double mean =
        signal_probability_given_message(m, st, Signal::Present) *
            posterior_after_signal(rho1, Signal::Present, m) +
        signal_probability_given_message(m, st, Signal::Absent) *
            posterior_after_signal(rho1, Signal::Absent, m);
    REQUIRE(near(mean, rho1, 1e-12));
  }
}

TEST_CASE("property: message plus signal beats signal alone") {
  testing::Draws draws(17);
  for (int i = 0; i < 5000; ++i) {
    const ModelParams m = draws.params();
    const double rB = draws.uniform(0.01, 1.0);
    const double rG = draws.uniform(rB, 1.0);
    for (Signal s : {Signal::Absent, Signal::Present}) {
      const double both = posterior_after_signal(posterior_after_message(m, {rG, rB}), s, m);
      CHECK(both >= signal_only_posterior(m, s) - 1e-15);
      const double equal = posterior_after_signal(posterior_after_message(m, {rB, rB}), s, m);
      CHECK(near(equal, signal_only_posterior(m, s), 1e-14));
    }
    if (rG - rB > 1e-3) {
      CHECK(posterior_after_signal(posterior_after_message(m, {rG, rB}), Signal::Absent, m) >
            signal_only_posterior(m, Signal::Absent));
    }
  }
}

TEST_CASE("property: signal ordering") {
  testing::Draws draws(19);
  for (int i = 0; i < 5000; ++i) {
    const ModelParams m = draws.params();
    const double rB = draws.uniform(0.0, 1.0);
    const SenderStrategy st{draws.uniform(rB, 1.0), rB};
    if (st.rG == 0.0) continue;
    const double rho1 = posterior_after_message(m, st);
    CHECK(posterior_after_signal(rho1, Signal::Present, m) >= rho1);
    CHECK(rho1 >= posterior_after_signal(rho1, Signal::Absent, m));
  }
}

TEST_CASE("property: bias attenuates the message update") {
  testing::Draws draws(23);
  for (int i = 0; i < 1000; ++i) {
    ModelParams m = draws.params();
    const SenderStrategy st{draws.uniform(0.0, 1.0), draws.uniform(0.0, 1.0)};
    double last = INFINITY;
    for (int j = 1; j <= 100; ++j) {
      m.k = j / 100.0;
      const double moved = std::abs(posterior_after_message(m, st) - m.rho0);
      CHECK(moved <= last + 1e-15);
      last = moved;
    }
    CHECK(last <= 1e-15);
  }
}
