#include "doctest.h"
#include "persuasion/verify.hpp"

using namespace persuasion;

namespace {

VerifyOptions small() {
  VerifyOptions o;
  o.draws = 100;
  o.grid_step = 1e-3;
  o.martingale_draws = 500;
  o.sign_draws = 30;
  o.mc_pairs = 6;
  o.mc_trials = 50'000;
  return o;
}

}  // namespace

TEST_CASE("options validation") {
  VerifyOptions o;
  CHECK_NOTHROW(o.validate());
  o.draws = 0;
  try {
    o.validate();
    FAIL("expected InvalidConfig");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidConfig);
  }
  o = VerifyOptions{};
  o.grid_step = 0.0;
  CHECK_THROWS_AS(o.validate(), Error);
  o = VerifyOptions{};
  o.fd_step = 0.1;
  CHECK_THROWS_AS(o.validate(), Error);
}

TEST_CASE("every check passes on a reduced budget") {
  const VerifyOptions o = small();
  for (const Criterion& c : run_acceptance(o)) {
    for (const CheckResult& r : c.checks) {
      INFO(r.name << ": " << r.detail);
      CHECK(r.passed);
    }
    CHECK(c.passed());
  }
  CHECK(check_grid_multireceiver(o).passed);
}

TEST_CASE("coarse grids widen the tolerance and still pass") {
  VerifyOptions o = small();
  o.grid_step = 0.5;
  const CheckResult a = check_grid_baseline(o);
  const CheckResult b = check_grid_biased(o);
  CHECK(a.tolerance == 0.5);
  CHECK(a.passed);
  CHECK(b.passed);
}

TEST_CASE("checks are reproducible") {
  const VerifyOptions o = small();
  const CheckResult a = check_monte_carlo(o);
  const CheckResult b = check_monte_carlo(o);
  CHECK(a.max_deviation == b.max_deviation);
  CHECK(a.detail == b.detail);
}

TEST_CASE("bisection needs a switch in the bracket") {
  CHECK_THROWS_AS(bisect_switch_ratio(make_params(0.95, 0.9, 0.1, 0.0), 0.0, 1.0, 1e-9), Error);
}

TEST_CASE("empty criterion does not pass") {
  CHECK_FALSE(Criterion{}.passed());
}
