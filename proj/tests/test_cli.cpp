#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "persuasion/biased_equilibrium.hpp"
#include "persuasion/cli.hpp"
#include "persuasion/equilibrium.hpp"

using namespace persuasion;
using namespace persuasion::cli;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidParams;
}

}  // namespace

TEST_CASE("range syntax") {
  const ParamRange fixed = parse_range("0.3");
  CHECK_FALSE(fixed.swept);
  CHECK(fixed.values() == std::vector<double>{0.3});

  const ParamRange r = parse_range(" 0:0.99:101 ");
  CHECK(r.swept);
  CHECK(r.steps == 101);
  const std::vector<double> v = r.values();
  CHECK(v.size() == 101);
  CHECK(v.front() == 0.0);
  CHECK(v.back() == 0.99);
  CHECK(std::is_sorted(v.begin(), v.end()));

  CHECK(parse_range("0.2:0.2:1").values() == std::vector<double>{0.2});
  for (const char* bad : {"0:1:0", "0:1", "1:0:3", "a", "0:1:2:3", "0:1:x", ""}) {
    INFO(bad);
    CHECK(code_of([&] { parse_range(bad); }) == ErrorCode::InvalidConfig);
  }
}

TEST_CASE("config text") {
  const KeyValues kv = parse_config_text(
      "# sweep setup\n"
      "rho0 = 0:0.99:5   # prior\n"
      "\n"
      "Alpha_MS=1\n"
      "out = results.csv\n");
  CHECK(kv.at("rho0") == "0:0.99:5");
  CHECK(kv.at("alpha-ms") == "1");
  CHECK(kv.at("out") == "results.csv");
  CHECK(code_of([] { parse_config_text("rho0 0.3\n"); }) == ErrorCode::InvalidConfig);
  CHECK(code_of([] { read_config_file("/nonexistent/persuasion.cfg"); }) == ErrorCode::IOFailure);
}

TEST_CASE("building a config") {
  const RunConfig c = build_config(Mode::Sweep, {{"rho0", "0:1:3"}, {"k", "0.5"}, {"seed", "7"}});
  CHECK(c.swept() == std::vector<Parameter>{Parameter::Rho0});
  CHECK(c.range(Parameter::K).min == 0.5);
  CHECK(c.seed == 7);
  CHECK_FALSE(c.shares.has_value());

  const RunConfig m = build_config(Mode::Solve, {{"alpha-m", "0.5"}, {"alpha-ms", "0.5"}});
  REQUIRE(m.shares.has_value());
  CHECK(m.shares->alpha_n == 0.0);

  CHECK(code_of([] { build_config(Mode::Verify, {{"draws", "0"}}); }) == ErrorCode::InvalidConfig);
  CHECK(code_of([] { build_config(Mode::Solve, {{"colour", "red"}}); }) == ErrorCode::InvalidConfig);
  CHECK(code_of([] { build_config(Mode::Solve, {{"grid-step", "2"}}); }) == ErrorCode::InvalidConfig);
  CHECK(code_of([] { build_config(Mode::Solve, {{"alpha-m", "0.7"}, {"alpha-ms", "0.7"}}); }) ==
        ErrorCode::InvalidShares);
  CHECK(code_of([] { build_config(Mode::Solve, {{"alpha-ms", "1"}, {"k", "0.2"}}); }) ==
        ErrorCode::UnsupportedCombination);
}

TEST_CASE("number formatting round-trips") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.0) == "0");
  for (double x : {1.0 / 3.0, 0.2993197278911566, 1e-17, 123456.789}) {
    CHECK(std::stod(format_number(x)) == x);
  }
}

TEST_CASE("solve row") {
  std::ostringstream out;
  write_solve(build_config(Mode::Solve, {{"rho0", "0.3"}, {"p", "0.6"}, {"q", "0.3"}, {"v", "0.1"}}), out);
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "rho0,p,q,v,k,regime,rB_star,profit");
  const auto f = fields(rows[1]);
  CHECK(f[5] == "SelfSufficiency");
  CHECK(std::stod(f[6]) == solve_equilibrium(make_params(0.3, 0.6, 0.3, 0.1)).rB_star);
  CHECK(out.str().find('\r') == std::string::npos);
}

TEST_CASE("regime map") {
  std::ostringstream out;
  const RunConfig c = build_config(
      Mode::RegimeMap, {{"rho0", "0:0.99:101"}, {"v", "0:0.9:101"}, {"p", "0.65"}, {"q", "0.35"}});
  write_regime_map(c, out);
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == 10202);
  CHECK(rows[0] == "rho0,p,q,v,k,regime,rB_star,profit");

  // Row-major: rho0 outer, v inner.
  CHECK(fields(rows[1])[0] == "0");
  CHECK(fields(rows[2])[0] == "0");
  CHECK(fields(rows[102])[0] != "0");

  std::size_t comp_where_internal = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i]);
    const ModelParams m = make_params(std::stod(f[0]), std::stod(f[1]), std::stod(f[2]),
                                      std::stod(f[3]), std::stod(f[4]));
    const EquilibriumOutcome eq = solve_equilibrium(m);
    CHECK(f[5] == to_string(eq.regime));
    CHECK(std::stod(f[6]) == eq.rB_star);
    CHECK(std::stod(f[7]) == eq.profit);
    if (m.p <= baseline_thresholds(m).p_bar && eq.regime == Regime::Complementarity) {
      ++comp_where_internal;
    }
  }
  CHECK(comp_where_internal == 0);

  std::ostringstream one;
  write_regime_map(build_config(Mode::RegimeMap, {{"rho0", "0.5:0.5:1"}, {"v", "0:0:1"}}), one);
  CHECK(lines(one.str()).size() == 2);

  CHECK(code_of([] {
          std::ostringstream sink;
          write_regime_map(build_config(Mode::RegimeMap, {{"rho0", "0:1:3"}}), sink);
        }) == ErrorCode::InvalidConfig);
}

TEST_CASE("invalid cells are marked") {
  std::ostringstream out;
  write_regime_map(build_config(Mode::RegimeMap, {{"rho0", "0:1:2"}, {"p", "0.4:0.9:2"}}), out);
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == 5);
  CHECK(rows[1] == "0,0.4,0.1,0,0,invalid,,");
  CHECK(fields(rows[2])[5] != "invalid");
}

TEST_CASE("sweeps") {
  std::ostringstream out;
  write_sweep(build_config(Mode::Sweep, {{"rho0", "0:0.99:100"}, {"p", "0.9"}, {"q", "0.3"}, {"v", "0.1"}}), out);
  auto rows = lines(out.str());
  REQUIRE(rows.size() == 101);
  CHECK(rows[0] == "rho0,regime,rB_star,profit");
  const double rho_hat = baseline_thresholds(make_params(0.5, 0.9, 0.3, 0.1)).rho_hat;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i]);
    const double rho0 = std::stod(f[0]);
    if (rho0 < rho_hat) CHECK(f[5 - 4] == "Complementarity");
  }

  std::ostringstream biased;
  write_sweep(build_config(Mode::Sweep, {{"rho0", "0:0.99:100"}, {"k", "0.5"}}), biased);
  rows = lines(biased.str());
  const double floor = biased_thresholds(make_params(0.5, 0.9, 0.1, 0.0, 0.5)).rho_uubar;
  bool saw_rejection = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i]);
    const bool below = std::stod(f[0]) < floor;
    CHECK((f[1] == "AutomaticRejection") == below);
    saw_rejection = saw_rejection || below;
  }
  CHECK(saw_rejection);

  std::ostringstream multi;
  write_sweep(build_config(Mode::Sweep, {{"rho0", "0.05:0.05:1"}, {"alpha-m", "0.5"}, {"alpha-ms", "0.5"}}),
              multi);
  rows = lines(multi.str());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "rho0,regime,rB_star,profit,profit_self,profit_comp,profit_direct");
  CHECK(fields(rows[1])[1] == "DirectPersuasion");
}

TEST_CASE("simulate") {
  std::ostringstream out;
  write_simulate(build_config(Mode::Simulate, {{"rho0", "0.5"}, {"trials", "200000"}, {"seed", "3"}}), out);
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == 2);
  const auto header = fields(rows[0]);
  const auto f = fields(rows[1]);
  REQUIRE(header.size() == f.size());
  CHECK(header[6] == "rB");
  CHECK(std::stod(f[6]) == solve_equilibrium(make_params(0.5, 0.9, 0.1, 0.0)).rB_star);
  const double freq = std::stod(f[12]);
  const double se = std::stod(f[13]);
  CHECK(std::abs(freq - std::stod(f[14])) <= 3 * se);
}

TEST_CASE("run: exit codes and byte-identical output") {
  const auto dir = std::filesystem::temp_directory_path() / "persuasion_cli_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "map.csv").string();

  RunConfig c = build_config(Mode::RegimeMap, {{"rho0", "0:0.99:21"}, {"v", "0:0.9:21"}});
  c.output_path = path;
  std::ostringstream sink, err;
  REQUIRE(run(c, sink, err) == kExitSuccess);
  std::ifstream first_in(path, std::ios::binary);
  const std::string first((std::istreambuf_iterator<char>(first_in)), {});
  REQUIRE(run(c, sink, err) == kExitSuccess);
  std::ifstream second_in(path, std::ios::binary);
  const std::string second((std::istreambuf_iterator<char>(second_in)), {});
  CHECK(first == second);
  CHECK(lines(first).size() == 442);

  c.output_path = (dir / "missing" / "x.csv").string();
  CHECK(run(c, sink, err) == kExitIO);

  RunConfig bad = build_config(Mode::Sweep, {});
  CHECK(run(bad, sink, err) == kExitUsage);
  std::filesystem::remove_all(dir);
}

TEST_CASE("run: verify on a small budget") {
  RunConfig c = build_config(Mode::Verify, {{"draws", "50"}, {"grid-step", "0.5"}, {"trials", "20000"}, {"pairs", "4"}});
  std::ostringstream out, err;
  CHECK(run(c, out, err) == kExitSuccess);
  const auto rows = lines(out.str());
  CHECK(rows[0] == "criterion,check,draws,max_deviation,tolerance,status,detail");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(fields(rows[i])[5] == "pass");
  CHECK(fields(rows[1])[4] == "0.5");
}

TEST_CASE("modes") {
  CHECK(parse_mode("regime-map") == Mode::RegimeMap);
  CHECK_FALSE(parse_mode("plot").has_value());
}
