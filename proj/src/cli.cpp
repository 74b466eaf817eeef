#include "persuasion/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "persuasion/biased_equilibrium.hpp"
#include "persuasion/decision.hpp"
#include "persuasion/equilibrium.hpp"
#include "persuasion/verify.hpp"

namespace persuasion::cli {

namespace {

[[noreturn]] void config_error(const std::string& what) {
  throw Error(ErrorCode::InvalidConfig, what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view text, std::string_view key) {
  text = trim(text);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(x)) {
    config_error("invalid number for " + std::string(key) + ": '" + std::string(text) + "'");
  }
  return x;
}

std::uint64_t parse_count(std::string_view text, std::string_view key) {
  text = trim(text);
  std::uint64_t x = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    config_error("invalid integer for " + std::string(key) + ": '" + std::string(text) + "'");
  }
  return x;
}

std::string normalize_key(std::string_view key) {
  std::string out(trim(key));
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (c == '_') c = '-';
  }
  return out;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct CellResult {
  bool valid = false;
  std::string regime = "invalid";
  double rB_star = 0.0;
  double profit = 0.0;
  std::optional<CandidateProfits> candidates;
};

CellResult solve_cell(const ModelParams& m, const std::optional<SegmentShares>& shares) {
  CellResult cell;
  if (!m.is_valid()) return cell;
  cell.valid = true;
  if (shares) {
    const MultiReceiverOutcome out = solve_multireceiver(m, *shares);
    cell.regime = to_string(out.strategy_label);
    cell.rB_star = out.rB_star;
    cell.profit = out.profit;
    cell.candidates = out.candidates;
    return cell;
  }
  const EquilibriumOutcome out =
      m.k == 0.0 ? solve_equilibrium(m) : solve_equilibrium_biased(m);
  cell.regime = to_string(out.regime);
  cell.rB_star = out.rB_star;
  cell.profit = out.profit;
  return cell;
}

void write_cell_tail(std::ostream& out, const CellResult& cell, bool multi) {
  out << ',' << cell.regime;
  if (!cell.valid) {
    out << ",,";
    if (multi) out << ",,,";
    return;
  }
  out << ',' << format_number(cell.rB_star) << ',' << format_number(cell.profit);
  if (multi) {
    out << ',' << format_number(cell.candidates->self) << ','
        << format_number(cell.candidates->comp) << ','
        << format_number(cell.candidates->direct);
  }
}

void write_params(std::ostream& out, const ModelParams& m) {
  out << format_number(m.rho0) << ',' << format_number(m.p) << ','
      << format_number(m.q) << ',' << format_number(m.v) << ','
      << format_number(m.k);
}

constexpr std::string_view kParamHeader = "rho0,p,q,v,k";

void require_swept(const RunConfig& config, std::size_t count, std::string_view command) {
  const std::size_t n = config.swept().size();
  if (n != count) {
    std::ostringstream os;
    os << command << " needs exactly " << count << " swept parameter"
       << (count == 1 ? "" : "s") << " (min:max:steps), got " << n;
    config_error(os.str());
  }
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Solve: return "solve";
    case Mode::RegimeMap: return "regime-map";
    case Mode::Sweep: return "sweep";
    case Mode::Simulate: return "simulate";
    case Mode::Verify: return "verify";
  }
  return "unknown";
}

std::optional<Mode> parse_mode(std::string_view name) {
  for (Mode m : {Mode::Solve, Mode::RegimeMap, Mode::Sweep, Mode::Simulate, Mode::Verify}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::vector<double> ParamRange::values() const {
  std::vector<double> out;
  out.reserve(steps);
  if (steps == 1) {
    out.push_back(min);
    return out;
  }
  for (std::size_t i = 0; i < steps; ++i) {
    if (i + 1 == steps) {
      out.push_back(max);
    } else {
      out.push_back(min + (max - min) * static_cast<double>(i) /
                              static_cast<double>(steps - 1));
    }
  }
  return out;
}

ParamRange parse_range(std::string_view text) {
  text = trim(text);
  const auto first = text.find(':');
  if (first == std::string_view::npos) return ParamRange::fixed(parse_double(text, "value"));

  const auto second = text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
    config_error("range must look like min:max:steps, got '" + std::string(text) + "'");
  }
  ParamRange r;
  r.swept = true;
  r.min = parse_double(text.substr(0, first), "range min");
  r.max = parse_double(text.substr(first + 1, second - first - 1), "range max");
  r.steps = parse_count(text.substr(second + 1), "range steps");
  if (r.steps < 1) config_error("range steps must be at least 1");
  if (r.min > r.max) config_error("range min must not exceed max");
  return r;
}

std::vector<Parameter> RunConfig::swept() const {
  std::vector<Parameter> out;
  for (Parameter p : kCanonicalOrder) {
    if (range(p).swept) out.push_back(p);
  }
  return out;
}

ModelParams RunConfig::fixed_params() const {
  if (!swept().empty()) config_error(std::string(to_string(mode)) + " takes fixed parameters only");
  ModelParams m;
  for (Parameter p : kCanonicalOrder) parameter_ref(m, p) = range(p).min;
  return m;
}

KeyValues parse_config_text(std::string_view text) {
  KeyValues out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      config_error("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = normalize_key(line.substr(0, eq));
    if (key.empty()) config_error("config line " + std::to_string(line_no) + ": empty key");
    out[key] = std::string(trim(line.substr(eq + 1)));
  }
  return out;
}

KeyValues read_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IOFailure, "cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

RunConfig build_config(Mode mode, const KeyValues& values) {
  RunConfig c;
  c.mode = mode;
  std::optional<double> alpha_m, alpha_ms, alpha_n;

  for (const auto& [raw_key, value] : values) {
    const std::string key = normalize_key(raw_key);
    bool matched = false;
    for (Parameter p : kCanonicalOrder) {
      if (key == to_string(p)) {
        c.range(p) = parse_range(value);
        matched = true;
      }
    }
    if (matched) continue;
    if (key == "alpha-m") {
      alpha_m = parse_double(value, key);
    } else if (key == "alpha-ms") {
      alpha_ms = parse_double(value, key);
    } else if (key == "alpha-n") {
      alpha_n = parse_double(value, key);
    } else if (key == "trials") {
      c.trials = parse_count(value, key);
    } else if (key == "seed") {
      c.seed = parse_count(value, key);
    } else if (key == "grid-step") {
      c.grid_step = parse_double(value, key);
    } else if (key == "out") {
      c.output_path = value;
    } else if (key == "draws") {
      c.draws = parse_count(value, key);
    } else if (key == "pairs") {
      c.pairs = parse_count(value, key);
    } else if (key == "rg") {
      c.rg = parse_double(value, key);
    } else if (key == "rb") {
      c.rb = parse_double(value, key);
    } else {
      config_error("unknown key '" + raw_key + "'");
    }
  }

  if (c.trials == 0) config_error("trials must be at least 1");
  if (c.draws == 0) config_error("draws must be at least 1");
  if (c.pairs == 0) config_error("pairs must be at least 1");
  if (!(c.grid_step > 0.0 && c.grid_step <= 1.0)) config_error("grid-step must lie in (0, 1]");
  for (const auto& rate : {c.rg, c.rb}) {
    if (rate && !(*rate >= 0.0 && *rate <= 1.0)) config_error("rg and rb must lie in [0, 1]");
  }

  if (alpha_m || alpha_ms || alpha_n) {
    SegmentShares s;
    s.alpha_m = alpha_m.value_or(0.0);
    s.alpha_ms = alpha_ms.value_or(0.0);
    s.alpha_n = alpha_n.value_or(0.0);
    s.validate();
    const ParamRange& k = c.range(Parameter::K);
    if (k.min != 0.0 || k.max != 0.0) {
      throw Error(ErrorCode::UnsupportedCombination,
                  "segment shares require k = 0");
    }
    c.shares = s;
  }
  return c;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_solve(const RunConfig& config, std::ostream& out) {
  const ModelParams m = config.fixed_params();
  const bool multi = config.shares.has_value();
  out << kParamHeader << ",regime,rB_star,profit";
  if (multi) out << ",profit_self,profit_comp,profit_direct";
  out << '\n';
  write_params(out, m);
  write_cell_tail(out, solve_cell(m, config.shares), multi);
  out << '\n';
}

void write_regime_map(const RunConfig& config, std::ostream& out) {
  require_swept(config, 2, "regime-map");
  std::array<std::vector<double>, 5> axes;
  for (Parameter p : kCanonicalOrder) {
    axes[static_cast<std::size_t>(p)] = config.range(p).values();
  }
  out << kParamHeader << ",regime,rB_star,profit\n";
  ModelParams m;
  for (double rho0 : axes[0]) {
    m.rho0 = rho0;
    for (double p : axes[1]) {
      m.p = p;
      for (double q : axes[2]) {
        m.q = q;
        for (double v : axes[3]) {
          m.v = v;
          for (double k : axes[4]) {
            m.k = k;
            write_params(out, m);
            write_cell_tail(out, solve_cell(m, config.shares), false);
            out << '\n';
          }
        }
      }
    }
  }
}

void write_sweep(const RunConfig& config, std::ostream& out) {
  require_swept(config, 1, "sweep");
  const Parameter axis = config.swept().front();
  const bool multi = config.shares.has_value();
  ModelParams m;
  for (Parameter p : kCanonicalOrder) parameter_ref(m, p) = config.range(p).min;

  out << to_string(axis) << ",regime,rB_star,profit";
  if (multi) out << ",profit_self,profit_comp,profit_direct";
  out << '\n';
  for (double x : config.range(axis).values()) {
    parameter_ref(m, axis) = x;
    out << format_number(x);
    write_cell_tail(out, solve_cell(m, config.shares), multi);
    out << '\n';
  }
}

void write_simulate(const RunConfig& config, std::ostream& out) {
  const ModelParams m = config.fixed_params();
  m.validate();
  SenderStrategy st;
  st.rG = config.rg.value_or(1.0);
  if (config.rb) {
    st.rB = *config.rb;
  } else {
    st.rB = solve_cell(m, config.shares).rB_star;
  }
  const SimulationStats s = simulate_game(m, st, config.shares, config.trials, config.seed);
  const double analytic =
      config.shares ? segment_weighted_payoff(m, st, *config.shares).total
                    : sender_expected_payoff(m, st).total;

  out << kParamHeader
      << ",rG,rB,trials,seed,messages_sent,inauthentic_messages,support_count,"
         "support_frequency,std_error,analytic_payoff";
  if (config.shares) out << ",support_m,support_ms,support_n";
  out << '\n';
  write_params(out, m);
  out << ',' << format_number(st.rG) << ',' << format_number(st.rB) << ','
      << s.trials << ',' << s.seed << ',' << s.messages_sent << ','
      << s.inauthentic_messages << ',' << s.support_count << ','
      << format_number(s.support_frequency) << ',' << format_number(s.std_error)
      << ',' << format_number(analytic);
  if (config.shares) {
    out << ',' << s.segment_support[0] << ',' << s.segment_support[1] << ','
        << s.segment_support[2];
  }
  out << '\n';
}

bool write_verify(const RunConfig& config, std::ostream& out) {
  VerifyOptions opt;
  opt.draws = config.draws;
  opt.grid_step = config.grid_step;
  opt.seed = config.seed;
  opt.mc_trials = config.trials;
  opt.mc_pairs = config.pairs;
  opt.validate();

  bool all = true;
  out << "criterion,check,draws,max_deviation,tolerance,status,detail\n";
  auto row = [&](const std::string& criterion, const CheckResult& r) {
    all = all && r.passed;
    out << criterion << ',' << r.name << ',' << r.draws << ','
        << format_number(r.max_deviation) << ',' << format_number(r.tolerance)
        << ',' << (r.passed ? "pass" : "fail") << ',' << csv_field(r.detail)
        << '\n';
  };
  for (const Criterion& c : run_acceptance(opt)) {
    for (const CheckResult& r : c.checks) row(std::to_string(c.number), r);
  }
  row("extra", check_grid_multireceiver(opt));
  return all;
}

int run(const RunConfig& config, std::ostream& fallback, std::ostream& err) {
  std::ostringstream buf;
  bool ok = true;
  try {
    switch (config.mode) {
      case Mode::Solve: write_solve(config, buf); break;
      case Mode::RegimeMap: write_regime_map(config, buf); break;
      case Mode::Sweep: write_sweep(config, buf); break;
      case Mode::Simulate: write_simulate(config, buf); break;
      case Mode::Verify: ok = write_verify(config, buf); break;
    }
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return e.code() == ErrorCode::IOFailure ? kExitIO : kExitUsage;
  }

  const std::string text = buf.str();
  if (config.output_path.empty()) {
    fallback << text;
    fallback.flush();
  } else {
    std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
    if (file) file << text;
    if (!file) {
      err << "error [IOFailure]: cannot write '" << config.output_path << "'\n";
      return kExitIO;
    }
  }
  if (!ok) err << "verification failed\n";
  return ok ? kExitSuccess : kExitCheckFailure;
}

}  // namespace persuasion::cli
