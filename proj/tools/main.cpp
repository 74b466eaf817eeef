// persuasion: solve, map, sweep, simulate and verify the reactive-marketing
// persuasion game from the command line.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "persuasion/cli.hpp"

namespace pc = persuasion::cli;

namespace {

struct Flag {
  const char* name;
  const char* help;
};

constexpr Flag kFlags[] = {
    {"rho0", "prior that the sender is a good fit (value or min:max:steps)"},
    {"p", "investigator true-positive rate"},
    {"q", "investigator false-positive rate"},
    {"v", "self-signaling premium"},
    {"k", "confirmation-bias weight"},
    {"alpha-m", "share of receivers who see only the message"},
    {"alpha-ms", "share who see message and signal"},
    {"alpha-n", "share who see neither"},
    {"trials", "Monte-Carlo trials"},
    {"seed", "master seed"},
    {"grid-step", "grid spacing for the best-response oracle"},
    {"out", "output path (default stdout)"},
    {"draws", "random draws per verification check"},
    {"pairs", "Monte-Carlo parameter pairs in verify"},
    {"rg", "simulate: message rate of good-fit senders"},
    {"rb", "simulate: message rate of bad-fit senders (default: equilibrium)"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reactive-marketing persuasion game: solver and verifier"};
  app.require_subcommand(1);

  std::map<std::string, std::string> flags;
  std::string config_path;

  for (pc::Mode mode : {pc::Mode::Solve, pc::Mode::RegimeMap, pc::Mode::Sweep,
                        pc::Mode::Simulate, pc::Mode::Verify}) {
    const std::string name(pc::to_string(mode));
    CLI::App* sub = app.add_subcommand(name);
    for (const Flag& f : kFlags) {
      sub->add_option_function<std::string>(
          std::string("--") + f.name,
          [&flags, key = std::string(f.name)](const std::string& value) {
            flags[key] = value;
          },
          f.help);
    }
    sub->add_option("--config", config_path, "key = value config file; flags win");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? pc::kExitSuccess : pc::kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const pc::Mode mode = *pc::parse_mode(chosen->get_name());

  pc::RunConfig config;
  try {
    pc::KeyValues values;
    if (!config_path.empty()) values = pc::read_config_file(config_path);
    for (const auto& [key, value] : flags) values[key] = value;
    config = pc::build_config(mode, values);
  } catch (const persuasion::Error& e) {
    std::cerr << "error [" << persuasion::to_string(e.code()) << "]: " << e.what() << '\n';
    return e.code() == persuasion::ErrorCode::IOFailure ? pc::kExitIO : pc::kExitUsage;
  }
  return pc::run(config, std::cout, std::cerr);
}
