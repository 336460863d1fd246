#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "vlab/app/commands.hpp"
#include "vlab/app/config.hpp"

namespace {

using vlab::app::RunConfig;

struct Common {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "configuration file")->required();
  sub->add_option("--out", c.out, "output directory (overrides output.dir)");
  sub->add_option("--seed", c.seed, "seed (overrides the config value)");
}

RunConfig load(const Common& c) {
  RunConfig cfg = vlab::app::load_config(c.config);
  if (!c.out.empty()) cfg.output_dir = c.out;
  if (c.seed) cfg.seed = *c.seed;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vlab: spectral lab for u_t = Delta u + |grad u|^2 b on a periodic box"};
  app.require_subcommand(1);

  Common common;
  auto* run = app.add_subcommand("run", "integrate one trajectory with virial diagnostics");
  auto* picard = app.add_subcommand("picard", "Picard iteration and contraction report");
  auto* check = app.add_subcommand("check", "evaluate the blow-up conditions on the initial datum");
  auto* sweep = app.add_subcommand("sweep", "run a parameter sweep");
  auto* oracle = app.add_subcommand("oracle", "compare a run against an exact solution");
  for (auto* sub : {run, picard, check, sweep, oracle}) add_common(sub, common);

  double c1 = 0.0, c2 = 0.0, I0 = 0.0;
  std::vector<double> times;
  auto* riccati = app.add_subcommand("riccati", "closed-form Riccati solution J(t) and blow-up time");
  riccati->add_option("--c1", c1, "c1 > 0")->required();
  riccati->add_option("--c2", c2, "c2 >= 0")->required();
  riccati->add_option("--I0", I0, "J(0)")->required();
  riccati->add_option("--t", times, "times at which to print J");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : vlab::app::exit_code::kConfig;
  }

  try {
    if (riccati->parsed()) return vlab::app::cmd_riccati(c1, c2, I0, times, std::cout, std::cerr);
    const RunConfig cfg = load(common);
    if (run->parsed()) return vlab::app::cmd_run(cfg, std::cout);
    if (picard->parsed()) return vlab::app::cmd_picard(cfg, std::cout);
    if (check->parsed()) return vlab::app::cmd_check(cfg, std::cout);
    if (sweep->parsed()) return vlab::app::cmd_sweep(cfg, std::cout, std::cerr);
    if (oracle->parsed()) return vlab::app::cmd_oracle(cfg, std::cout);
  } catch (const vlab::app::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return vlab::app::exit_code::kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return vlab::app::exit_code::kInternal;
  }
  return vlab::app::exit_code::kInternal;
}
