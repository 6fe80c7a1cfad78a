// Copyright 2026 The belief-ess Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "belief_ess/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "belief_ess/belief_ess.hpp"
#include "belief_ess/io.hpp"
#include "belief_ess/report.hpp"

namespace belief_ess::cli {
namespace {

struct RunConfig {
  std::string game_file;
  std::string hawk_dove_flag;
  std::string strategy;
  std::vector<std::string> invaders;
  std::string row;
  std::string col;
  std::string resident;
  std::string mutant;
  double delta = 0.0;
  double tol = kDefaultEssTolerance;
  std::uint64_t mc_samples = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  double epsilon = 0.01;
  std::uint64_t max_steps = 100000;
  std::uint64_t stride = 1;
  bool sampled = false;
  bool sweep = false;
  bool json = false;
  std::string output;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BELIEF_ESS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Errc::kInvalidArgument,
                  std::string("BELIEF_ESS_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

SymmetricGame2<double> load_game(const RunConfig& cfg) {
  if (cfg.game_file.empty() == cfg.hawk_dove_flag.empty()) {
    throw Error(Errc::kInvalidArgument,
                "give exactly one of --game FILE or --hawk-dove V=..,C=..");
  }
  if (!cfg.game_file.empty()) return io::load_game(cfg.game_file);
  return hawk_dove(io::parse_hawk_dove_flag(cfg.hawk_dove_flag));
}

// Writes `body` to --output when given, otherwise to `out`.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& body) {
  if (cfg.output.empty()) {
    out << body;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw Error(Errc::kInvalidArgument, cfg.output + ": cannot write");
  file << body;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const auto game = load_game(cfg);
  const auto rep = classify(game, cfg.delta, cfg.tol, cfg.sweep);
  std::ostringstream body;
  if (cfg.json) {
    body << report::to_json(rep).dump(2) << '\n';
  } else {
    report::write_text(body, rep);
  }
  emit(cfg, out, body.str());
  return rep.any_ess() ? kExitOk : kExitNoEss;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto game = load_game(cfg);
  const auto resident = to_belief(io::parse_strategy(cfg.strategy, game));
  std::vector<Strategy<double>> invaders;
  for (const auto& spec : cfg.invaders) {
    invaders.push_back(io::parse_strategy(spec, game));
  }
  const auto v = verify_ess(game, resident, invaders, cfg.tol, cfg.sweep);
  std::ostringstream body;
  if (cfg.json) {
    body << report::to_json(game, resident, v).dump(2) << '\n';
  } else {
    report::write_text(body, game, resident, v);
  }
  emit(cfg, out, body.str());
  return v.stable ? kExitOk : kExitNoEss;
}

int cmd_payoff(const RunConfig& cfg, std::ostream& out) {
  const auto game = load_game(cfg);
  const auto row = io::parse_strategy(cfg.row, game);
  const auto col = io::parse_strategy(cfg.col, game);
  report::PayoffTable table{to_spec_string(row, game.labels()),
                            to_spec_string(col, game.labels()),
                            PayoffResult<double>::closed_form(
                                expected_payoff(game, row, col)),
                            {}, cfg.mc_samples, cfg.seed};
  if (cfg.mc_samples > 0) {
    table.monte_carlo =
        mc_expected_payoff(game, row, col, cfg.mc_samples, cfg.seed, cfg.workers);
  }
  std::ostringstream body;
  if (cfg.json) {
    body << report::to_json(table).dump(2) << '\n';
  } else {
    report::write_text(body, table);
  }
  emit(cfg, out, body.str());
  return kExitOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const auto game = load_game(cfg);
  const auto resident = io::parse_strategy(cfg.resident, game);
  const auto mutant = io::parse_strategy(cfg.mutant, game);
  InvasionOptions options;
  options.epsilon = cfg.epsilon;
  options.max_steps = cfg.max_steps;
  options.record_stride = cfg.stride;
  options.mode = cfg.sampled ? EncounterMode::kSampled : EncounterMode::kClosedForm;
  if (cfg.mc_samples > 0) options.mc_samples = cfg.mc_samples;
  options.seed = cfg.seed;
  const auto traj = invasion_experiment(game, resident, mutant, options);

  std::ostringstream body;
  if (cfg.json) {
    body << report::to_json(traj).dump(2) << '\n';
  } else {
    write_trajectory(body, traj);
  }
  emit(cfg, out, body.str());
  out << "verdict: " << to_string(traj.verdict) << " after "
      << traj.steps_taken << " steps (final mutant share "
      << report::format_number(traj.final_mutant_share()) << ")\n";
  return kExitOk;
}

void add_game_options(CLI::App* cmd, RunConfig& cfg) {
  auto* game = cmd->add_option("--game", cfg.game_file, "Game definition file");
  auto* hd = cmd->add_option("--hawk-dove", cfg.hawk_dove_flag,
                             "Inline Hawk-Dove game, e.g. V=2,C=4");
  game->excludes(hd);
  cmd->add_option("--tol", cfg.tol, "Tie tolerance for strict inequalities")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--json", cfg.json, "Emit JSON instead of text");
  cmd->add_option("--output,-o", cfg.output, "Write the result to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Pure, mixed and belief-based ESS for symmetric 2x2 games",
               args.empty() ? "belief_ess" : args.front()};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Classify every ESS of a game");
  add_game_options(solve, cfg);
  solve->add_option("--delta", cfg.delta, "Belief half-width delta")
      ->check(CLI::NonNegativeNumber);
  solve->add_flag("--sweep", cfg.sweep, "Also test mixed invaders p = 0.01..0.99");

  auto* verify = app.add_subcommand("verify", "Test a strategy against invaders");
  add_game_options(verify, cfg);
  verify->add_option("--strategy", cfg.strategy, "Resident strategy")->required();
  verify->add_option("--invader", cfg.invaders,
                     "Invader strategy (repeatable; default both pure)");
  verify->add_flag("--sweep", cfg.sweep, "Also test mixed invaders p = 0.01..0.99");

  auto* payoff = app.add_subcommand("payoff", "Expected payoff of row vs col");
  add_game_options(payoff, cfg);
  payoff->add_option("--row", cfg.row, "Row strategy")->required();
  payoff->add_option("--col", cfg.col, "Column strategy")->required();
  payoff->add_option("--mc", cfg.mc_samples, "Monte-Carlo sample count")
      ->check(CLI::PositiveNumber);
  payoff->add_option("--seed", cfg.seed, "Monte-Carlo seed (env BELIEF_ESS_SEED)");
  payoff->add_option("--workers", cfg.workers, "Monte-Carlo worker threads")
      ->check(CLI::PositiveNumber);

  auto* simulate = app.add_subcommand("simulate", "Replicator invasion experiment");
  add_game_options(simulate, cfg);
  simulate->add_option("--resident", cfg.resident, "Resident strategy")->required();
  simulate->add_option("--mutant", cfg.mutant, "Mutant strategy")->required();
  simulate->add_option("--epsilon", cfg.epsilon, "Initial mutant share in (0, 0.5)");
  simulate->add_option("--max-steps", cfg.max_steps, "Step limit")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--stride", cfg.stride, "Record every n-th step")
      ->check(CLI::PositiveNumber);
  simulate->add_flag("--sampled", cfg.sampled,
                     "Estimate encounter payoffs by sampling");
  simulate->add_option("--mc", cfg.mc_samples, "Samples per encounter in --sampled mode")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", cfg.seed, "Sampling seed (env BELIEF_ESS_SEED)");

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    cfg.seed = default_seed();
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (solve->parsed()) return cmd_solve(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (payoff->parsed()) return cmd_payoff(cfg, out);
    return cmd_simulate(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace belief_ess::cli
