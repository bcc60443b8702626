// Copyright 2026 The Hearts Arena Authors
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

// Command-line entry point: simulate | train | eval | serve | connect |
// tournament. Every run prints its fully resolved configuration (seeds
// included) before doing any work, and identical resolved configurations
// produce byte-identical result files.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hearts/client.h"
#include "hearts/config.h"
#include "hearts/evaluate.h"
#include "hearts/qlearn.h"
#include "hearts/server.h"
#include "hearts/tournament.h"

namespace hearts {
namespace {

std::vector<std::string> SplitCsv(const std::string& csv) {
  std::vector<std::string> parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

void PrintResolved(const RunConfig& config) {
  std::cout << "# resolved config\n" << ResolvedConfigJson(config) << "\n";
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  return out;
}

double Elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

int RunSimulate(const RunConfig& config, const std::string& out_path) {
  PrintResolved(config);
  std::array<std::unique_ptr<Policy>, 4> policies;
  std::array<std::unique_ptr<LocalEntrant>, 4> owners;
  std::array<Entrant*, 4> entrants;
  for (int i = 0; i < 4; ++i) {
    policies[i] = MakePolicy(config.env.policies[i]);
    owners[i] = std::make_unique<LocalEntrant>(
        config.env.policies[i] + "#" + std::to_string(i),
        std::shared_ptr<const Policy>(policies[i].get(), [](const Policy*) {}));
    entrants[i] = owners[i].get();
  }

  TableConfig table = config.MakeTableConfig();
  auto start = std::chrono::steady_clock::now();
  TableResult result = RunTable(entrants, table);
  double secs = Elapsed(start);

  std::printf("%-20s %12s %10s\n", "entrant", "total", "mean");
  for (const EntrantResult& r : result.entrants) {
    std::printf("%-20s %12lld %10.3f\n", r.name.c_str(), r.total_adjusted,
                r.mean_adjusted);
  }
  std::printf("%lld games in %.2f s (%.0f games/s), max %d in flight\n",
              result.n_games, secs, result.n_games / secs,
              result.max_in_flight);

  std::ofstream out = OpenOutput(out_path);
  for (const GameRecord& record : result.games) {
    out << GameRecordJsonLine(record) << "\n";
  }
  out << EncodeMessage(SummarizeRound(result));
  std::printf("transcripts written to %s\n", out_path.c_str());
  return 0;
}

int RunEval(const RunConfig& config, const std::string& out_path) {
  PrintResolved(config);
  std::array<std::unique_ptr<Policy>, 4> owned;
  std::array<const Policy*, 4> policies;
  for (int i = 0; i < 4; ++i) {
    owned[i] = MakePolicy(config.env.policies[i]);
    policies[i] = owned[i].get();
  }

  EvalConfig eval;
  eval.games = config.env.games;
  eval.seed = config.env.seed;
  eval.rotate_seats = config.env.rotate_seats;
  eval.rules = config.rules;

  auto start = std::chrono::steady_clock::now();
  EvalReport report = Evaluate(policies, eval);
  double secs = Elapsed(start);
  std::cout << FormatEvalReport(report);
  std::printf("%lld games in %.2f s (%.0f games/s)\n", report.games, secs,
              report.games / secs);

  std::ofstream out = OpenOutput(out_path);
  out << "policy,mean_adjusted,stderr,placements_1,placements_2,placements_3,"
         "placements_4,illegal_actions\n";
  char line[256];
  for (const PolicyEvalStats& s : report.policies) {
    std::snprintf(line, sizeof(line),
                  "%s,%.17g,%.17g,%lld,%lld,%lld,%lld,%lld\n", s.name.c_str(),
                  s.mean_adjusted, s.stderr_adjusted, s.placements[0],
                  s.placements[1], s.placements[2], s.placements[3],
                  s.illegal_actions);
    out << line;
  }
  std::printf("report written to %s\n", out_path.c_str());
  return 0;
}

int RunTrain(const RunConfig& config, const std::string& out_path,
             const std::string& curve_path) {
  PrintResolved(config);
  TrainConfig train = config.MakeTrainConfig();
  auto start = std::chrono::steady_clock::now();
  TrainResult result = TrainSelfplay(train);
  double secs = Elapsed(start);

  std::printf("trained %lld games in %.1f s (%.0f games/s)\n", train.games,
              secs, train.games / secs);
  if (!result.curve.empty()) {
    const CurvePoint& first = result.curve.front();
    const CurvePoint& last = result.curve.back();
    std::printf("window means: %.3f after %lld games, %.3f after %lld games\n",
                first.mean_adjusted_score, first.games_played,
                last.mean_adjusted_score, last.games_played);
  }
  SaveWeights(out_path, result.weights);
  std::printf("weights written to %s\n", out_path.c_str());
  SaveCurveCsv(curve_path, result.curve);
  std::printf("curve written to %s\n", curve_path.c_str());
  return 0;
}

int RunServe(const RunConfig& config, const std::string& listen,
             const std::string& results_path) {
  auto addr = ParseAddress(listen);
  if (!addr) throw std::runtime_error("bad listen address: " + listen);

  PrintResolved(config);
  ServerConfig server_config;
  server_config.listen = *addr;
  server_config.table = config.MakeTableConfig();
  server_config.results_path = results_path;

  ArenaServer server(server_config);
  server.Start();
  std::printf("listening on %s:%d\n", addr->host.c_str(), server.port());
  std::printf(
      "admin commands: 'table start [games]', 'tournament start', 'status', "
      "'quit'\n");
  std::cout.flush();

  std::string command;
  while (std::getline(std::cin, command)) {
    std::stringstream ss(command);
    std::string word, arg;
    ss >> word;
    if (word == "quit" || word == "exit") break;
    if (word == "status" || word.empty()) {
      std::cout << server.Status() << "\n";
      std::cout.flush();
      continue;
    }
    if (word == "table") {
      ss >> arg;  // "start"
      TableConfig table = config.MakeTableConfig();
      long long games = 0;
      if (ss >> games && games > 0) table.n_games = games;
      std::printf("starting table round: %lld games\n", table.n_games);
      std::cout.flush();
      TableResult result = server.StartTable(table);
      for (const EntrantResult& r : result.entrants) {
        std::printf("%-20s total %6lld mean %7.3f%s%s\n", r.name.c_str(),
                    r.total_adjusted, r.mean_adjusted,
                    r.kicked ? " [kicked]" : "", r.is_bot ? " [bot]" : "");
      }
      std::cout.flush();
      continue;
    }
    if (word == "tournament") {
      TournamentConfig tournament;
      tournament.table = config.MakeTableConfig();
      TournamentResult result = server.StartTournament(tournament);
      std::printf("champion: %s\n", result.champion.c_str());
      std::cout.flush();
      continue;
    }
    std::printf("unknown admin command: %s\n", command.c_str());
    std::cout.flush();
  }
  server.Shutdown();
  std::printf("server shut down\n");
  return 0;
}

int RunConnect(const RunConfig& config, const std::string& server,
               const std::string& name, const std::string& team,
               const std::string& policy, int margin_ms, int rounds,
               uint64_t seed) {
  auto addr = ParseAddress(server);
  if (!addr) throw std::runtime_error("bad server address: " + server);

  PrintResolved(config);
  ClientConfig client;
  client.server = *addr;
  client.name = name;
  client.team = team;
  client.policy_spec = policy;
  client.margin_ms = margin_ms;
  client.n_rounds = rounds;
  client.seed = seed;

  ClientSummary summary = RunClient(client);
  std::printf(
      "player #%d: %lld games, mean adjusted %.3f, %lld actions, %lld "
      "timeouts, %d rounds%s\n",
      summary.player_id, summary.games, summary.mean_adjusted,
      summary.requests_answered, summary.timeouts, summary.rounds,
      summary.kicked ? " [kicked]" : "");
  if (!summary.error.empty()) {
    std::fprintf(stderr, "session ended abnormally: %s\n",
                 summary.error.c_str());
    return 1;
  }
  return 0;
}

int RunLocalTournament(const RunConfig& config,
                       const std::string& results_path) {
  PrintResolved(config);
  std::vector<std::unique_ptr<Policy>> policies;
  std::vector<std::unique_ptr<LocalEntrant>> owners;
  std::vector<Entrant*> entrants;
  for (size_t i = 0; i < config.tournament.entrants.size(); ++i) {
    const std::string& spec = config.tournament.entrants[i];
    policies.push_back(MakePolicy(spec));
    owners.push_back(std::make_unique<LocalEntrant>(
        spec + "#" + std::to_string(i),
        std::shared_ptr<const Policy>(policies.back().get(),
                                      [](const Policy*) {})));
    entrants.push_back(owners.back().get());
  }

  TournamentConfig tournament;
  tournament.table = config.MakeTableConfig();
  TournamentResult result = RunTournament(entrants, tournament);

  for (const TournamentRound& round : result.rounds) {
    std::printf("%s:\n", round.name.c_str());
    for (int rank = 0; rank < 4; ++rank) {
      const EntrantResult& r = round.result.entrants[round.ranking[rank]];
      std::printf("  %d. %-20s total %6lld mean %7.3f\n", rank + 1,
                  r.name.c_str(), r.total_adjusted, r.mean_adjusted);
    }
  }
  std::printf("champion: %s\n", result.champion.c_str());
  if (result.n_padded_bots > 0) {
    std::printf("note: padded with %d random bot(s)\n", result.n_padded_bots);
  }

  std::ofstream out = OpenOutput(results_path);
  for (const TournamentRound& round : result.rounds) {
    for (const GameRecord& record : round.result.games) {
      out << GameRecordJsonLine(record) << "\n";
    }
    out << EncodeMessage(SummarizeRound(round.result));
  }
  out << TournamentJsonLine(result) << "\n";
  std::printf("results written to %s\n", results_path.c_str());
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{
      "hearts arena: rules engine, learning environment and tournament "
      "server for the game of hearts"};
  app.require_subcommand(1);

  RunConfig config;
  std::string config_path;
  // Config precedence is defaults < file < flags, so the file is applied
  // before CLI11 sees the flags: option defaults then reflect the file and
  // explicit flags overwrite them.
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--config") == 0) config_path = argv[i + 1];
  }
  if (!config_path.empty()) ApplyConfigFile(config, config_path);
  app.add_option("--config", config_path,
                 "JSON config file (defaults < file < flags)");

  std::string policies_csv;
  std::string opponents_csv;
  std::string entrants_csv;

  auto* simulate = app.add_subcommand(
      "simulate", "play local policies against each other on one table");
  std::string simulate_out = "simulate_results.jsonl";
  simulate->add_option("--games", config.table.n_games, "games to play")
      ->capture_default_str();
  simulate->add_option("--parallel", config.table.n_parallel,
                       "max games in flight")
      ->capture_default_str();
  simulate->add_option("--seed", config.table.master_seed, "master seed")
      ->capture_default_str();
  simulate->add_option("--policies", policies_csv,
                       "four comma-separated policy specs");
  simulate->add_flag("--rotate,!--no-rotate", config.table.rotate_seats,
                     "cycle seat assignment per game");
  simulate->add_option("--out", simulate_out, "transcript output (JSON lines)")
      ->capture_default_str();

  auto* train = app.add_subcommand(
      "train", "train linear Q-learning weights by playing full games");
  std::string train_out = "weights.json";
  std::string curve_out = "curve.csv";
  train->add_option("--games", config.training.games, "training games")
      ->capture_default_str();
  train->add_option("--alpha", config.training.alpha, "learning rate")
      ->capture_default_str();
  train->add_option("--gamma", config.training.gamma, "discount")
      ->capture_default_str();
  train->add_option("--eps-start", config.training.epsilon_start,
                    "initial exploration rate")
      ->capture_default_str();
  train->add_option("--eps-end", config.training.epsilon_end,
                    "exploration rate from halfway on")
      ->capture_default_str();
  train->add_option("--seed", config.training.seed, "training seed")
      ->capture_default_str();
  train->add_option("--opponents", opponents_csv,
                    "three comma-separated opponent policy specs");
  train->add_option("--shaper", config.reward.shaper,
                    "reward shaping: default | terminal_only")
      ->capture_default_str();
  train->add_option("--illegal-penalty", config.reward.illegal_penalty,
                    "penalty for masked-out actions")
      ->capture_default_str();
  train->add_option("--out", train_out, "weights output file")
      ->capture_default_str();
  train->add_option("--curve", curve_out, "training curve output (CSV)")
      ->capture_default_str();

  auto* eval = app.add_subcommand(
      "eval", "sequential evaluation with per-policy statistics");
  std::string eval_out = "eval_report.csv";
  eval->add_option("--games", config.env.games, "games to play")
      ->capture_default_str();
  eval->add_option("--seed", config.env.seed, "evaluation seed")
      ->capture_default_str();
  eval->add_option("--policies", policies_csv,
                   "four comma-separated policy specs");
  eval->add_flag("--rotate,!--no-rotate", config.env.rotate_seats,
                 "cycle seat assignment per game");
  eval->add_option("--out", eval_out, "report output (CSV)")
      ->capture_default_str();

  auto* serve = app.add_subcommand(
      "serve", "host an evaluation server for remote clients");
  std::string listen = "127.0.0.1:45454";
  std::string results_path = "results.jsonl";
  serve->add_option("--listen", listen, "listen address host:port")
      ->capture_default_str();
  serve->add_option("--games", config.table.n_games, "games per table round")
      ->capture_default_str();
  serve->add_option("--parallel", config.table.n_parallel,
                    "max games in flight")
      ->capture_default_str();
  serve->add_option("--timeout-ms", config.table.action_timeout_ms,
                    "advertised per-action deadline")
      ->capture_default_str();
  serve->add_option("--grace-ms", config.table.grace_ms,
                    "extra slack before the kick")
      ->capture_default_str();
  serve->add_option("--seed", config.table.master_seed, "master seed")
      ->capture_default_str();
  serve->add_option("--results", results_path, "append-only results log")
      ->capture_default_str();

  auto* connect =
      app.add_subcommand("connect", "join a server with a local policy");
  std::string server_addr = "127.0.0.1:45454";
  std::string client_name = "anon";
  std::string client_team;
  std::string client_policy = "random";
  int margin_ms = 200;
  int client_rounds = 1;
  uint64_t client_seed = 1;
  connect->add_option("--server", server_addr, "server address host:port")
      ->capture_default_str();
  connect->add_option("--name", client_name, "player name")
      ->capture_default_str();
  connect->add_option("--team", client_team, "team name");
  connect->add_option("--policy", client_policy,
                      "random | rule | weights:<path>")
      ->capture_default_str();
  connect->add_option("--margin-ms", margin_ms, "compute budget margin")
      ->capture_default_str();
  connect->add_option("--rounds", client_rounds,
                      "rounds to play before disconnecting (0 = forever)")
      ->capture_default_str();
  connect->add_option("--seed", client_seed, "client-side policy seed")
      ->capture_default_str();

  auto* tournament = app.add_subcommand(
      "tournament", "run a local knockout bracket over policy specs");
  std::string tournament_out = "tournament_results.jsonl";
  tournament->add_option("--entrants", entrants_csv,
                         "up to 8 comma-separated policy specs");
  tournament->add_option("--games", config.table.n_games, "games per round")
      ->capture_default_str();
  tournament->add_option("--parallel", config.table.n_parallel,
                         "max games in flight")
      ->capture_default_str();
  tournament->add_option("--seed", config.table.master_seed, "master seed")
      ->capture_default_str();
  tournament->add_option("--out", tournament_out, "results output (JSON lines)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!policies_csv.empty()) {
      std::vector<std::string> parts = SplitCsv(policies_csv);
      if (parts.size() != 4) {
        std::fprintf(stderr, "--policies needs exactly 4 specs, got %zu\n",
                     parts.size());
        return 2;
      }
      for (int i = 0; i < 4; ++i) config.env.policies[i] = parts[i];
    }
    if (!opponents_csv.empty()) {
      std::vector<std::string> parts = SplitCsv(opponents_csv);
      if (parts.size() != 3) {
        std::fprintf(stderr, "--opponents needs exactly 3 specs, got %zu\n",
                     parts.size());
        return 2;
      }
      for (int i = 0; i < 3; ++i) config.training.opponents[i] = parts[i];
    }
    if (!entrants_csv.empty()) {
      config.tournament.entrants = SplitCsv(entrants_csv);
    }
    ValidateConfig(config);

    if (simulate->parsed()) return RunSimulate(config, simulate_out);
    if (train->parsed()) return RunTrain(config, train_out, curve_out);
    if (eval->parsed()) return RunEval(config, eval_out);
    if (serve->parsed()) return RunServe(config, listen, results_path);
    if (connect->parsed()) {
      return RunConnect(config, server_addr, client_name, client_team,
                        client_policy, margin_ms, client_rounds, client_seed);
    }
    if (tournament->parsed()) {
      return RunLocalTournament(config, tournament_out);
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

}  // namespace
}  // namespace hearts

int main(int argc, char** argv) {
  try {
    return hearts::Main(argc, argv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
