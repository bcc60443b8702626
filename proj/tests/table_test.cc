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

#include "hearts/table.h"

#include <memory>
#include <vector>

#include "doctest.h"
#include "hearts/json.h"
#include "hearts/policy.h"

namespace hearts {
namespace {

struct LocalTable {
  std::vector<std::unique_ptr<LocalEntrant>> owned;
  std::array<Entrant*, 4> entrants;

  explicit LocalTable(const char* spec = "random") {
    auto policy = std::shared_ptr<const Policy>(MakePolicy(spec));
    for (int i = 0; i < 4; ++i) {
      owned.push_back(std::make_unique<LocalEntrant>(
          "local-" + std::to_string(i), policy));
      entrants[i] = owned.back().get();
    }
  }
};

TEST_CASE("transcripts do not depend on the worker pool size") {
  TableConfig config;
  config.n_games = 64;
  config.master_seed = 5;

  LocalTable a;
  config.n_parallel = 16;
  TableResult parallel = RunTable(a.entrants, config);

  LocalTable b;
  config.n_parallel = 1;
  TableResult serial = RunTable(b.entrants, config);

  CHECK(parallel.n_games == 64);
  REQUIRE(parallel.games.size() == 64);
  REQUIRE(serial.games.size() == 64);
  for (size_t g = 0; g < 64; ++g) {
    CHECK(parallel.games[g].game_id == static_cast<long long>(g));
    CHECK(parallel.games[g] == serial.games[g]);
  }
  for (int e = 0; e < 4; ++e) {
    CHECK(parallel.entrants[e].total_adjusted ==
          serial.entrants[e].total_adjusted);
    CHECK(parallel.entrants[e].placements == serial.entrants[e].placements);
  }
  CHECK(parallel.max_in_flight <= 16);
  CHECK(parallel.max_in_flight >= 1);
  CHECK(serial.max_in_flight == 1);

  // Same config, fresh run: bitwise repeatable.
  LocalTable c;
  config.n_parallel = 16;
  TableResult again = RunTable(c.entrants, config);
  for (size_t g = 0; g < 64; ++g) CHECK(again.games[g] == parallel.games[g]);

  // A different master seed changes the deals.
  LocalTable d;
  config.master_seed = 6;
  TableResult other = RunTable(d.entrants, config);
  bool any_difference = false;
  for (size_t g = 0; g < 64; ++g) {
    if (!(other.games[g] == parallel.games[g])) any_difference = true;
  }
  CHECK(any_difference);
}

TEST_CASE("seat rotation and score bookkeeping line up") {
  LocalTable table;
  TableConfig config;
  config.n_games = 12;
  config.n_parallel = 4;
  config.master_seed = 9;

  TableResult result = RunTable(table.entrants, config);
  REQUIRE(result.games.size() == 12);

  std::array<long long, 4> totals{};
  std::array<std::array<long long, 4>, 4> placements{};
  for (const GameRecord& game : result.games) {
    // Rotation: entrant e sits at seat (e + game_id) % 4.
    for (int e = 0; e < 4; ++e) {
      int seat = static_cast<int>((e + game.game_id) % 4);
      CHECK(game.entrant_at_seat[seat] == e);
      totals[e] += game.adjusted[seat];
      placements[e][game.placements[seat] - 1] += 1;
    }
    CHECK(game.plays.size() == 52);
    int raw_total = 0;
    for (int s = 0; s < 4; ++s) raw_total += game.raw[s];
    CHECK(raw_total == kTotalPenalty);
  }
  for (int e = 0; e < 4; ++e) {
    CHECK(result.entrants[e].total_adjusted == totals[e]);
    CHECK(result.entrants[e].placements == placements[e]);
    CHECK(result.entrants[e].mean_adjusted ==
          doctest::Approx(totals[e] / 12.0));
    CHECK(result.entrants[e].kicked == false);
    CHECK(result.entrants[e].timeouts == 0);
    CHECK(result.entrants[e].illegal_actions == 0);
    CHECK(result.entrants[e].name == "local-" + std::to_string(e));
  }

  SUBCASE("rotation off pins entrants to their seats") {
    LocalTable fixed;
    config.rotate_seats = false;
    TableResult pinned = RunTable(fixed.entrants, config);
    for (const GameRecord& game : pinned.games) {
      for (int s = 0; s < 4; ++s) CHECK(game.entrant_at_seat[s] == s);
    }
  }
}

TEST_CASE("transcript recording can be turned off") {
  LocalTable table;
  TableConfig config;
  config.n_games = 8;
  config.record_transcripts = false;
  TableResult result = RunTable(table.entrants, config);
  CHECK(result.games.empty());
  CHECK(result.n_games == 8);
  long long places = 0;
  for (const EntrantResult& e : result.entrants) {
    for (long long c : e.placements) places += c;
  }
  CHECK(places == 4 * 8);
}

TEST_CASE("round summary mirrors the table result") {
  LocalTable table;
  TableConfig config;
  config.n_games = 10;
  TableResult result = RunTable(table.entrants, config);

  RoundResultMsg summary = SummarizeRound(result);
  CHECK(summary.n_games == 10);
  REQUIRE(summary.entrants.size() == 4);
  for (int e = 0; e < 4; ++e) {
    CHECK(summary.entrants[e].name == result.entrants[e].name);
    CHECK(summary.entrants[e].total_adjusted ==
          result.entrants[e].total_adjusted);
    CHECK(summary.entrants[e].mean_adjusted ==
          result.entrants[e].mean_adjusted);
    CHECK(summary.entrants[e].placements == result.entrants[e].placements);
    CHECK(summary.entrants[e].kicked == result.entrants[e].kicked);
    CHECK(summary.entrants[e].is_bot == result.entrants[e].is_bot);
  }

  // The transcript log line is valid one-line JSON with the key fields.
  std::string line = GameRecordJsonLine(result.games[3]);
  CHECK(line.find('\n') == std::string::npos);
  Json j = Json::parse(line);
  CHECK(j["game_id"] == 3);
  CHECK(j["plays"].size() == 52);
  CHECK(j["adjusted"].size() == 4);
}

TEST_CASE("table validates its configuration") {
  LocalTable table;
  TableConfig config;
  config.n_games = 0;
  CHECK_THROWS_AS(RunTable(table.entrants, config), std::invalid_argument);
  config.n_games = 4;
  config.n_parallel = 0;
  CHECK_THROWS_AS(RunTable(table.entrants, config), std::invalid_argument);

  std::array<Entrant*, 4> with_null = table.entrants;
  with_null[2] = nullptr;
  config.n_parallel = 2;
  CHECK_THROWS_AS(RunTable(with_null, config), std::invalid_argument);
}

}  // namespace
}  // namespace hearts
