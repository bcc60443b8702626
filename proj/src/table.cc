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

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "hearts/json.h"

namespace hearts {
namespace {

constexpr uint64_t kDealStream = 0x7ab1e;
constexpr uint64_t kSeatStream = 0x5ea7;

struct GameTally {
  std::array<int, 4> adjusted_by_entrant{};
  std::array<std::array<long long, 4>, 4> placements_by_entrant{};
  std::array<long long, 4> illegal{};
  std::array<long long, 4> timeouts{};
};

// Plays one full game; thread-confined except for the entrant calls.
GameRecord PlayGame(long long game_id, const std::array<Entrant*, 4>& entrants,
                    const TableConfig& config, GameTally* tally) {
  GameRecord record;
  record.game_id = game_id;
  record.seed = DeriveSeed(config.master_seed, kDealStream, game_id);

  // entrant_at_seat inverts the rotation seat = (entrant + game) % 4.
  for (int e = 0; e < kNumSeats; ++e) {
    int seat = config.rotate_seats
                   ? static_cast<int>((e + game_id) % kNumSeats)
                   : e;
    record.entrant_at_seat[seat] = e;
  }

  std::array<std::optional<Rng>, 4> seat_rngs;
  for (int s = 0; s < kNumSeats; ++s) {
    seat_rngs[s].emplace(
        DeriveSeed(config.master_seed, kSeatStream, game_id * kNumSeats + s));
  }

  HeartsEnv env;
  auto [seat, obs] = env.Reset(record.seed, config.rules);
  std::optional<Scores> scores;
  while (true) {
    int e = record.entrant_at_seat[seat];
    Entrant::ActionReply reply =
        entrants[e]->RequestAction(game_id, obs, *seat_rngs[seat]);
    if (reply.timed_out) tally->timeouts[e] += 1;

    StepOutcome out = env.Step(reply.card);
    if (out.illegal_substituted[seat]) tally->illegal[e] += 1;
    record.plays.push_back(
        PlayRecord{seat, out.applied.index(), out.illegal_substituted[seat]});

    if (out.trick) {
      for (int s = 0; s < kNumSeats; ++s) {
        entrants[record.entrant_at_seat[s]]->OnTrickResult(game_id, *out.trick,
                                                           s);
      }
    }
    if (out.done) {
      scores = out.final_scores;
      break;
    }
    std::tie(seat, obs) = *out.next;
  }

  record.raw = scores->raw;
  record.adjusted = scores->adjusted;
  record.placements = Placements(scores->adjusted);
  for (int s = 0; s < kNumSeats; ++s) {
    int e = record.entrant_at_seat[s];
    tally->adjusted_by_entrant[e] = scores->adjusted[s];
    tally->placements_by_entrant[e][record.placements[s] - 1] = 1;
    entrants[e]->OnGameResult(game_id, *scores, record.placements, s);
  }
  return record;
}

}  // namespace

TableResult RunTable(const std::array<Entrant*, 4>& entrants,
                     const TableConfig& config) {
  if (config.n_games <= 0) {
    throw std::invalid_argument("table: n_games must be positive");
  }
  if (config.n_parallel <= 0) {
    throw std::invalid_argument("table: n_parallel must be positive");
  }
  if (config.action_timeout_ms <= 0 || config.grace_ms < 0) {
    throw std::invalid_argument("table: timeouts must be positive");
  }
  for (Entrant* e : entrants) {
    if (e == nullptr) throw std::invalid_argument("table: null entrant");
  }
  int n_workers = static_cast<int>(
      std::min<long long>(config.n_parallel, config.n_games));

  for (Entrant* e : entrants) e->BeginRound(config);

  TableResult result;
  result.n_games = config.n_games;
  result.games.resize(config.n_games);

  std::atomic<long long> next_game{0};
  std::atomic<int> in_flight{0};
  std::atomic<int> max_in_flight{0};
  std::mutex tally_mutex;
  GameTally totals;
  std::array<double, 4> sum_adjusted{};

  auto worker = [&] {
    while (true) {
      long long game_id = next_game.fetch_add(1);
      if (game_id >= config.n_games) return;
      int now = in_flight.fetch_add(1) + 1;
      int seen = max_in_flight.load();
      while (now > seen && !max_in_flight.compare_exchange_weak(seen, now)) {
      }

      GameTally tally;
      GameRecord record = PlayGame(game_id, entrants, config, &tally);

      {
        std::lock_guard<std::mutex> lock(tally_mutex);
        for (int e = 0; e < kNumSeats; ++e) {
          sum_adjusted[e] += tally.adjusted_by_entrant[e];
          totals.illegal[e] += tally.illegal[e];
          totals.timeouts[e] += tally.timeouts[e];
          for (int p = 0; p < kNumSeats; ++p) {
            totals.placements_by_entrant[e][p] +=
                tally.placements_by_entrant[e][p];
          }
        }
        if (config.record_transcripts) {
          result.games[game_id] = std::move(record);
        }
      }
      in_flight.fetch_sub(1);
    }
  };

  {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
  }

  if (!config.record_transcripts) result.games.clear();
  result.max_in_flight = max_in_flight.load();
  for (int e = 0; e < kNumSeats; ++e) {
    EntrantResult& r = result.entrants[e];
    r.name = entrants[e]->name();
    r.is_bot = entrants[e]->is_bot();
    r.total_adjusted = static_cast<long long>(sum_adjusted[e]);
    r.mean_adjusted = sum_adjusted[e] / static_cast<double>(config.n_games);
    r.placements = totals.placements_by_entrant[e];
    r.kicked = entrants[e]->kicked();
    r.illegal_actions = totals.illegal[e];
    r.timeouts = totals.timeouts[e];
  }

  RoundResultMsg summary = SummarizeRound(result);
  for (Entrant* e : entrants) e->OnRoundResult(summary);
  return result;
}

std::string GameRecordJsonLine(const GameRecord& record) {
  Json plays = Json::array();
  for (const PlayRecord& p : record.plays) {
    plays.push_back(Json::array({p.seat, p.card_index, p.illegal ? 1 : 0}));
  }
  Json j{{"type", "game_record"},
         {"game_id", record.game_id},
         {"seed", record.seed},
         {"entrant_at_seat", record.entrant_at_seat},
         {"plays", std::move(plays)},
         {"raw", record.raw},
         {"adjusted", record.adjusted},
         {"placements", record.placements}};
  return j.dump();
}

RoundResultMsg SummarizeRound(const TableResult& result) {
  RoundResultMsg msg;
  msg.n_games = result.n_games;
  for (const EntrantResult& r : result.entrants) {
    EntrantSummary s;
    s.name = r.name;
    s.total_adjusted = r.total_adjusted;
    s.mean_adjusted = r.mean_adjusted;
    s.placements = r.placements;
    s.kicked = r.kicked;
    s.illegal_actions = r.illegal_actions;
    s.timeouts = r.timeouts;
    s.is_bot = r.is_bot;
    msg.entrants.push_back(std::move(s));
  }
  return msg;
}

}  // namespace hearts
