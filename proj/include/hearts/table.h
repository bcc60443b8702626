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

#ifndef HEARTS_TABLE_H_
#define HEARTS_TABLE_H_

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "hearts/env.h"
#include "hearts/policy.h"
#include "hearts/protocol.h"

namespace hearts {

struct TableConfig {
  long long n_games = 100;
  // Upper bound on simultaneously running games; clamped to n_games.
  int n_parallel = 16;
  int action_timeout_ms = 2000;
  // Extra slack past the advertised deadline before a kick, absorbing
  // network latency.
  int grace_ms = 250;
  uint64_t master_seed = 1;
  // Cycle the entrant -> seat assignment: entrant e sits at seat
  // (e + game) % 4. Off means entrant e always sits at seat e.
  bool rotate_seats = true;
  RulesConfig rules;
  bool record_transcripts = true;
};

// One seat's supplier of actions for a table round: a local policy, or a
// remote connection with deadline enforcement. Implementations must be
// thread-safe; several games request actions concurrently.
class Entrant {
 public:
  struct ActionReply {
    Card card = kTwoOfClubs;
    // The advertised deadline passed and a bot draw was substituted.
    bool timed_out = false;
  };

  virtual ~Entrant() = default;

  virtual std::string name() const = 0;
  virtual bool is_bot() const { return false; }

  // Called once before a table round; per-round state (kicks) resets here.
  virtual void BeginRound(const TableConfig& config) {}

  // Blocking. `rng` is the requesting game's seat-scoped stream; every
  // substitute draw (timeout, kicked) must come from it so that game
  // outcomes are independent of scheduling.
  virtual ActionReply RequestAction(long long game_id, const Observation& obs,
                                    Rng& rng) = 0;

  // Notifications; default no-ops. `my_seat` is this entrant's physical
  // seat in that game.
  virtual void OnTrickResult(long long game_id, const TrickEvent& event,
                             int my_seat) {}
  virtual void OnGameResult(long long game_id, const Scores& scores,
                            const std::array<int, 4>& placements,
                            int my_seat) {}
  virtual void OnRoundResult(const RoundResultMsg& summary) {}

  virtual bool kicked() const { return false; }
};

// Wraps a Policy as an always-responsive entrant.
class LocalEntrant : public Entrant {
 public:
  LocalEntrant(std::string name, std::shared_ptr<const Policy> policy,
               bool is_bot = false)
      : name_(std::move(name)), policy_(std::move(policy)), is_bot_(is_bot) {}

  std::string name() const override { return name_; }
  bool is_bot() const override { return is_bot_; }
  ActionReply RequestAction(long long, const Observation& obs,
                            Rng& rng) override {
    return ActionReply{policy_->Act(obs, rng), false};
  }

 private:
  std::string name_;
  std::shared_ptr<const Policy> policy_;
  bool is_bot_;
};

struct PlayRecord {
  int seat;
  int card_index;  // the card actually applied
  bool illegal;    // the entrant's reply was off-mask and got substituted

  friend bool operator==(const PlayRecord&, const PlayRecord&) = default;
};

// Deterministic per-game transcript; two table runs agree iff their
// GameRecords agree game by game.
struct GameRecord {
  long long game_id = 0;
  uint64_t seed = 0;
  std::array<int, 4> entrant_at_seat{};
  std::vector<PlayRecord> plays;
  std::array<int, 4> raw{};
  std::array<int, 4> adjusted{};
  std::array<int, 4> placements{};

  friend bool operator==(const GameRecord&, const GameRecord&) = default;
};

struct EntrantResult {
  std::string name;
  bool is_bot = false;
  long long total_adjusted = 0;
  double mean_adjusted = 0.0;
  std::array<long long, 4> placements{};
  bool kicked = false;
  long long illegal_actions = 0;
  long long timeouts = 0;
};

struct TableResult {
  long long n_games = 0;
  std::array<EntrantResult, 4> entrants;
  // In game_id order; empty when record_transcripts is off.
  std::vector<GameRecord> games;
  // Instrumentation: the high-water mark of simultaneously running games.
  int max_in_flight = 0;
};

// Plays config.n_games seeded games over a pool of config.n_parallel
// worker threads. Per-game randomness is derived from (master_seed,
// game_id[, seat]) only, so transcripts are identical for any n_parallel.
// Completes in bounded time regardless of entrant behavior.
TableResult RunTable(const std::array<Entrant*, 4>& entrants,
                     const TableConfig& config);

// The wire summary sent to remote entrants after a round.
RoundResultMsg SummarizeRound(const TableResult& result);

// One-line JSON serialization of a transcript for results logs.
std::string GameRecordJsonLine(const GameRecord& record);

}  // namespace hearts

#endif  // HEARTS_TABLE_H_
