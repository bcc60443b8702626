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

#ifndef HEARTS_ENV_H_
#define HEARTS_ENV_H_

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hearts/observation.h"
#include "hearts/reward.h"
#include "hearts/rng.h"

namespace hearts {

struct SeatReward {
  int seat;
  double reward;
};

struct StepOutcome {
  // The card actually played: the action itself, or the random legal
  // substitute when the action was illegal.
  Card applied = kTwoOfClubs;
  // Set when this play completed a trick.
  std::optional<TrickEvent> trick;
  // The next seat to act with its observation; empty once the game ended.
  std::optional<std::pair<int, Observation>> next;
  // Rewards accrued this step, at most one entry per seat, in seat order.
  // The acting seat always has an entry; at terminal all four seats do.
  std::vector<SeatReward> rewards;
  bool done = false;
  std::array<bool, 4> illegal_substituted{};
  std::optional<Scores> final_scores;
};

// Turn-based multi-agent wrapper around the game: exactly one seat is asked
// to act per step. Illegal actions never fault the episode; a random legal
// card from a seeded stream is substituted and the shaper's illegal penalty
// applied. One instance is single-threaded; instances are independent.
class HeartsEnv {
 public:
  // Fresh seeded game. Returns the first acting seat (the holder of the two
  // of clubs) and its observation.
  std::pair<int, Observation> Reset(uint64_t seed,
                                    const RulesConfig& rules = {},
                                    std::shared_ptr<const RewardShaper>
                                        shaper = nullptr);

  // Same, from a fixed deal; `seed` only feeds the substitution stream.
  std::pair<int, Observation> ResetFromDeal(
      const std::array<CardSet, 4>& hands, uint64_t seed,
      const RulesConfig& rules = {},
      std::shared_ptr<const RewardShaper> shaper = nullptr);

  StepOutcome Step(Card action);

  const GameState& state() const { return state_; }
  bool done() const { return state_.terminal(); }

 private:
  std::pair<int, Observation> Begin(GameState state, uint64_t seed,
                                    std::shared_ptr<const RewardShaper>);

  GameState state_ = GameState::NewGame(0);
  std::shared_ptr<const RewardShaper> shaper_;
  std::optional<Rng> substitute_rng_;
};

}  // namespace hearts

#endif  // HEARTS_ENV_H_
