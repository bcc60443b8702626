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

#include "hearts/env.h"

#include <map>

namespace hearts {

namespace {
// Stream tag separating the substitution rng from the deal rng.
constexpr uint64_t kSubstituteStream = 0x5b5e1;
}  // namespace

std::pair<int, Observation> HeartsEnv::Reset(
    uint64_t seed, const RulesConfig& rules,
    std::shared_ptr<const RewardShaper> shaper) {
  return Begin(GameState::NewGame(seed, rules), seed, std::move(shaper));
}

std::pair<int, Observation> HeartsEnv::ResetFromDeal(
    const std::array<CardSet, 4>& hands, uint64_t seed,
    const RulesConfig& rules, std::shared_ptr<const RewardShaper> shaper) {
  return Begin(GameState::FromDeal(hands, rules), seed, std::move(shaper));
}

std::pair<int, Observation> HeartsEnv::Begin(
    GameState state, uint64_t seed,
    std::shared_ptr<const RewardShaper> shaper) {
  state_ = std::move(state);
  shaper_ = shaper ? std::move(shaper) : std::make_shared<DefaultShaper>();
  substitute_rng_.emplace(DeriveSeed(seed, kSubstituteStream));
  int seat = state_.to_act();
  return {seat, EncodeObservation(state_, seat)};
}

StepOutcome HeartsEnv::Step(Card action) {
  if (state_.terminal()) {
    throw ContractViolation("env_step: episode already finished");
  }

  StepOutcome outcome;
  const int actor = state_.to_act();
  std::map<int, double> rewards;
  rewards[actor] = 0.0;

  ActionMask mask = state_.LegalActions();
  Card card = action;
  if (!mask.Contains(action)) {
    card = PickUniform(mask, *substitute_rng_);
    rewards[actor] += shaper_->OnIllegal(actor);
    outcome.illegal_substituted[actor] = true;
  }

  outcome.applied = card;
  std::optional<TrickEvent> event = state_.ApplyAction(card);
  if (event) {
    rewards[event->winner] += shaper_->OnTrickEnd(event->winner, *event);
    outcome.trick = event;
  }

  if (state_.terminal()) {
    Scores scores = state_.FinalScores();
    for (int seat = 0; seat < kNumSeats; ++seat) {
      rewards[seat] += shaper_->OnTerminal(seat, scores);
    }
    outcome.final_scores = scores;
    outcome.done = true;
  } else {
    int seat = state_.to_act();
    outcome.next = {seat, EncodeObservation(state_, seat)};
  }

  outcome.rewards.reserve(rewards.size());
  for (const auto& [seat, reward] : rewards) {
    outcome.rewards.push_back(SeatReward{seat, reward});
  }
  return outcome;
}

}  // namespace hearts
