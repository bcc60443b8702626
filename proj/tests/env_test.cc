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

#include <array>

#include "doctest.h"

namespace hearts {
namespace {

// Plays one seeded episode with uniformly random legal actions and returns
// (per-seat reward sums, final scores, illegal count per seat).
struct EpisodeTally {
  std::array<double, 4> reward_sum{};
  Scores scores;
  std::array<int, 4> illegal{};
};

EpisodeTally PlayRandomEpisode(HeartsEnv& env, uint64_t seed,
                               std::shared_ptr<const RewardShaper> shaper,
                               Rng& rng, bool sometimes_illegal = false) {
  EpisodeTally tally;
  auto [seat, obs] = env.Reset(seed, RulesConfig{}, std::move(shaper));
  while (true) {
    Card action = PickUniform(obs.mask, rng);
    if (sometimes_illegal && rng.NextUnit() < 0.15) {
      // Deliberately pick from the whole deck; usually off-mask.
      action = Card(static_cast<int>(rng.NextBelow(kNumCards)));
    }
    StepOutcome out = env.Step(action);
    for (const SeatReward& r : out.rewards) {
      tally.reward_sum[r.seat] += r.reward;
    }
    for (int s = 0; s < 4; ++s) {
      if (out.illegal_substituted[s]) tally.illegal[s] += 1;
    }
    if (out.done) {
      tally.scores = *out.final_scores;
      return tally;
    }
    std::tie(seat, obs) = *out.next;
  }
}

TEST_CASE("reset hands the first move to the two of clubs holder") {
  HeartsEnv env;
  auto [seat, obs] = env.Reset(123);
  CHECK(env.state().to_act() == seat);
  CHECK(obs.mask.Count() == 1);
  CHECK(obs.mask.Contains(kTwoOfClubs));
  CHECK(obs.card_states[kTwoOfClubs.index()] == kCardOwnHand);
}

TEST_CASE("default shaping: episode reward equals negative adjusted score") {
  HeartsEnv env;
  Rng rng(99);
  auto shaper = MakeShaper("default", 1.0);
  for (uint64_t seed = 0; seed < 400; ++seed) {
    EpisodeTally t = PlayRandomEpisode(env, seed, shaper, rng);
    for (int s = 0; s < 4; ++s) {
      CHECK(t.illegal[s] == 0);
      // Both sides are integer-valued, so equality is exact.
      CHECK(t.reward_sum[s] == -t.scores.adjusted[s]);
    }
  }
}

TEST_CASE("terminal-only shaping pays out once, same episode sum") {
  HeartsEnv env;
  Rng rng(5);
  auto shaper = MakeShaper("terminal_only", 1.0);

  auto [seat, obs] = env.Reset(77, RulesConfig{}, shaper);
  int steps = 0;
  while (true) {
    StepOutcome out = env.Step(PickUniform(obs.mask, rng));
    ++steps;
    if (out.done) {
      CHECK(out.rewards.size() == 4);
      for (const SeatReward& r : out.rewards) {
        CHECK(r.reward == -out.final_scores->adjusted[r.seat]);
      }
      break;
    }
    // Before terminal every reward entry is zero under this shaper.
    for (const SeatReward& r : out.rewards) CHECK(r.reward == 0.0);
    std::tie(seat, obs) = *out.next;
  }
  CHECK(steps == 52);
}

TEST_CASE("illegal actions: substitution, flag, and penalty accounting") {
  HeartsEnv env;
  auto [seat, obs] = env.Reset(10);
  // The opening mask is {2C}; the queen of spades is never legal here.
  StepOutcome out = env.Step(kQueenOfSpades);
  CHECK(out.applied == kTwoOfClubs);
  CHECK(out.illegal_substituted[seat]);
  bool penalized = false;
  for (const SeatReward& r : out.rewards) {
    if (r.seat == seat && r.reward == -1.0) penalized = true;
  }
  CHECK(penalized);

  // With illegal attempts sprinkled in, the episode sum is the negative
  // adjusted score minus one illegal penalty per substitution.
  Rng rng(21);
  auto shaper = MakeShaper("default", 1.0);
  for (uint64_t seed = 100; seed < 160; ++seed) {
    EpisodeTally t = PlayRandomEpisode(env, seed, shaper, rng,
                                       /*sometimes_illegal=*/true);
    for (int s = 0; s < 4; ++s) {
      CHECK(t.reward_sum[s] ==
            doctest::Approx(-t.scores.adjusted[s] - t.illegal[s]));
    }
  }

  // A custom illegal penalty flows through.
  auto expensive = MakeShaper("default", 5.0);
  auto [seat2, obs2] = env.Reset(11, RulesConfig{}, expensive);
  StepOutcome out2 = env.Step(kQueenOfSpades);
  bool charged = false;
  for (const SeatReward& r : out2.rewards) {
    if (r.seat == seat2 && r.reward == -5.0) charged = true;
  }
  CHECK(charged);
}

TEST_CASE("substituted cards come from a seeded stream: replays agree") {
  auto run = [](uint64_t seed) {
    HeartsEnv env;
    env.Reset(seed);
    std::array<int, 52> applied{};
    int i = 0;
    while (!env.done()) {
      // Always feed the same illegal card; the substitute draw and hence
      // the whole trajectory must replay identically.
      StepOutcome out = env.Step(kQueenOfSpades);
      applied[i++] = out.applied.index();
      if (out.done) break;
    }
    return applied;
  };
  CHECK(run(400) == run(400));
  CHECK(run(400) != run(401));
}

TEST_CASE("reset from a fixed deal is deterministic and respects hands") {
  std::array<CardSet, 4> hands;
  for (int i = 0; i < kNumCards; ++i) hands[i % 4].Add(Card(i));
  HeartsEnv env;
  auto [seat, obs] = env.ResetFromDeal(hands, 1);
  CHECK(seat == 0);  // card index 0 = two of clubs sits in hand 0
  CHECK(env.state().hand(2) == hands[2]);

  // The moon correction flows through the default shaper at terminal.
  // (Covered in aggregate by the episode-sum identity above; here just a
  // smoke run to terminal.)
  Rng rng(2);
  while (!env.done()) {
    Observation o = EncodeObservation(env.state(), env.state().to_act());
    env.Step(PickUniform(o.mask, rng));
  }
  CHECK(env.done());
}

TEST_CASE("unknown shaper names are rejected") {
  CHECK(MakeShaper("default", 1.0) != nullptr);
  CHECK(MakeShaper("terminal_only", 1.0) != nullptr);
  CHECK(MakeShaper("bogus", 1.0) == nullptr);
}

}  // namespace
}  // namespace hearts
