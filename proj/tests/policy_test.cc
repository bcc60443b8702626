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

#include "hearts/policy.h"

#include <initializer_list>
#include <map>
#include <stdexcept>

#include "doctest.h"

namespace hearts {
namespace {

CardSet FromNames(std::initializer_list<const char*> names) {
  CardSet set;
  for (const char* name : names) {
    auto card = CardFromName(name);
    REQUIRE(card.has_value());
    set.Add(*card);
  }
  return set;
}

Card Named(const char* name) { return *CardFromName(name); }

// Builds a mid-game state where seat 0 holds `hand`, leads or follows
// `on_table` (played by the seats before it), and asks the policy to act.
// Remaining cards are parked in a collected pile.
Observation MidGameObs(CardSet hand, std::initializer_list<const char*> table,
                       int trick_number, bool hearts_broken) {
  const int hand_size = kNumTricks + 1 - trick_number;
  REQUIRE(hand.Count() == hand_size);
  const int n_table = static_cast<int>(table.size());
  const int observer = n_table;  // seats 0..n_table-1 already played

  std::array<CardSet, 4> hands{};
  int seat = 0;
  hands[observer] = hand;
  CardSet used = hand;
  for (const char* name : table) {
    // The leaders' played cards start in their hands and get applied below.
    hands[seat].Add(Named(name));
    used.Add(Named(name));
    ++seat;
  }
  // Pad every hand to hand_size with filler cards nobody else holds, then
  // park the rest.
  std::array<CardSet, 4> collected{};
  for (int i = 0; i < kNumCards; ++i) {
    Card card(i);
    if (used.Contains(card)) continue;
    bool placed = false;
    for (int s = 0; s < kNumSeats && !placed; ++s) {
      if (s != observer && hands[s].Count() < hand_size) {
        hands[s].Add(card);
        placed = true;
      }
    }
    if (!placed) collected[0].Add(card);
    used.Add(card);
  }

  GameState state = GameState::Resume(hands, /*leader=*/0, trick_number,
                                      hearts_broken, collected);
  for (const char* name : table) state.ApplyAction(Named(name));
  REQUIRE(state.to_act() == observer);
  return EncodeObservation(state, observer);
}

TEST_CASE("random policy: always legal, seed-deterministic, roughly uniform") {
  RandomPolicy random;
  Rng data_rng(17);
  std::map<int, int> opening_counts;

  for (int round = 0; round < 300; ++round) {
    GameState state = GameState::NewGame(static_cast<uint64_t>(round));
    Rng rng_a(round);
    Rng rng_b(round);
    while (!state.terminal()) {
      Observation obs = EncodeObservation(state, state.to_act());
      Card a = random.Act(obs, rng_a);
      Card b = random.Act(obs, rng_b);
      CHECK(a == b);  // same seed, same observation stream, same cards
      CHECK(obs.mask.Contains(a));
      if (obs.mask.Count() > 1 && state.trick_number() == 2) {
        opening_counts[a.index() % 4] += 1;
      }
      state.ApplyAction(PickUniform(obs.mask, data_rng));
    }
  }
  CHECK(opening_counts.size() > 1);  // it does spread its choices
}

TEST_CASE("rule-based: first trick sheds the highest legal card") {
  // Following clubs on the first trick with QC as the top club.
  std::array<CardSet, 4> hands = {
      FromNames({"2C", "3D", "4D", "5D", "6D", "7D", "8D", "9D", "TD", "JD",
                 "QD", "KD", "AD"}),
      FromNames({"5C", "TC", "QC", "2S", "3S", "4S", "5S", "6S", "7S", "8S",
                 "9S", "TS", "JS"}),
      FromNames({"3C", "4C", "6C", "7C", "8C", "9C", "JC", "KC", "AC", "QS",
                 "KS", "AS", "2D"}),
      FromNames({"2H", "3H", "4H", "5H", "6H", "7H", "8H", "9H", "TH", "JH",
                 "QH", "KH", "AH"})};
  GameState state = GameState::FromDeal(hands);
  RuleBasedPolicy rule;
  Rng rng(1);

  // Seat 0 leads the two of clubs (the only legal card).
  CHECK(rule.Act(EncodeObservation(state, 0), rng) == kTwoOfClubs);
  state.ApplyAction(kTwoOfClubs);

  // Seat 1 follows with its highest club.
  CHECK(rule.Act(EncodeObservation(state, 1), rng) == Named("QC"));
  state.ApplyAction(Named("QC"));
  state.ApplyAction(Named("AC"));

  // Seat 3 is void: the whole hand is hearts, but penalty cards are barred
  // on the first trick only when something else exists; here nothing else
  // does, so the mask is the full hand and the policy sheds its highest.
  CHECK(rule.Act(EncodeObservation(state, 3), rng) == Named("AH"));
}

TEST_CASE("rule-based: leads its lowest card, rank before suit") {
  Rng rng(1);
  RuleBasedPolicy rule;
  // 2S is lower than 3C in rank-major order.
  Observation obs = MidGameObs(FromNames({"2S", "3C", "9D", "9S"}), {},
                               /*trick_number=*/10, /*hearts_broken=*/true);
  CHECK(rule.Act(obs, rng) == Named("2S"));
}

TEST_CASE("rule-based: ducks just under the current winner when following") {
  Rng rng(1);
  RuleBasedPolicy rule;

  SUBCASE("duck under the lead") {
    Observation obs = MidGameObs(FromNames({"2D", "8D", "KD", "AS"}), {"9D"},
                                 /*trick_number=*/10, true);
    CHECK(rule.Act(obs, rng) == Named("8D"));
  }
  SUBCASE("duck under the highest card on the table, not just the lead") {
    Observation obs = MidGameObs(FromNames({"6D", "TD", "QD", "AC"}),
                                 {"5D", "KD"}, /*trick_number=*/10, true);
    CHECK(rule.Act(obs, rng) == Named("QD"));
  }
  SUBCASE("cannot duck: plays the lowest of the suit") {
    Observation obs = MidGameObs(FromNames({"TD", "KD", "AH", "2H"}), {"9D"},
                                 /*trick_number=*/10, true);
    CHECK(rule.Act(obs, rng) == Named("TD"));
  }
}

TEST_CASE("rule-based: void order is queen, high heart, high card") {
  Rng rng(1);
  RuleBasedPolicy rule;

  SUBCASE("queen of spades first") {
    Observation obs = MidGameObs(FromNames({"QS", "AH", "3C", "2S"}), {"9D"},
                                 /*trick_number=*/10, true);
    CHECK(rule.Act(obs, rng) == kQueenOfSpades);
  }
  SUBCASE("then the highest heart") {
    Observation obs = MidGameObs(FromNames({"KH", "AH", "3C", "2S"}), {"9D"},
                                 /*trick_number=*/10, true);
    CHECK(rule.Act(obs, rng) == Named("AH"));
  }
  SUBCASE("otherwise the highest card") {
    Observation obs = MidGameObs(FromNames({"KC", "AS", "3C", "2S"}), {"9D"},
                                 /*trick_number=*/10, true);
    CHECK(rule.Act(obs, rng) == Named("AS"));
  }
}

TEST_CASE("rule-based: pure function of the observation") {
  RuleBasedPolicy rule;
  Rng rng_a(1);
  Rng rng_b(2);
  for (uint64_t seed = 0; seed < 100; ++seed) {
    GameState state = GameState::NewGame(seed);
    Rng driver(seed);
    while (!state.terminal()) {
      Observation obs = EncodeObservation(state, state.to_act());
      Card a = rule.Act(obs, rng_a);
      Card b = rule.Act(obs, rng_b);  // the rng must not matter
      CHECK(a == b);
      CHECK(obs.mask.Contains(a));
      state.ApplyAction(PickUniform(obs.mask, driver));
    }
  }
}

TEST_CASE("policy specs resolve or throw") {
  CHECK(MakePolicy("random")->name() == "random");
  CHECK(MakePolicy("rule")->name() == "rule");
  CHECK_THROWS_AS((void)MakePolicy("clever"), std::runtime_error);
  CHECK_THROWS_AS((void)MakePolicy("weights:/no/such/file.json"),
                  std::runtime_error);
}

}  // namespace
}  // namespace hearts
