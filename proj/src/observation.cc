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

#include "hearts/observation.h"

namespace hearts {

Observation EncodeObservation(const GameState& state, int observer) {
  Observation obs;
  for (Card c : state.hand(observer)) {
    obs.card_states[c.index()] = kCardOwnHand;
  }
  for (const Play& play : state.current_trick()) {
    obs.card_states[play.card.index()] =
        kCardOnTableBase + RelativeOffset(play.seat, observer);
    obs.penalty_on_table += CardPenalty(play.card);
  }
  for (int seat = 0; seat < kNumSeats; ++seat) {
    uint8_t code = kCardCollectedBase + RelativeOffset(seat, observer);
    for (Card c : state.collected(seat)) {
      obs.card_states[c.index()] = code;
    }
  }
  obs.trick_number_normalized =
      static_cast<double>(state.trick_number()) / kNumTricks;
  obs.hearts_broken = state.hearts_broken() ? 1 : 0;
  if (!state.terminal() && state.to_act() == observer) {
    obs.mask = state.LegalActions();
  }
  return obs;
}

int CardsOnTable(const Observation& obs) {
  int count = 0;
  for (uint8_t code : obs.card_states) {
    if (code >= kCardOnTableBase && code < kCardCollectedBase) ++count;
  }
  return count;
}

std::optional<Card> TrickLeadCard(const Observation& obs) {
  int on_table = CardsOnTable(obs);
  if (on_table == 0) return std::nullopt;
  uint8_t lead_code = kCardOnTableBase + (kNumSeats - on_table) % kNumSeats;
  for (int i = 0; i < kNumCards; ++i) {
    if (obs.card_states[i] == lead_code) return Card(i);
  }
  return std::nullopt;
}

}  // namespace hearts
