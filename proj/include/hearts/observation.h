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

#ifndef HEARTS_OBSERVATION_H_
#define HEARTS_OBSERVATION_H_

#include <array>
#include <cstdint>
#include <optional>

#include "hearts/game.h"

namespace hearts {

// Per-card categorical codes in an observation. Table and collected codes
// are offset by the relative seat (seat - observer, mod 4), so the encoding
// is seat-invariant: offset 0 is always the observer.
inline constexpr uint8_t kCardUnknown = 0;
inline constexpr uint8_t kCardOwnHand = 1;
inline constexpr uint8_t kCardOnTableBase = 2;    // 2..5
inline constexpr uint8_t kCardCollectedBase = 6;  // 6..9
inline constexpr int kNumCardCodes = 10;

inline constexpr int RelativeOffset(int seat, int observer) {
  return (seat - observer + kNumSeats) % kNumSeats;
}

// One seat's partial-information view. Cards in other players' hands stay
// kCardUnknown; the mask is the legality mask when the observer is the seat
// to act, empty otherwise.
struct Observation {
  std::array<uint8_t, kNumCards> card_states{};
  double trick_number_normalized = 0.0;  // trick_number / 13
  int hearts_broken = 0;
  int penalty_on_table = 0;
  ActionMask mask;
};

Observation EncodeObservation(const GameState& state, int observer);

// Number of cards currently on the table, recovered from the codes.
int CardsOnTable(const Observation& obs);

// The card that led the current trick, reconstructed from the observation
// alone: with m cards on the table and the observer to act, the leader sat
// at relative offset (4 - m) % 4. Empty when the observer leads.
std::optional<Card> TrickLeadCard(const Observation& obs);

}  // namespace hearts

#endif  // HEARTS_OBSERVATION_H_
