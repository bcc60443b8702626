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

#ifndef HEARTS_GAME_H_
#define HEARTS_GAME_H_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hearts/card.h"
#include "hearts/rules.h"

namespace hearts {

// Thrown when an operation is called outside its contract (acting on a
// terminal state, playing an illegal card, restoring an inconsistent deal).
// Legality of remote or learning agents is enforced one layer up; reaching
// this from there is a bug.
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct Play {
  int seat;
  Card card;
};

// Emitted when the fourth card of a trick lands.
struct TrickEvent {
  int winner = 0;
  int penalty_points = 0;
  std::array<Play, 4> plays{Play{0, Card(0)}, Play{0, Card(0)},
                            Play{0, Card(0)}, Play{0, Card(0)}};
};

struct Scores {
  std::array<int, 4> raw{};
  std::array<int, 4> adjusted{};
};

// Ascending competition ranking: ties share the better rank, the next
// rank skips accordingly. (0,26,26,26) -> (1,2,2,2).
std::array<int, 4> Placements(const std::array<int, 4>& adjusted);

// Authoritative state of one four-player game. Pure value type: freely
// copyable, no hidden shared state, deterministic under equal inputs.
class GameState {
 public:
  // Deals 13 cards to each seat from a seeded uniform shuffle. The holder
  // of the two of clubs acts first.
  static GameState NewGame(uint64_t seed, const RulesConfig& rules = {});

  // Starts a game from a fixed full deal (four disjoint 13-card hands).
  static GameState FromDeal(const std::array<CardSet, 4>& hands,
                            const RulesConfig& rules = {});

  // Restores a mid-game position: equal-sized hands at the start of a
  // trick, every card not in a hand assigned to some collected pile.
  static GameState Resume(const std::array<CardSet, 4>& hands, int leader,
                          int trick_number, bool hearts_broken,
                          const std::array<CardSet, 4>& collected,
                          const RulesConfig& rules = {});

  // Mask of cards the seat to act may play. See the rule ladder in the
  // implementation; never empty for a non-terminal state.
  ActionMask LegalActions() const;

  // Plays a card for the seat to act. Returns the trick outcome when this
  // play completes a trick. The card must be legal.
  std::optional<TrickEvent> ApplyAction(Card card);

  // Raw penalties per seat plus the moon-adjusted scores. Terminal only.
  Scores FinalScores() const;

  bool terminal() const { return trick_number_ > kNumTricks; }
  int trick_number() const { return trick_number_; }
  int to_act() const { return to_act_; }
  bool hearts_broken() const { return hearts_broken_; }
  std::optional<Suit> lead_suit() const { return lead_suit_; }
  const CardSet& hand(int seat) const { return hands_[seat]; }
  const CardSet& collected(int seat) const { return collected_[seat]; }
  const std::vector<Play>& current_trick() const { return current_trick_; }
  const RulesConfig& rules() const { return rules_; }

 private:
  GameState() = default;

  std::array<CardSet, 4> hands_;
  std::array<CardSet, 4> collected_;
  std::vector<Play> current_trick_;
  std::optional<Suit> lead_suit_;
  int trick_number_ = 1;
  int to_act_ = 0;
  bool hearts_broken_ = false;
  RulesConfig rules_;
};

}  // namespace hearts

#endif  // HEARTS_GAME_H_
