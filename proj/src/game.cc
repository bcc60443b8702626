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

#include "hearts/game.h"

#include <algorithm>
#include <numeric>

#include "hearts/rng.h"

namespace hearts {

namespace {

void CheckContract(bool cond, const char* what) {
  if (!cond) throw ContractViolation(what);
}

}  // namespace

std::string MoonRuleName(MoonRule rule) {
  return rule == MoonRule::kOthersPlus26 ? "others_plus_26" : "off";
}

std::optional<MoonRule> MoonRuleFromName(const std::string& name) {
  if (name == "others_plus_26") return MoonRule::kOthersPlus26;
  if (name == "off") return MoonRule::kOff;
  return std::nullopt;
}

std::array<int, 4> Placements(const std::array<int, 4>& adjusted) {
  std::array<int, 4> ranks;
  for (int i = 0; i < 4; ++i) {
    int better = 0;
    for (int j = 0; j < 4; ++j) {
      if (adjusted[j] < adjusted[i]) ++better;
    }
    ranks[i] = better + 1;
  }
  return ranks;
}

GameState GameState::NewGame(uint64_t seed, const RulesConfig& rules) {
  std::vector<int> deck(kNumCards);
  std::iota(deck.begin(), deck.end(), 0);
  Rng rng(seed);
  rng.Shuffle(deck);

  std::array<CardSet, 4> hands;
  for (int i = 0; i < kNumCards; ++i) {
    hands[i / kNumTricks].Add(Card(deck[i]));
  }
  return FromDeal(hands, rules);
}

GameState GameState::FromDeal(const std::array<CardSet, 4>& hands,
                              const RulesConfig& rules) {
  CardSet all;
  for (const CardSet& h : hands) {
    CheckContract(h.Count() == kNumTricks, "deal: each hand must hold 13");
    all = all | h;
  }
  CheckContract(all == CardSet::Full(), "deal: hands must partition the deck");

  GameState state;
  state.hands_ = hands;
  state.rules_ = rules;
  state.current_trick_.reserve(4);
  for (int seat = 0; seat < kNumSeats; ++seat) {
    if (hands[seat].Contains(kTwoOfClubs)) state.to_act_ = seat;
  }
  return state;
}

GameState GameState::Resume(const std::array<CardSet, 4>& hands, int leader,
                            int trick_number, bool hearts_broken,
                            const std::array<CardSet, 4>& collected,
                            const RulesConfig& rules) {
  CheckContract(trick_number >= 1 && trick_number <= kNumTricks,
                "resume: trick_number out of range");
  CheckContract(leader >= 0 && leader < kNumSeats, "resume: bad leader");
  const int hand_size = kNumTricks + 1 - trick_number;
  CardSet all;
  int total = 0;
  for (int seat = 0; seat < kNumSeats; ++seat) {
    CheckContract(hands[seat].Count() == hand_size,
                  "resume: hand sizes must match the trick number");
    all = all | hands[seat] | collected[seat];
    total += hands[seat].Count() + collected[seat].Count();
  }
  CheckContract(total == kNumCards && all == CardSet::Full(),
                "resume: hands and collected piles must partition the deck");

  GameState state;
  state.hands_ = hands;
  state.collected_ = collected;
  state.trick_number_ = trick_number;
  state.to_act_ = leader;
  state.hearts_broken_ = hearts_broken;
  state.rules_ = rules;
  state.current_trick_.reserve(4);
  return state;
}

// The legality ladder, first matching rule wins:
//   1. first trick, leading: the two of clubs only;
//   2. holding the lead suit: those cards only;
//   3. first trick, void in clubs: no penalty cards, unless the hand is
//      nothing but penalty cards (then the whole hand -- the mask may
//      never be empty; the rules flag covers the non-degenerate reading);
//   4. leading before hearts are broken: non-hearts, unless the hand is
//      all hearts;
//   5. anything in hand.
ActionMask GameState::LegalActions() const {
  CheckContract(!terminal(), "legal_actions: game is over");
  const CardSet& hand = hands_[to_act_];
  const bool leading = current_trick_.empty();

  if (trick_number_ == 1 && leading) {
    ActionMask mask;
    mask.Add(kTwoOfClubs);
    return mask;
  }
  if (!leading) {
    CardSet follow = hand.OfSuit(*lead_suit_);
    if (!follow.Empty()) return follow;
    if (trick_number_ == 1) {
      CardSet safe = hand & ~PenaltyCards();
      if (!safe.Empty()) return safe;
      return hand;
    }
    return hand;
  }
  if (!hearts_broken_) {
    CardSet non_hearts = hand & ~CardSet::Full().OfSuit(Suit::kHearts);
    if (!non_hearts.Empty()) return non_hearts;
  }
  return hand;
}

std::optional<TrickEvent> GameState::ApplyAction(Card card) {
  CheckContract(LegalActions().Contains(card), "apply_action: illegal card");

  hands_[to_act_].Remove(card);
  if (current_trick_.empty()) lead_suit_ = card.suit();
  current_trick_.push_back(Play{to_act_, card});

  if (current_trick_.size() < 4) {
    to_act_ = (to_act_ + 1) % kNumSeats;
    return std::nullopt;
  }

  // Trick complete: highest card of the lead suit takes it.
  TrickEvent event;
  int best_rank = -1;
  bool any_heart = false;
  bool queen_played = false;
  for (size_t i = 0; i < 4; ++i) {
    const Play& play = current_trick_[i];
    event.plays[i] = play;
    event.penalty_points += CardPenalty(play.card);
    if (play.card.suit() == *lead_suit_ && play.card.rank() > best_rank) {
      best_rank = play.card.rank();
      event.winner = play.seat;
    }
    if (play.card.suit() == Suit::kHearts) any_heart = true;
    if (play.card == kQueenOfSpades) queen_played = true;
  }

  for (const Play& play : current_trick_) {
    collected_[event.winner].Add(play.card);
  }
  if (any_heart || (queen_played && rules_.queen_breaks_hearts)) {
    hearts_broken_ = true;
  }
  current_trick_.clear();
  lead_suit_.reset();
  ++trick_number_;
  to_act_ = event.winner;
  return event;
}

Scores GameState::FinalScores() const {
  CheckContract(terminal(), "final_scores: game still in progress");
  Scores scores;
  for (int seat = 0; seat < kNumSeats; ++seat) {
    int raw = 0;
    for (Card c : collected_[seat]) raw += CardPenalty(c);
    scores.raw[seat] = raw;
  }
  scores.adjusted = scores.raw;
  if (rules_.moon_rule == MoonRule::kOthersPlus26) {
    for (int seat = 0; seat < kNumSeats; ++seat) {
      if (scores.raw[seat] == kTotalPenalty) {
        for (int j = 0; j < kNumSeats; ++j) {
          scores.adjusted[j] = j == seat ? 0 : kTotalPenalty;
        }
        break;
      }
    }
  }
  return scores;
}

}  // namespace hearts
