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

namespace hearts {

namespace {

// Rank-major order, suit C<D<H<S as tie-break.
int OrderKey(Card c) { return c.rank() * 4 + static_cast<int>(c.suit()); }

Card HighestOf(CardSet set) {
  Card best = set.First();
  for (Card c : set) {
    if (OrderKey(c) > OrderKey(best)) best = c;
  }
  return best;
}

Card LowestOf(CardSet set) {
  Card best = set.First();
  for (Card c : set) {
    if (OrderKey(c) < OrderKey(best)) best = c;
  }
  return best;
}

}  // namespace

Card RandomPolicy::Act(const Observation& obs, Rng& rng) const {
  return PickUniform(obs.mask, rng);
}

Card RuleBasedPolicy::Act(const Observation& obs, Rng&) const {
  const CardSet legal = obs.mask;
  const int trick_number =
      static_cast<int>(obs.trick_number_normalized * kNumTricks + 0.5);

  if (trick_number == 1) return HighestOf(legal);

  std::optional<Card> lead = TrickLeadCard(obs);
  if (!lead) return LowestOf(legal);

  const Suit lead_suit = lead->suit();
  CardSet follow = legal.OfSuit(lead_suit);
  if (!follow.Empty() && follow == legal) {
    // Following suit: find what currently wins, then duck just under it.
    int winning_rank = 0;
    for (int i = 0; i < kNumCards; ++i) {
      uint8_t code = obs.card_states[i];
      if (code >= kCardOnTableBase && code < kCardCollectedBase &&
          Card(i).suit() == lead_suit) {
        winning_rank = std::max(winning_rank, Card(i).rank());
      }
    }
    CardSet under;
    for (Card c : follow) {
      if (c.rank() < winning_rank) under.Add(c);
    }
    if (!under.Empty()) return HighestOf(under);
    return LowestOf(follow);
  }

  // Void in the lead suit: shed the queen, then high hearts, then the
  // highest card we are stuck with.
  if (legal.Contains(kQueenOfSpades)) return kQueenOfSpades;
  CardSet hearts = legal.OfSuit(Suit::kHearts);
  if (!hearts.Empty()) return HighestOf(hearts);
  return HighestOf(legal);
}

}  // namespace hearts
