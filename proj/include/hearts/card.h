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

#ifndef HEARTS_CARD_H_
#define HEARTS_CARD_H_

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hearts {

inline constexpr int kNumCards = 52;
inline constexpr int kNumSuits = 4;
inline constexpr int kNumRanks = 13;
inline constexpr int kNumSeats = 4;
inline constexpr int kNumTricks = 13;
inline constexpr int kTotalPenalty = 26;

// Suit order fixes the canonical card index: index = suit * 13 + rank - 2.
enum class Suit : int { kClubs = 0, kDiamonds = 1, kHearts = 2, kSpades = 3 };

// A single card, identified by its index 0..51. Ranks run 2..14 with ace
// high, so index 0 is the two of clubs and index 51 the ace of spades.
class Card {
 public:
  constexpr explicit Card(int index) : index_(index) {}
  constexpr Card(Suit suit, int rank)
      : index_(static_cast<int>(suit) * kNumRanks + rank - 2) {}

  constexpr int index() const { return index_; }
  constexpr Suit suit() const { return static_cast<Suit>(index_ / kNumRanks); }
  constexpr int rank() const { return index_ % kNumRanks + 2; }

  friend constexpr bool operator==(Card a, Card b) {
    return a.index_ == b.index_;
  }
  friend constexpr bool operator!=(Card a, Card b) {
    return a.index_ != b.index_;
  }
  friend constexpr bool operator<(Card a, Card b) {
    return a.index_ < b.index_;
  }

 private:
  int index_;
};

inline constexpr Card kTwoOfClubs{0};
inline constexpr Card kQueenOfSpades{Suit::kSpades, 12};

// 1 per heart, 13 for the queen of spades, 0 otherwise.
constexpr int CardPenalty(Card c) {
  if (c.suit() == Suit::kHearts) return 1;
  if (c == kQueenOfSpades) return 13;
  return 0;
}

// Two-character text name, rank then suit: "2C", "TD", "QS", "AH".
std::string CardName(Card c);
std::optional<Card> CardFromName(std::string_view name);
char SuitChar(Suit s);

// Set of cards as a 52-bit mask; bit i corresponds to card index i.
class CardSet {
 public:
  constexpr CardSet() : bits_(0) {}
  constexpr explicit CardSet(uint64_t bits) : bits_(bits & kAllMask) {}

  static constexpr CardSet Full() { return CardSet(kAllMask); }

  constexpr uint64_t bits() const { return bits_; }
  constexpr bool Empty() const { return bits_ == 0; }
  constexpr int Count() const { return std::popcount(bits_); }
  constexpr bool Contains(Card c) const {
    return (bits_ >> c.index()) & 1ULL;
  }

  constexpr void Add(Card c) { bits_ |= 1ULL << c.index(); }
  constexpr void Remove(Card c) { bits_ &= ~(1ULL << c.index()); }

  // Cards of one suit, 13 consecutive bits.
  constexpr CardSet OfSuit(Suit s) const {
    return CardSet(bits_ & (kSuitMask << (static_cast<int>(s) * kNumRanks)));
  }

  // Lowest-index card; set must be nonempty.
  constexpr Card First() const { return Card(std::countr_zero(bits_)); }

  std::vector<Card> Cards() const;

  friend constexpr CardSet operator|(CardSet a, CardSet b) {
    return CardSet(a.bits_ | b.bits_);
  }
  friend constexpr CardSet operator&(CardSet a, CardSet b) {
    return CardSet(a.bits_ & b.bits_);
  }
  friend constexpr CardSet operator~(CardSet a) {
    return CardSet(~a.bits_ & kAllMask);
  }
  friend constexpr bool operator==(CardSet a, CardSet b) {
    return a.bits_ == b.bits_;
  }

  class Iterator {
   public:
    constexpr explicit Iterator(uint64_t bits) : bits_(bits) {}
    constexpr Card operator*() const { return Card(std::countr_zero(bits_)); }
    constexpr Iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    constexpr bool operator!=(const Iterator& o) const {
      return bits_ != o.bits_;
    }

   private:
    uint64_t bits_;
  };
  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

 private:
  static constexpr uint64_t kAllMask = (1ULL << kNumCards) - 1;
  static constexpr uint64_t kSuitMask = (1ULL << kNumRanks) - 1;

  uint64_t bits_;
};

// Hearts plus the queen of spades.
constexpr CardSet PenaltyCards() {
  CardSet s;
  for (int r = 2; r <= 14; ++r) s.Add(Card(Suit::kHearts, r));
  s.Add(kQueenOfSpades);
  return s;
}

// Legality mask for the seat to act: bit i set iff card i may be played.
using ActionMask = CardSet;

// Uniform pick among the set bits; mask must be nonempty.
template <typename RngT>
Card PickUniform(CardSet mask, RngT& rng) {
  int n = mask.Count();
  uint64_t k = rng.NextBelow(static_cast<uint64_t>(n));
  uint64_t bits = mask.bits();
  while (k--) bits &= bits - 1;
  return Card(std::countr_zero(bits));
}

}  // namespace hearts

#endif  // HEARTS_CARD_H_
