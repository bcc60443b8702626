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

#include "hearts/card.h"

namespace hearts {

namespace {
constexpr char kRankChars[] = "23456789TJQKA";
constexpr char kSuitChars[] = "CDHS";
}  // namespace

char SuitChar(Suit s) { return kSuitChars[static_cast<int>(s)]; }

std::string CardName(Card c) {
  std::string name(2, '?');
  name[0] = kRankChars[c.rank() - 2];
  name[1] = kSuitChars[static_cast<int>(c.suit())];
  return name;
}

std::optional<Card> CardFromName(std::string_view name) {
  if (name.size() != 2) return std::nullopt;
  int rank = -1;
  for (int i = 0; i < kNumRanks; ++i) {
    if (kRankChars[i] == name[0]) rank = i + 2;
  }
  int suit = -1;
  for (int i = 0; i < kNumSuits; ++i) {
    if (kSuitChars[i] == name[1]) suit = i;
  }
  if (rank < 0 || suit < 0) return std::nullopt;
  return Card(static_cast<Suit>(suit), rank);
}

std::vector<Card> CardSet::Cards() const {
  std::vector<Card> out;
  out.reserve(Count());
  for (Card c : *this) out.push_back(c);
  return out;
}

}  // namespace hearts
