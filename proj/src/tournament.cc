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

#include "hearts/tournament.h"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "hearts/json.h"

namespace hearts {
namespace {

constexpr uint64_t kRoundSeedStream = 0x70a2;
constexpr uint64_t kTiebreakStream = 0x7b3a;
constexpr int kBracketSize = 8;

TournamentRound PlayRound(const std::string& name, int round_index,
                          const std::array<int, 4>& slots,
                          const std::vector<Entrant*>& all,
                          const TournamentConfig& config) {
  TournamentRound round;
  round.name = name;
  round.entrant_indices = slots;

  TableConfig table = config.table;
  table.master_seed =
      DeriveSeed(config.table.master_seed, kRoundSeedStream, round_index);

  std::array<Entrant*, 4> seats;
  for (int i = 0; i < 4; ++i) seats[i] = all[slots[i]];
  round.result = RunTable(seats, table);
  round.ranking = RankEntrants(
      round.result,
      DeriveSeed(config.table.master_seed, kTiebreakStream, round_index));
  return round;
}

}  // namespace

std::array<int, 4> RankEntrants(const TableResult& result,
                                uint64_t tiebreak_seed) {
  struct Key {
    long long total;
    long long firsts;
    uint64_t coin;
    int slot;
  };
  std::array<Key, 4> keys;
  for (int i = 0; i < 4; ++i) {
    keys[i] = Key{result.entrants[i].total_adjusted,
                  result.entrants[i].placements[0],
                  DeriveSeed(tiebreak_seed, i), i};
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.total != b.total) return a.total < b.total;
    if (a.firsts != b.firsts) return a.firsts > b.firsts;
    if (a.coin != b.coin) return a.coin < b.coin;
    return a.slot < b.slot;
  });
  std::array<int, 4> order;
  for (int i = 0; i < 4; ++i) order[i] = keys[i].slot;
  return order;
}

TournamentResult RunTournament(const std::vector<Entrant*>& entrants,
                               const TournamentConfig& config) {
  if (entrants.empty() || entrants.size() > kBracketSize) {
    throw std::invalid_argument("tournament: need 1 to 8 entrants");
  }
  for (Entrant* e : entrants) {
    if (e == nullptr) throw std::invalid_argument("tournament: null entrant");
  }

  std::vector<Entrant*> all = entrants;
  std::vector<std::unique_ptr<Entrant>> pads;
  while (all.size() < kBracketSize) {
    auto bot = std::make_unique<LocalEntrant>(
        "pad-bot-" + std::to_string(pads.size() + 1),
        std::make_shared<RandomPolicy>(), /*is_bot=*/true);
    all.push_back(bot.get());
    pads.push_back(std::move(bot));
  }

  TournamentResult result;
  result.n_padded_bots = static_cast<int>(pads.size());
  for (Entrant* e : all) result.entrant_names.push_back(e->name());

  TournamentRound semi_a =
      PlayRound("semifinal_a", 0, {0, 1, 2, 3}, all, config);
  TournamentRound semi_b =
      PlayRound("semifinal_b", 1, {4, 5, 6, 7}, all, config);

  // Winners first so each semifinal's top seed starts the final at an
  // opposite seat from the other's.
  std::array<int, 4> final_slots = {
      semi_a.entrant_indices[semi_a.ranking[0]],
      semi_b.entrant_indices[semi_b.ranking[0]],
      semi_a.entrant_indices[semi_a.ranking[1]],
      semi_b.entrant_indices[semi_b.ranking[1]]};
  TournamentRound final_round = PlayRound("final", 2, final_slots, all,
                                          config);

  for (int i = 0; i < 4; ++i) {
    result.final_order[i] = final_slots[final_round.ranking[i]];
  }
  result.champion = result.entrant_names[result.final_order[0]];
  result.rounds.push_back(std::move(semi_a));
  result.rounds.push_back(std::move(semi_b));
  result.rounds.push_back(std::move(final_round));
  return result;
}

std::string TournamentJsonLine(const TournamentResult& result) {
  Json j{{"type", "tournament_result"},
         {"entrants", result.entrant_names},
         {"n_padded_bots", result.n_padded_bots},
         {"final_order", result.final_order},
         {"champion", result.champion}};
  return j.dump();
}

}  // namespace hearts
