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

#ifndef HEARTS_TOURNAMENT_H_
#define HEARTS_TOURNAMENT_H_

#include <string>
#include <vector>

#include "hearts/table.h"

namespace hearts {

// Knockout bracket: two semifinal tables of 4 feed one final table of 4.
// The entry list is padded to 8 with built-in random bots when shorter
// (flagged in the result); per-round seeds derive from the master seed, so
// a fixed config with deterministic entrants reproduces every transcript.

struct TournamentConfig {
  // Shared table settings; each round overrides master_seed with a value
  // derived from this one and the round index.
  TableConfig table;
};

struct TournamentRound {
  std::string name;  // "semifinal_a", "semifinal_b", "final"
  std::array<int, 4> entrant_indices;
  TableResult result;
  // All four table slots ranked best-first by the advance rule; the first
  // two advance from a semifinal.
  std::array<int, 4> ranking;
};

struct TournamentResult {
  std::vector<std::string> entrant_names;  // final list of 8, pads included
  int n_padded_bots = 0;
  std::vector<TournamentRound> rounds;  // semifinal_a, semifinal_b, final
  // Entrant indices in finishing order; [0] is the champion.
  std::array<int, 4> final_order{};
  std::string champion;
};

// Ranks a table's four slots best-first: lower total adjusted score, then
// more 1st-place finishes, then a coin flip drawn from tiebreak_seed (so
// re-runs agree). This is the advance rule for semifinals and the finishing
// order of the final.
std::array<int, 4> RankEntrants(const TableResult& result,
                                uint64_t tiebreak_seed);

// 1 to 8 entrants; pads to 8 with random bots. The final seats the
// semifinal winners first: [winner A, winner B, runner-up A, runner-up B].
TournamentResult RunTournament(const std::vector<Entrant*>& entrants,
                               const TournamentConfig& config);

// One-line JSON summary (champion, final order, entrants, padding) for
// results logs.
std::string TournamentJsonLine(const TournamentResult& result);

}  // namespace hearts

#endif  // HEARTS_TOURNAMENT_H_
