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

#ifndef HEARTS_EVALUATE_H_
#define HEARTS_EVALUATE_H_

#include <array>
#include <string>

#include "hearts/policy.h"
#include "hearts/rules.h"

namespace hearts {

struct EvalConfig {
  long long games = 1000;
  uint64_t seed = 7;
  // Cycle the policy -> seat assignment every game so no policy keeps a
  // positional (dis)advantage: policy p sits at seat (p + game) % 4.
  bool rotate_seats = true;
  RulesConfig rules;
};

struct PolicyEvalStats {
  std::string name;
  double mean_adjusted = 0.0;
  // Standard error of the mean (sample standard deviation / sqrt(n)).
  double stderr_adjusted = 0.0;
  // placements[k] counts games finishing in place k+1; ties share the
  // better place, so a swept game can produce three second places.
  std::array<long long, 4> placements{};
  long long illegal_actions = 0;
};

struct EvalReport {
  long long games = 0;
  std::array<PolicyEvalStats, 4> policies;
  // Mean adjusted score by physical seat, pooled over all policies.
  std::array<double, 4> seat_mean_adjusted{};
};

// Plays `config.games` full games sequentially and aggregates adjusted
// scores per policy. Deterministic for a fixed config.
EvalReport Evaluate(const std::array<const Policy*, 4>& policies,
                    const EvalConfig& config = {});

// Formats the report as a small fixed-width table, one row per policy.
std::string FormatEvalReport(const EvalReport& report);

}  // namespace hearts

#endif  // HEARTS_EVALUATE_H_
