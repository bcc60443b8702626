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

#include "hearts/evaluate.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <tuple>

#include "hearts/env.h"

namespace hearts {
namespace {

constexpr uint64_t kDealStream = 0xe7a1;
constexpr uint64_t kActStream = 0xac70;

}  // namespace

EvalReport Evaluate(const std::array<const Policy*, 4>& policies,
                    const EvalConfig& config) {
  if (config.games <= 0) {
    throw std::invalid_argument("eval: games must be positive");
  }
  for (const Policy* policy : policies) {
    if (policy == nullptr) throw std::invalid_argument("eval: null policy");
  }

  EvalReport report;
  report.games = config.games;
  for (int p = 0; p < kNumSeats; ++p) {
    report.policies[p].name = policies[p]->name();
  }
  // Welford accumulators per policy.
  std::array<double, 4> mean{};
  std::array<double, 4> m2{};
  std::array<double, 4> seat_sum{};

  for (long long game = 0; game < config.games; ++game) {
    HeartsEnv env;
    auto [seat, obs] = env.Reset(DeriveSeed(config.seed, kDealStream, game),
                                 config.rules);
    std::array<Rng, 4> rngs = {
        Rng(DeriveSeed(config.seed, kActStream, game * 4 + 0)),
        Rng(DeriveSeed(config.seed, kActStream, game * 4 + 1)),
        Rng(DeriveSeed(config.seed, kActStream, game * 4 + 2)),
        Rng(DeriveSeed(config.seed, kActStream, game * 4 + 3))};

    // policy_at[s] = index of the policy playing physical seat s.
    std::array<int, 4> policy_at;
    for (int p = 0; p < kNumSeats; ++p) {
      int s = config.rotate_seats ? static_cast<int>((p + game) % kNumSeats)
                                  : p;
      policy_at[s] = p;
    }

    std::optional<Scores> scores;
    while (true) {
      int p = policy_at[seat];
      Card action = policies[p]->Act(obs, rngs[seat]);
      StepOutcome out = env.Step(action);
      if (out.illegal_substituted[seat]) {
        report.policies[p].illegal_actions += 1;
      }
      if (out.done) {
        scores = out.final_scores;
        break;
      }
      std::tie(seat, obs) = *out.next;
    }

    std::array<int, 4> places = Placements(scores->adjusted);
    for (int s = 0; s < kNumSeats; ++s) {
      int p = policy_at[s];
      double x = scores->adjusted[s];
      double delta = x - mean[p];
      mean[p] += delta / static_cast<double>(game + 1);
      m2[p] += delta * (x - mean[p]);
      report.policies[p].placements[places[s] - 1] += 1;
      seat_sum[s] += x;
    }
  }

  for (int p = 0; p < kNumSeats; ++p) {
    report.policies[p].mean_adjusted = mean[p];
    if (config.games > 1) {
      double variance = m2[p] / static_cast<double>(config.games - 1);
      report.policies[p].stderr_adjusted =
          std::sqrt(variance / static_cast<double>(config.games));
    }
    report.seat_mean_adjusted[p] =
        seat_sum[p] / static_cast<double>(config.games);
  }
  return report;
}

std::string FormatEvalReport(const EvalReport& report) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-12s %10s %8s %22s %8s\n", "policy",
                "mean", "stderr", "placements 1st..4th", "illegal");
  out += line;
  for (const PolicyEvalStats& s : report.policies) {
    std::snprintf(line, sizeof(line),
                  "%-12s %10.3f %8.3f %5lld %5lld %5lld %5lld %8lld\n",
                  s.name.c_str(), s.mean_adjusted, s.stderr_adjusted,
                  s.placements[0], s.placements[1], s.placements[2],
                  s.placements[3], s.illegal_actions);
    out += line;
  }
  std::snprintf(line, sizeof(line),
                "seat means: %.3f %.3f %.3f %.3f over %lld games\n",
                report.seat_mean_adjusted[0], report.seat_mean_adjusted[1],
                report.seat_mean_adjusted[2], report.seat_mean_adjusted[3],
                report.games);
  out += line;
  return out;
}

}  // namespace hearts
