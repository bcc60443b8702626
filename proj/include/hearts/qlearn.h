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

#ifndef HEARTS_QLEARN_H_
#define HEARTS_QLEARN_H_

#include <string>
#include <vector>

#include "hearts/features.h"
#include "hearts/policy.h"
#include "hearts/rules.h"

namespace hearts {

// Linear from eps_start at game 0 to eps_end at half the run, constant
// afterwards.
struct EpsilonSchedule {
  double start = 0.5;
  double end = 0.05;

  double At(long long game, long long total_games) const;
};

struct TrainConfig {
  long long games = 100000;
  double alpha = 0.01;
  double gamma = 1.0;
  EpsilonSchedule epsilon;
  std::array<std::string, 3> opponents = {"random", "random", "random"};
  uint64_t seed = 1;
  std::string shaper = "default";
  double illegal_penalty = 1.0;
  RulesConfig rules;
  long long curve_window = 1000;
};

struct LinearQWeights {
  std::vector<double> w = std::vector<double>(kNumFeatures, 0.0);
  TrainConfig config;
};

// One Q-learning transition for the acting seat: features taken, reward
// accrued until its next decision, and the feature sets of the legal
// follow-up actions (empty when terminal).
struct Transition {
  Features phi;
  double reward = 0.0;
  std::vector<Features> next_legal;
  bool terminal = false;
};

// Semi-gradient update  w += alpha * delta * phi  with
// delta = r + gamma * max_a' w.phi' * (1 - terminal) - w.phi.
// Throws std::runtime_error when the update would leave finite range.
void TdUpdate(std::vector<double>& w, const Transition& t, double alpha,
              double gamma);

struct CurvePoint {
  long long games_played;       // window end, 1-based
  double mean_adjusted_score;   // learner's mean over the window
};

struct TrainResult {
  LinearQWeights weights;
  std::vector<CurvePoint> curve;
};

// Epsilon-greedy linear Q-learning: one learning seat against three fixed
// opponents, seats rotated cyclically per game. Deterministic under a fixed
// config.
TrainResult TrainSelfplay(const TrainConfig& config);

// Greedy (or epsilon-greedy) player over learned weights. Ties in the
// action values break toward the lowest card index.
class GreedyQPolicy : public Policy {
 public:
  // Throws std::invalid_argument on a wrong weight dimension.
  explicit GreedyQPolicy(LinearQWeights weights, double epsilon = 0.0);

  Card Act(const Observation& obs, Rng& rng) const override;
  std::string name() const override { return "greedy_q"; }

 private:
  LinearQWeights weights_;
  double epsilon_;
};

// Versioned JSON container with the weight vector and the config that
// produced it.
void SaveWeights(const std::string& path, const LinearQWeights& weights);
LinearQWeights LoadWeights(const std::string& path);

void SaveCurveCsv(const std::string& path,
                  const std::vector<CurvePoint>& curve);

}  // namespace hearts

#endif  // HEARTS_QLEARN_H_
