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

#include "hearts/qlearn.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <tuple>

#include "hearts/env.h"
#include "hearts/json.h"

namespace hearts {
namespace {

// Distinct stream tags so the environment, the exploration draws, and the
// opponents never consume from the same generator.
constexpr uint64_t kDealStream = 0x1dea1;
constexpr uint64_t kExploreStream = 0x2e791;
constexpr uint64_t kOpponentStream = 0x3799e;

// Q(s, a) decomposes as w . phi_state(s) + w[action block] + w . scalars
// because the feature vector is a concatenation.  The state part is shared
// by every candidate action, so score actions with one dot product plus a
// single weight lookup instead of rebuilding the full feature vector.
double StatePartDot(const std::vector<double>& w, const Observation& obs) {
  double sum = 0.0;
  for (int card = 0; card < kNumCards; ++card) {
    int code = obs.card_states[card];
    if (code != kCardUnknown) sum += w[card * kNumCardCodes + code];
  }
  sum += w[kScalarFeatureBase + 0] * obs.trick_number_normalized;
  sum += w[kScalarFeatureBase + 1] * obs.hearts_broken;
  sum += w[kScalarFeatureBase + 2] * obs.penalty_on_table;
  return sum;
}

Card GreedyAction(const std::vector<double>& w, const Observation& obs) {
  // The state part is constant across actions, so the argmax only needs the
  // per-action weights.  Strict > keeps the lowest card index on ties.
  Card best = obs.mask.First();
  double best_q = -std::numeric_limits<double>::infinity();
  for (Card card : obs.mask) {
    double q = w[kActionFeatureBase + card.index()];
    if (q > best_q) {
      best_q = q;
      best = card;
    }
  }
  return best;
}

}  // namespace

double EpsilonSchedule::At(long long game, long long total_games) const {
  long long half = total_games / 2;
  if (half <= 0 || game >= half) return end;
  return start + (end - start) * static_cast<double>(game) /
                     static_cast<double>(half);
}

void TdUpdate(std::vector<double>& w, const Transition& t, double alpha,
              double gamma) {
  double target = t.reward;
  if (!t.terminal) {
    double best_next = -std::numeric_limits<double>::infinity();
    for (const Features& phi : t.next_legal) {
      best_next = std::max(best_next, Dot(w, phi));
    }
    if (!t.next_legal.empty()) target += gamma * best_next;
  }
  double delta = target - Dot(w, t.phi);
  if (!std::isfinite(delta)) {
    throw std::runtime_error(
        "q-learning update diverged (non-finite TD error); lower alpha");
  }
  AddScaled(w, t.phi, alpha * delta);
}

TrainResult TrainSelfplay(const TrainConfig& config) {
  if (config.games <= 0) {
    throw std::invalid_argument("train: games must be positive");
  }
  if (config.alpha <= 0.0) {
    throw std::invalid_argument("train: alpha must be positive");
  }
  auto shaper = MakeShaper(config.shaper, config.illegal_penalty);
  if (shaper == nullptr) {
    throw std::invalid_argument("train: unknown shaper " + config.shaper);
  }
  std::array<std::unique_ptr<Policy>, 3> opponents;
  for (int i = 0; i < 3; ++i) opponents[i] = MakePolicy(config.opponents[i]);

  TrainResult result;
  result.weights.config = config;
  std::vector<double>& w = result.weights.w;

  double window_sum = 0.0;
  long long window_count = 0;

  for (long long game = 0; game < config.games; ++game) {
    const double epsilon = config.epsilon.At(game, config.games);
    const int learner_seat = static_cast<int>(game % kNumSeats);

    HeartsEnv env;
    auto [seat, obs] = env.Reset(DeriveSeed(config.seed, kDealStream, game),
                                 config.rules, shaper);
    Rng explore_rng(DeriveSeed(config.seed, kExploreStream, game));
    Rng opponent_rng(DeriveSeed(config.seed, kOpponentStream, game));

    // One transition is open between consecutive learner decisions; rewards
    // emitted for the learner while opponents play accrue onto it.
    bool has_pending = false;
    Features pending_phi;
    double pending_reward = 0.0;

    while (true) {
      Card action = kTwoOfClubs;
      if (seat == learner_seat) {
        if (has_pending) {
          Transition t;
          t.phi = std::move(pending_phi);
          t.reward = pending_reward;
          for (Card card : obs.mask) {
            t.next_legal.push_back(ComputeFeatures(obs, card));
          }
          TdUpdate(w, t, config.alpha, config.gamma);
        }
        if (explore_rng.NextUnit() < epsilon) {
          action = PickUniform(obs.mask, explore_rng);
        } else {
          action = GreedyAction(w, obs);
        }
        pending_phi = ComputeFeatures(obs, action);
        pending_reward = 0.0;
        has_pending = true;
      } else {
        int opponent = (seat - learner_seat + kNumSeats) % kNumSeats - 1;
        action = opponents[opponent]->Act(obs, opponent_rng);
      }

      StepOutcome out = env.Step(action);
      for (const SeatReward& r : out.rewards) {
        if (r.seat == learner_seat) pending_reward += r.reward;
      }
      if (out.done) {
        Transition t;
        t.phi = std::move(pending_phi);
        t.reward = pending_reward;
        t.terminal = true;
        TdUpdate(w, t, config.alpha, config.gamma);
        window_sum += out.final_scores->adjusted[learner_seat];
        window_count += 1;
        break;
      }
      std::tie(seat, obs) = *out.next;
    }

    const bool window_full = window_count == config.curve_window;
    if (window_full || game + 1 == config.games) {
      result.curve.push_back(
          CurvePoint{game + 1, window_sum / static_cast<double>(window_count)});
      window_sum = 0.0;
      window_count = 0;
    }
  }
  return result;
}

GreedyQPolicy::GreedyQPolicy(LinearQWeights weights, double epsilon)
    : weights_(std::move(weights)), epsilon_(epsilon) {
  if (weights_.w.size() != static_cast<size_t>(kNumFeatures)) {
    throw std::invalid_argument("greedy_q: weight vector has wrong dimension");
  }
}

Card GreedyQPolicy::Act(const Observation& obs, Rng& rng) const {
  if (epsilon_ > 0.0 && rng.NextUnit() < epsilon_) {
    return PickUniform(obs.mask, rng);
  }
  return GreedyAction(weights_.w, obs);
}

void SaveWeights(const std::string& path, const LinearQWeights& weights) {
  Json j;
  j["version"] = 1;
  j["num_features"] = kNumFeatures;
  j["weights"] = weights.w;
  const TrainConfig& c = weights.config;
  j["config"] = Json{{"games", c.games},
                     {"alpha", c.alpha},
                     {"gamma", c.gamma},
                     {"epsilon_start", c.epsilon.start},
                     {"epsilon_end", c.epsilon.end},
                     {"opponents", c.opponents},
                     {"seed", c.seed},
                     {"shaper", c.shaper},
                     {"illegal_penalty", c.illegal_penalty},
                     {"rules", c.rules},
                     {"curve_window", c.curve_window}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write weights file: " + path);
  out << j.dump(2) << "\n";
}

LinearQWeights LoadWeights(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read weights file: " + path);
  Json j = Json::parse(in, nullptr, /*allow_exceptions=*/true);
  if (j.value("version", 0) != 1) {
    throw std::runtime_error("unsupported weights file version in " + path);
  }
  if (j.value("num_features", 0) != kNumFeatures) {
    throw std::runtime_error("weights file feature dimension mismatch in " +
                             path);
  }
  LinearQWeights weights;
  j.at("weights").get_to(weights.w);
  if (weights.w.size() != static_cast<size_t>(kNumFeatures)) {
    throw std::runtime_error("weights array has wrong length in " + path);
  }
  if (j.contains("config")) {
    const Json& c = j["config"];
    TrainConfig& t = weights.config;
    t.games = c.value("games", t.games);
    t.alpha = c.value("alpha", t.alpha);
    t.gamma = c.value("gamma", t.gamma);
    t.epsilon.start = c.value("epsilon_start", t.epsilon.start);
    t.epsilon.end = c.value("epsilon_end", t.epsilon.end);
    if (c.contains("opponents")) c.at("opponents").get_to(t.opponents);
    t.seed = c.value("seed", t.seed);
    t.shaper = c.value("shaper", t.shaper);
    t.illegal_penalty = c.value("illegal_penalty", t.illegal_penalty);
    if (c.contains("rules")) c.at("rules").get_to(t.rules);
    t.curve_window = c.value("curve_window", t.curve_window);
  }
  return weights;
}

void SaveCurveCsv(const std::string& path,
                  const std::vector<CurvePoint>& curve) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write curve file: " + path);
  out << "games_played,mean_adjusted_score\n";
  out.precision(17);
  for (const CurvePoint& p : curve) {
    out << p.games_played << "," << p.mean_adjusted_score << "\n";
  }
}

std::unique_ptr<Policy> MakePolicy(const std::string& spec) {
  if (spec == "random") return std::make_unique<RandomPolicy>();
  if (spec == "rule") return std::make_unique<RuleBasedPolicy>();
  constexpr std::string_view kWeightsPrefix = "weights:";
  if (spec.rfind(kWeightsPrefix, 0) == 0) {
    return std::make_unique<GreedyQPolicy>(
        LoadWeights(spec.substr(kWeightsPrefix.size())));
  }
  throw std::runtime_error("unknown policy spec: " + spec);
}

}  // namespace hearts
