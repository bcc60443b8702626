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
#include <cstdio>
#include <filesystem>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "hearts/env.h"

namespace hearts {
namespace {

std::string TempPath(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

TEST_CASE("feature layout constants") {
  CHECK(kCardStateFeatures == 520);
  CHECK(kActionFeatureBase == 520);
  CHECK(kScalarFeatureBase == 572);
  CHECK(kNumFeatures == 575);
}

TEST_CASE("feature vector: one index per visible card plus action and scalars") {
  HeartsEnv env;
  auto [seat, obs] = env.Reset(8);
  Card action = obs.mask.First();
  Features phi = ComputeFeatures(obs, action);

  // Opening observation: 13 own cards visible, everything else unknown,
  // plus the action one-hot.
  CHECK(phi.ones.size() == 14);
  bool has_action = false;
  for (int i : phi.ones) {
    CHECK(i >= 0);
    CHECK(i < kScalarFeatureBase);
    if (i == kActionFeatureBase + action.index()) has_action = true;
    if (i < kActionFeatureBase) {
      // Card-state feature: must encode a currently visible code.
      int card = i / kNumCardCodes;
      int code = i % kNumCardCodes;
      CHECK(obs.card_states[card] == code);
      CHECK(code != kCardUnknown);
    }
  }
  CHECK(has_action);
  // Trick 1 of 13, hearts intact, empty table: only the trick scalar is set.
  CHECK(phi.scalars[0] == doctest::Approx(1.0 / 13.0));
  CHECK(phi.scalars[1] == 0.0);
  CHECK(phi.scalars[2] == 0.0);
  CHECK(phi.NonZeroCount() == 15);
}

TEST_CASE("dot and update match a finite-difference probe") {
  HeartsEnv env;
  auto [seat, obs] = env.Reset(31);
  // Advance a few steps so scalars are nonzero too.
  Rng rng(4);
  for (int i = 0; i < 9; ++i) {
    auto out = env.Step(PickUniform(obs.mask, rng));
    std::tie(seat, obs) = *out.next;
  }
  Features phi = ComputeFeatures(obs, obs.mask.First());

  std::vector<double> w(kNumFeatures);
  for (auto& x : w) x = rng.NextUnit() - 0.5;

  // d(w . phi)/dw_i == phi_i, probed coordinate-wise.
  const double eps = 1e-6;
  const double base = Dot(w, phi);
  for (int i = 0; i < kNumFeatures; ++i) {
    double phi_i = 0.0;
    for (int one : phi.ones) {
      if (one == i) phi_i = 1.0;
    }
    if (i >= kScalarFeatureBase) phi_i = phi.scalars[i - kScalarFeatureBase];
    std::vector<double> w2 = w;
    w2[i] += eps;
    double grad = (Dot(w2, phi) - base) / eps;
    CHECK(grad == doctest::Approx(phi_i).epsilon(1e-6));
  }

  // AddScaled is exactly w += scale * phi, so the dot moves by
  // scale * |phi|^2 (unit entries plus the squared scalars).
  double norm_sq = static_cast<double>(phi.ones.size());
  for (double s : phi.scalars) norm_sq += s * s;
  std::vector<double> w3 = w;
  AddScaled(w3, phi, 0.25);
  CHECK(Dot(w3, phi) == doctest::Approx(base + 0.25 * norm_sq));
}

TEST_CASE("td update: terminal unit example and bootstrapped target") {
  SUBCASE("terminal reward -1 writes -alpha into each visited feature") {
    std::vector<double> w(kNumFeatures, 0.0);
    Transition t;
    t.phi.ones = {5};
    t.reward = -1.0;
    t.terminal = true;
    TdUpdate(w, t, 0.01, 1.0);
    CHECK(w[5] == doctest::Approx(-0.01));
    double sum = 0.0;
    for (double x : w) sum += std::abs(x);
    CHECK(sum == doctest::Approx(0.01));  // nothing else moved
  }

  SUBCASE("non-terminal target takes the max over successor actions") {
    std::vector<double> w(kNumFeatures, 0.0);
    w[kActionFeatureBase + 3] = 2.0;
    w[kActionFeatureBase + 7] = 5.0;

    Transition t;
    t.phi.ones = {9};
    t.reward = 1.0;
    Features a;
    a.ones = {kActionFeatureBase + 3};
    Features b;
    b.ones = {kActionFeatureBase + 7};
    t.next_legal = {a, b};

    // delta = 1 + 0.5 * max(2, 5) - 0 = 3.5; w[9] += 0.1 * 3.5.
    TdUpdate(w, t, 0.1, 0.5);
    CHECK(w[9] == doctest::Approx(0.35));
  }

  SUBCASE("non-finite drift is refused, not propagated") {
    std::vector<double> w(kNumFeatures, 0.0);
    w[5] = std::numeric_limits<double>::infinity();
    Transition t;
    t.phi.ones = {5};
    t.reward = 0.0;
    t.terminal = true;
    CHECK_THROWS_AS(TdUpdate(w, t, 0.01, 1.0), std::runtime_error);
  }
}

TEST_CASE("epsilon schedule: linear over the first half, flat after") {
  EpsilonSchedule eps{0.5, 0.05};
  CHECK(eps.At(0, 100) == doctest::Approx(0.5));
  CHECK(eps.At(25, 100) == doctest::Approx(0.275));
  CHECK(eps.At(50, 100) == doctest::Approx(0.05));
  CHECK(eps.At(99, 100) == doctest::Approx(0.05));
  CHECK(eps.At(0, 1) == doctest::Approx(0.05));  // degenerate run
}

TEST_CASE("greedy policy: lowest-index tie-break and dimension check") {
  LinearQWeights weights;  // all-zero: every action ties
  GreedyQPolicy greedy(weights);
  Rng rng(1);

  HeartsEnv env;
  auto [seat, obs] = env.Reset(12);
  for (int step = 0; step < 20; ++step) {
    Card pick = greedy.Act(obs, rng);
    CHECK(pick == obs.mask.First());
    auto out = env.Step(pick);
    if (out.done) break;
    std::tie(seat, obs) = *out.next;
  }

  LinearQWeights bad;
  bad.w.resize(10);
  CHECK_THROWS_AS(GreedyQPolicy{bad}, std::invalid_argument);

  // A strictly preferred legal card wins over the tie block.
  LinearQWeights pref;
  pref.w[kActionFeatureBase + kQueenOfSpades.index()] = 1.0;
  GreedyQPolicy wants_queen(pref);
  Observation fake;
  fake.mask.Add(kTwoOfClubs);
  fake.mask.Add(kQueenOfSpades);
  CHECK(wants_queen.Act(fake, rng) == kQueenOfSpades);

  // Epsilon 1: pure uniform exploration, still always legal.
  GreedyQPolicy explorer(weights, 1.0);
  for (int i = 0; i < 50; ++i) {
    CHECK(fake.mask.Contains(explorer.Act(fake, rng)));
  }
}

TEST_CASE("training is reproducible and tracks its curve windows") {
  TrainConfig config;
  config.games = 250;
  config.curve_window = 100;

  TrainResult a = TrainSelfplay(config);
  TrainResult b = TrainSelfplay(config);
  CHECK(a.weights.w == b.weights.w);  // bit-for-bit
  REQUIRE(a.curve.size() == 3);       // 100, 200, final partial 250
  CHECK(a.curve[0].games_played == 100);
  CHECK(a.curve[1].games_played == 200);
  CHECK(a.curve[2].games_played == 250);
  for (size_t i = 0; i < a.curve.size(); ++i) {
    CHECK(a.curve[i].mean_adjusted_score ==
          b.curve[i].mean_adjusted_score);
    CHECK(a.curve[i].mean_adjusted_score >= 0.0);
    CHECK(a.curve[i].mean_adjusted_score <= 26.0);
  }

  // The weight vector actually moved.
  double norm = 0.0;
  for (double x : a.weights.w) norm += std::abs(x);
  CHECK(norm > 0.0);
}

TEST_CASE("training config validation") {
  TrainConfig config;
  config.games = 0;
  CHECK_THROWS_AS(TrainSelfplay(config), std::invalid_argument);
  config.games = 10;
  config.alpha = 0.0;
  CHECK_THROWS_AS(TrainSelfplay(config), std::invalid_argument);
  config.alpha = 0.01;
  config.shaper = "bogus";
  CHECK_THROWS_AS(TrainSelfplay(config), std::invalid_argument);
  config.shaper = "default";
  config.opponents = {"random", "nonsense", "random"};
  CHECK_THROWS_AS(TrainSelfplay(config), std::runtime_error);
}

TEST_CASE("weights save/load round-trip, curve csv") {
  TrainConfig config;
  config.games = 50;
  config.curve_window = 25;
  config.alpha = 0.02;
  config.seed = 9;
  TrainResult result = TrainSelfplay(config);

  const std::string wpath = TempPath("hearts_test_weights.json");
  const std::string cpath = TempPath("hearts_test_curve.csv");
  SaveWeights(wpath, result.weights);
  LinearQWeights loaded = LoadWeights(wpath);
  CHECK(loaded.w == result.weights.w);  // exact doubles via JSON round-trip
  CHECK(loaded.config.alpha == config.alpha);
  CHECK(loaded.config.seed == config.seed);
  CHECK(loaded.config.games == config.games);

  SaveCurveCsv(cpath, result.curve);
  FILE* f = std::fopen(cpath.c_str(), "r");
  REQUIRE(f != nullptr);
  char header[64] = {0};
  REQUIRE(std::fgets(header, sizeof header, f) != nullptr);
  CHECK(std::string(header).find("games_played") == 0);
  std::fclose(f);

  CHECK_THROWS_AS(LoadWeights(TempPath("hearts_no_such_weights.json")),
                  std::runtime_error);

  std::filesystem::remove(wpath);
  std::filesystem::remove(cpath);
}

}  // namespace
}  // namespace hearts
