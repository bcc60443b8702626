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

#ifndef HEARTS_FEATURES_H_
#define HEARTS_FEATURES_H_

#include <span>
#include <vector>

#include "hearts/observation.h"

namespace hearts {

// Feature layout for the linear learner:
//   [0, 520)    card-state one-hots, card * 10 + code (the unknown code 0
//               never sets a bit, keeping the vector sparse);
//   [520, 572)  one-hot of the candidate action;
//   [572, 575)  the three observation scalars.
inline constexpr int kCardStateFeatures = kNumCards * kNumCardCodes;
inline constexpr int kActionFeatureBase = kCardStateFeatures;
inline constexpr int kScalarFeatureBase = kCardStateFeatures + kNumCards;
inline constexpr int kNumFeatures = kScalarFeatureBase + 3;

// Sparse nonnegative vector: at most 53 unit entries plus the scalar tail.
struct Features {
  std::vector<int> ones;
  std::array<double, 3> scalars{};

  int NonZeroCount() const;
};

Features ComputeFeatures(const Observation& obs, Card action);

double Dot(std::span<const double> w, const Features& phi);

// w += scale * phi.
void AddScaled(std::span<double> w, const Features& phi, double scale);

}  // namespace hearts

#endif  // HEARTS_FEATURES_H_
