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

#include "hearts/features.h"

namespace hearts {

int Features::NonZeroCount() const {
  int count = static_cast<int>(ones.size());
  for (double s : scalars) {
    if (s != 0.0) ++count;
  }
  return count;
}

Features ComputeFeatures(const Observation& obs, Card action) {
  Features phi;
  phi.ones.reserve(53);
  for (int card = 0; card < kNumCards; ++card) {
    uint8_t code = obs.card_states[card];
    if (code != kCardUnknown) {
      phi.ones.push_back(card * kNumCardCodes + code);
    }
  }
  phi.ones.push_back(kActionFeatureBase + action.index());
  phi.scalars = {obs.trick_number_normalized,
                 static_cast<double>(obs.hearts_broken),
                 static_cast<double>(obs.penalty_on_table)};
  return phi;
}

double Dot(std::span<const double> w, const Features& phi) {
  double sum = 0.0;
  for (int i : phi.ones) sum += w[i];
  for (int k = 0; k < 3; ++k) sum += w[kScalarFeatureBase + k] * phi.scalars[k];
  return sum;
}

void AddScaled(std::span<double> w, const Features& phi, double scale) {
  for (int i : phi.ones) w[i] += scale;
  for (int k = 0; k < 3; ++k) w[kScalarFeatureBase + k] += scale * phi.scalars[k];
}

}  // namespace hearts
