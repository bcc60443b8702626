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

#ifndef HEARTS_POLICY_H_
#define HEARTS_POLICY_H_

#include <memory>
#include <string>

#include "hearts/observation.h"
#include "hearts/rng.h"

namespace hearts {

// A policy maps an observation to a card with a set mask bit. Policies are
// immutable after construction and safe to share across threads; all
// randomness flows through the caller-supplied stream.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual Card Act(const Observation& obs, Rng& rng) const = 0;
  virtual std::string name() const = 0;
};

class RandomPolicy : public Policy {
 public:
  Card Act(const Observation& obs, Rng& rng) const override;
  std::string name() const override { return "random"; }
};

// Deterministic benchmark heuristic:
//   (a) first trick: highest legal card (sheds high cards for free);
//   (b) leading: lowest legal card;
//   (c) following suit: highest card that still ducks under the current
//       winner, or the lowest legal card if it cannot duck;
//   (d) void: the queen of spades if legal, else the highest legal heart,
//       else the highest legal card.
// Card order for highest/lowest is rank-major with clubs < diamonds <
// hearts < spades breaking rank ties.
class RuleBasedPolicy : public Policy {
 public:
  Card Act(const Observation& obs, Rng& rng) const override;
  std::string name() const override { return "rule"; }
};

// Resolves a policy spec: "random", "rule", or "weights:<path>" (a greedy
// player over a trained weight file). Throws std::runtime_error on unknown
// specs or unreadable files.
std::unique_ptr<Policy> MakePolicy(const std::string& spec);

}  // namespace hearts

#endif  // HEARTS_POLICY_H_
