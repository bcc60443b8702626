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

#ifndef HEARTS_REWARD_H_
#define HEARTS_REWARD_H_

#include <memory>
#include <string>

#include "hearts/game.h"

namespace hearts {

// Pluggable reward shaping. Every callback is a pure function of its
// arguments; implementations hold no per-episode state.
class RewardShaper {
 public:
  virtual ~RewardShaper() = default;
  // Called for the winner when a trick completes.
  virtual double OnTrickEnd(int seat, const TrickEvent& event) const = 0;
  // Called for the acting seat when its action had to be substituted.
  virtual double OnIllegal(int seat) const = 0;
  // Called once per seat when the game ends.
  virtual double OnTerminal(int seat, const Scores& scores) const = 0;
};

// Default shaping: the trick winner is charged the trick's penalty, and the
// terminal correction -(adjusted - raw) makes the episode sum equal the
// negative adjusted score (it is zero unless the moon rule fired).
class DefaultShaper : public RewardShaper {
 public:
  explicit DefaultShaper(double illegal_penalty = 1.0)
      : illegal_penalty_(illegal_penalty) {}

  double OnTrickEnd(int, const TrickEvent& event) const override {
    return -event.penalty_points;
  }
  double OnIllegal(int) const override { return -illegal_penalty_; }
  double OnTerminal(int seat, const Scores& scores) const override {
    return -(scores.adjusted[seat] - scores.raw[seat]);
  }

 private:
  double illegal_penalty_;
};

// All reward at the end of the episode: -adjusted score, nothing else.
class TerminalScoreShaper : public RewardShaper {
 public:
  explicit TerminalScoreShaper(double illegal_penalty = 1.0)
      : illegal_penalty_(illegal_penalty) {}

  double OnTrickEnd(int, const TrickEvent&) const override { return 0.0; }
  double OnIllegal(int) const override { return -illegal_penalty_; }
  double OnTerminal(int seat, const Scores& scores) const override {
    return -scores.adjusted[seat];
  }

 private:
  double illegal_penalty_;
};

// Built-ins: "default", "terminal_only". Unknown names return nullptr.
std::shared_ptr<const RewardShaper> MakeShaper(const std::string& name,
                                               double illegal_penalty);

}  // namespace hearts

#endif  // HEARTS_REWARD_H_
