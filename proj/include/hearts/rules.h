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

#ifndef HEARTS_RULES_H_
#define HEARTS_RULES_H_

#include <optional>
#include <string>

namespace hearts {

// Scoring adjustment when one player collects all 26 penalty points.
enum class MoonRule {
  kOthersPlus26,  // shooter scores 0, everyone else 26
  kOff,           // raw scores stand
};

struct RulesConfig {
  MoonRule moon_rule = MoonRule::kOthersPlus26;
  // A first-trick hand holding nothing but penalty cards may play them.
  bool allow_points_on_first_trick_when_forced = true;
  // Whether the queen of spades also marks hearts as broken.
  bool queen_breaks_hearts = false;
};

std::string MoonRuleName(MoonRule rule);
std::optional<MoonRule> MoonRuleFromName(const std::string& name);

}  // namespace hearts

#endif  // HEARTS_RULES_H_
