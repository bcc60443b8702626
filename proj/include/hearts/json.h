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

#ifndef HEARTS_JSON_H_
#define HEARTS_JSON_H_

#include <json.hpp>

#include "hearts/rules.h"

namespace hearts {

using Json = nlohmann::json;

inline void to_json(Json& j, const RulesConfig& rules) {
  j = Json{{"moon_rule", MoonRuleName(rules.moon_rule)},
           {"allow_points_on_first_trick_when_forced",
            rules.allow_points_on_first_trick_when_forced},
           {"queen_breaks_hearts", rules.queen_breaks_hearts}};
}

inline void from_json(const Json& j, RulesConfig& rules) {
  if (j.contains("moon_rule")) {
    auto rule = MoonRuleFromName(j.at("moon_rule").get<std::string>());
    if (!rule) throw std::runtime_error("unknown moon_rule");
    rules.moon_rule = *rule;
  }
  if (j.contains("allow_points_on_first_trick_when_forced")) {
    j.at("allow_points_on_first_trick_when_forced")
        .get_to(rules.allow_points_on_first_trick_when_forced);
  }
  if (j.contains("queen_breaks_hearts")) {
    j.at("queen_breaks_hearts").get_to(rules.queen_breaks_hearts);
  }
}

}  // namespace hearts

#endif  // HEARTS_JSON_H_
