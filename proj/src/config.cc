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

#include "hearts/config.h"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "hearts/json.h"
#include "hearts/reward.h"

namespace hearts {
namespace {

// Overlay helper: reads j[key] into out when present, with a precise error
// on a type mismatch, and marks the key as consumed.
template <typename T>
void Take(const Json& j, std::vector<std::string>& seen, const char* key,
          T& out) {
  seen.push_back(key);
  if (!j.contains(key)) return;
  try {
    j.at(key).get_to(out);
  } catch (const Json::exception&) {
    throw std::runtime_error(std::string("config: bad value for key: ") + key);
  }
}

void RejectUnknownKeys(const Json& j, const std::vector<std::string>& seen,
                       const std::string& section) {
  for (const auto& [key, value] : j.items()) {
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      throw std::runtime_error("config: unknown key: " + section + "." + key);
    }
  }
}

void ApplyRules(const Json& j, RulesConfig& rules) {
  std::vector<std::string> seen;
  seen.push_back("moon_rule");
  if (j.contains("moon_rule")) {
    std::string name;
    Json(j.at("moon_rule")).get_to(name);
    auto rule = MoonRuleFromName(name);
    if (!rule) throw std::runtime_error("config: unknown moon_rule: " + name);
    rules.moon_rule = *rule;
  }
  Take(j, seen, "allow_points_on_first_trick_when_forced",
       rules.allow_points_on_first_trick_when_forced);
  Take(j, seen, "queen_breaks_hearts", rules.queen_breaks_hearts);
  RejectUnknownKeys(j, seen, "rules");
}

}  // namespace

TrainConfig RunConfig::MakeTrainConfig() const {
  TrainConfig t;
  t.games = training.games;
  t.alpha = training.alpha;
  t.gamma = training.gamma;
  t.epsilon.start = training.epsilon_start;
  t.epsilon.end = training.epsilon_end;
  t.opponents = training.opponents;
  t.seed = training.seed;
  t.shaper = reward.shaper;
  t.illegal_penalty = reward.illegal_penalty;
  t.rules = rules;
  t.curve_window = training.curve_window;
  return t;
}

TableConfig RunConfig::MakeTableConfig() const {
  TableConfig t;
  t.n_games = table.n_games;
  t.n_parallel = table.n_parallel;
  t.action_timeout_ms = table.action_timeout_ms;
  t.grace_ms = table.grace_ms;
  t.master_seed = table.master_seed;
  t.rotate_seats = table.rotate_seats;
  t.rules = rules;
  t.record_transcripts = table.record_transcripts;
  return t;
}

void ApplyConfigFile(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot read file: " + path);
  Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw std::runtime_error("config: not a JSON object: " + path);
  }

  std::vector<std::string> sections;
  sections.push_back("rules");
  if (j.contains("rules")) ApplyRules(j.at("rules"), config.rules);

  sections.push_back("reward");
  if (j.contains("reward")) {
    const Json& s = j.at("reward");
    std::vector<std::string> seen;
    Take(s, seen, "shaper", config.reward.shaper);
    Take(s, seen, "illegal_penalty", config.reward.illegal_penalty);
    RejectUnknownKeys(s, seen, "reward");
  }

  sections.push_back("env");
  if (j.contains("env")) {
    const Json& s = j.at("env");
    std::vector<std::string> seen;
    Take(s, seen, "games", config.env.games);
    Take(s, seen, "seed", config.env.seed);
    Take(s, seen, "rotate_seats", config.env.rotate_seats);
    Take(s, seen, "policies", config.env.policies);
    RejectUnknownKeys(s, seen, "env");
  }

  sections.push_back("training");
  if (j.contains("training")) {
    const Json& s = j.at("training");
    std::vector<std::string> seen;
    Take(s, seen, "games", config.training.games);
    Take(s, seen, "alpha", config.training.alpha);
    Take(s, seen, "gamma", config.training.gamma);
    Take(s, seen, "epsilon_start", config.training.epsilon_start);
    Take(s, seen, "epsilon_end", config.training.epsilon_end);
    Take(s, seen, "opponents", config.training.opponents);
    Take(s, seen, "seed", config.training.seed);
    Take(s, seen, "curve_window", config.training.curve_window);
    RejectUnknownKeys(s, seen, "training");
  }

  sections.push_back("table");
  if (j.contains("table")) {
    const Json& s = j.at("table");
    std::vector<std::string> seen;
    Take(s, seen, "n_games", config.table.n_games);
    Take(s, seen, "n_parallel", config.table.n_parallel);
    Take(s, seen, "action_timeout_ms", config.table.action_timeout_ms);
    Take(s, seen, "grace_ms", config.table.grace_ms);
    Take(s, seen, "master_seed", config.table.master_seed);
    Take(s, seen, "rotate_seats", config.table.rotate_seats);
    Take(s, seen, "record_transcripts", config.table.record_transcripts);
    RejectUnknownKeys(s, seen, "table");
  }

  sections.push_back("tournament");
  if (j.contains("tournament")) {
    const Json& s = j.at("tournament");
    std::vector<std::string> seen;
    Take(s, seen, "entrants", config.tournament.entrants);
    RejectUnknownKeys(s, seen, "tournament");
  }

  for (const auto& [key, value] : j.items()) {
    if (std::find(sections.begin(), sections.end(), key) == sections.end()) {
      throw std::runtime_error("config: unknown section: " + key);
    }
  }
}

void ValidateConfig(const RunConfig& config) {
  auto bad = [](const std::string& what) {
    throw std::invalid_argument("config: " + what);
  };
  if (MakeShaper(config.reward.shaper, config.reward.illegal_penalty) ==
      nullptr) {
    bad("unknown reward.shaper: " + config.reward.shaper);
  }
  if (config.reward.illegal_penalty < 0) bad("reward.illegal_penalty < 0");
  if (config.env.games <= 0) bad("env.games must be positive");
  if (config.training.games <= 0) bad("training.games must be positive");
  if (config.training.alpha <= 0) bad("training.alpha must be positive");
  if (config.training.gamma < 0 || config.training.gamma > 1) {
    bad("training.gamma must be in [0, 1]");
  }
  for (double eps :
       {config.training.epsilon_start, config.training.epsilon_end}) {
    if (eps < 0 || eps > 1) bad("training epsilon must be in [0, 1]");
  }
  if (config.training.curve_window <= 0) {
    bad("training.curve_window must be positive");
  }
  if (config.table.n_games <= 0) bad("table.n_games must be positive");
  if (config.table.n_parallel <= 0) bad("table.n_parallel must be positive");
  if (config.table.action_timeout_ms <= 0) {
    bad("table.action_timeout_ms must be positive");
  }
  if (config.table.grace_ms < 0) bad("table.grace_ms must be nonnegative");
  if (config.tournament.entrants.empty() ||
      config.tournament.entrants.size() > 8) {
    bad("tournament.entrants must list 1 to 8 policies");
  }
}

std::string ResolvedConfigJson(const RunConfig& config) {
  Json j;
  j["rules"] = config.rules;
  j["reward"] = {{"shaper", config.reward.shaper},
                 {"illegal_penalty", config.reward.illegal_penalty}};
  j["env"] = {{"games", config.env.games},
              {"seed", config.env.seed},
              {"rotate_seats", config.env.rotate_seats},
              {"policies", config.env.policies}};
  j["training"] = {{"games", config.training.games},
                   {"alpha", config.training.alpha},
                   {"gamma", config.training.gamma},
                   {"epsilon_start", config.training.epsilon_start},
                   {"epsilon_end", config.training.epsilon_end},
                   {"opponents", config.training.opponents},
                   {"seed", config.training.seed},
                   {"curve_window", config.training.curve_window}};
  j["table"] = {{"n_games", config.table.n_games},
                {"n_parallel", config.table.n_parallel},
                {"action_timeout_ms", config.table.action_timeout_ms},
                {"grace_ms", config.table.grace_ms},
                {"master_seed", config.table.master_seed},
                {"rotate_seats", config.table.rotate_seats},
                {"record_transcripts", config.table.record_transcripts}};
  j["tournament"] = {{"entrants", config.tournament.entrants}};
  return j.dump(2);
}

}  // namespace hearts
