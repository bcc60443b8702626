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

#ifndef HEARTS_CONFIG_H_
#define HEARTS_CONFIG_H_

#include <array>
#include <string>
#include <vector>

#include "hearts/qlearn.h"
#include "hearts/table.h"

namespace hearts {

// Shared configuration for every subcommand. Precedence: built-in
// defaults, then a JSON config file, then command-line flags; the file
// uses the same section and key names as ResolvedConfigJson prints.
struct RunConfig {
  RulesConfig rules;

  struct Reward {
    std::string shaper = "default";  // "default" | "terminal_only"
    double illegal_penalty = 1.0;
  } reward;

  // simulate/eval settings.
  struct Env {
    long long games = 1000;
    uint64_t seed = 7;
    bool rotate_seats = true;
    std::array<std::string, 4> policies = {"random", "random", "random",
                                           "random"};
  } env;

  struct Training {
    long long games = 100000;
    double alpha = 0.01;
    double gamma = 1.0;
    double epsilon_start = 0.5;
    double epsilon_end = 0.05;
    std::array<std::string, 3> opponents = {"random", "random", "random"};
    uint64_t seed = 1;
    long long curve_window = 1000;
  } training;

  struct Table {
    long long n_games = 100;
    int n_parallel = 16;
    int action_timeout_ms = 2000;
    int grace_ms = 250;
    uint64_t master_seed = 1;
    bool rotate_seats = true;
    bool record_transcripts = true;
  } table;

  struct Tournament {
    // Policy specs of local entrants; padded to 8 with random bots.
    std::vector<std::string> entrants = {"random", "random", "random",
                                         "random", "random", "random",
                                         "random", "random"};
  } tournament;

  // Views merging the shared sections into the module-level configs.
  TrainConfig MakeTrainConfig() const;
  TableConfig MakeTableConfig() const;
};

// Overlays `path` (a JSON object of sections) onto `config`. Unknown
// sections or keys and type mismatches throw std::runtime_error naming
// the offending key.
void ApplyConfigFile(RunConfig& config, const std::string& path);

// Rejects invalid values/combinations with std::invalid_argument before
// any work starts.
void ValidateConfig(const RunConfig& config);

// The reproducibility header: a pretty-printed JSON object with every
// effective value, including every seed. Also the config-file schema.
std::string ResolvedConfigJson(const RunConfig& config);

}  // namespace hearts

#endif  // HEARTS_CONFIG_H_
