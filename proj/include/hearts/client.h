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

#ifndef HEARTS_CLIENT_H_
#define HEARTS_CLIENT_H_

#include <string>

#include "hearts/net.h"
#include "hearts/rules.h"

namespace hearts {

// Reference client: joins a server and answers multiplexed request_action
// messages with a local policy. Clients trust the server's mask and never
// recompute legality.
struct ClientConfig {
  SocketAddress server;
  std::string name = "anon";
  std::string team;
  std::string policy_spec = "random";  // "random" | "rule" | "weights:<path>"
  // Compute budget the client reserves before the deadline; handling that
  // takes longer than deadline - margin counts as a (local) timeout.
  int margin_ms = 200;
  // Per-request randomness derives from (seed, game_id, trick_number), so
  // replies do not depend on the order requests arrive in.
  uint64_t seed = 1;
  // Disconnect after this many round_result messages; 0 plays until the
  // server closes the connection.
  int n_rounds = 1;
};

struct ClientSummary {
  int player_id = 0;
  long long requests_answered = 0;
  long long games = 0;  // game_result messages received
  double mean_adjusted = 0.0;
  long long tricks_reported = 0;
  long long timeouts = 0;  // requests whose local handling overran the margin
  int rounds = 0;
  bool kicked = false;
  std::string error;  // nonempty when the session ended abnormally
};

// Blocks until the session ends (rounds played, kick, or disconnect).
// Throws std::runtime_error when the server is unreachable or the policy
// spec does not resolve.
ClientSummary RunClient(const ClientConfig& config);

}  // namespace hearts

#endif  // HEARTS_CLIENT_H_
