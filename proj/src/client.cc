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

#include "hearts/client.h"

#include <chrono>
#include <cmath>
#include <variant>

#include "hearts/policy.h"
#include "hearts/protocol.h"

namespace hearts {

ClientSummary RunClient(const ClientConfig& config) {
  std::unique_ptr<Policy> policy = MakePolicy(config.policy_spec);
  std::unique_ptr<TcpConnection> conn = TcpConnect(config.server);

  ClientSummary summary;
  double adjusted_sum = 0.0;

  if (!conn->SendLine(
          EncodeMessage(JoinMsg{config.name, config.team}))) {
    summary.error = "connection lost during join";
    return summary;
  }

  bool welcomed = false;
  while (auto line = conn->ReadLine()) {
    std::string detail;
    std::optional<Message> msg = DecodeMessage(*line, &detail);
    if (!msg) continue;  // tolerate garbage; the server validates us, not we it

    if (const auto* welcome = std::get_if<WelcomeMsg>(&*msg)) {
      summary.player_id = welcome->player_id;
      if (welcome->protocol_version != kProtocolVersion) {
        summary.error = "server speaks protocol version " +
                        std::to_string(welcome->protocol_version);
        return summary;
      }
      welcomed = true;
      continue;
    }
    if (const auto* request = std::get_if<RequestActionMsg>(&*msg)) {
      auto received = std::chrono::steady_clock::now();
      Observation obs = ObservationFromRequest(*request);
      int trick = static_cast<int>(
          std::lround(obs.trick_number_normalized * kNumTricks));
      Rng rng(DeriveSeed(config.seed, request->game_id, trick));
      Card card = policy->Act(obs, rng);
      conn->SendLine(
          EncodeMessage(ActionMsg{request->game_id, trick, card.index()}));
      summary.requests_answered += 1;
      auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - received)
                         .count();
      if (elapsed > request->deadline_ms - config.margin_ms) {
        summary.timeouts += 1;
      }
      continue;
    }
    if (const auto* trick = std::get_if<TrickResultMsg>(&*msg)) {
      (void)trick;
      summary.tricks_reported += 1;
      continue;
    }
    if (const auto* game = std::get_if<GameResultMsg>(&*msg)) {
      summary.games += 1;
      adjusted_sum += game->adjusted[0];  // entry 0 is always the recipient
      continue;
    }
    if (std::get_if<RoundResultMsg>(&*msg) != nullptr) {
      summary.rounds += 1;
      if (config.n_rounds > 0 && summary.rounds >= config.n_rounds) break;
      continue;
    }
    if (std::get_if<KickedMsg>(&*msg) != nullptr) {
      summary.kicked = true;
      break;
    }
    if (const auto* error = std::get_if<ErrorMsg>(&*msg)) {
      if (error->code == "KICKED") summary.kicked = true;
      continue;  // informational; the server keeps the session alive
    }
  }

  if (!welcomed) {
    summary.error = "disconnected before welcome";
  } else if (config.n_rounds > 0 && summary.rounds < config.n_rounds &&
             !summary.kicked) {
    summary.error = "disconnected mid-round";
  }
  if (summary.games > 0) {
    summary.mean_adjusted = adjusted_sum / static_cast<double>(summary.games);
  }
  return summary;
}

}  // namespace hearts
