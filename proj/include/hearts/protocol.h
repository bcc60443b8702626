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

#ifndef HEARTS_PROTOCOL_H_
#define HEARTS_PROTOCOL_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hearts/observation.h"

namespace hearts {

// Wire protocol: one JSON object per line, UTF-8, newline-terminated, over
// TCP. Every object carries a "type" tag; all field names are snake_case.
// Multiple simultaneous games share one connection, demultiplexed by
// game_id. This schema is the compatibility surface for third-party
// clients; changes bump kProtocolVersion.
inline constexpr int kProtocolVersion = 1;

// client -> server

struct JoinMsg {
  std::string name;
  std::string team;  // may be empty
};

struct ActionMsg {
  long long game_id = 0;
  int trick_number = 1;  // 1..13, echoed from the request's observation
  int card_index = 0;
};

// server -> client

struct WelcomeMsg {
  int player_id = 0;
  int protocol_version = kProtocolVersion;
};

// The mask travels as 13 lowercase hex digits, most significant first;
// bit 0 = card index 0 = the least significant bit of the last digit.
struct RequestActionMsg {
  long long game_id = 0;
  std::array<uint8_t, kNumCards> card_states{};
  double trick_number_normalized = 0.0;
  int hearts_broken = 0;
  int penalty_on_table = 0;
  ActionMask mask;
  int deadline_ms = 0;
};

// winner_offset is relative to the recipient: 0 = you won the trick.
struct TrickResultMsg {
  long long game_id = 0;
  int winner_offset = 0;
  int penalty = 0;
};

// Score arrays are indexed by relative offset from the recipient, entry 0
// being the recipient's own result.
struct GameResultMsg {
  long long game_id = 0;
  std::array<int, 4> raw{};
  std::array<int, 4> adjusted{};
  std::array<int, 4> placements{};
};

struct KickedMsg {
  std::string reason;
};

struct EntrantSummary {
  std::string name;
  long long total_adjusted = 0;
  double mean_adjusted = 0.0;
  std::array<long long, 4> placements{};
  bool kicked = false;
  long long illegal_actions = 0;
  long long timeouts = 0;
  bool is_bot = false;
};

struct RoundResultMsg {
  long long n_games = 0;
  std::vector<EntrantSummary> entrants;  // exactly 4
};

struct ErrorMsg {
  std::string code;  // e.g. "MALFORMED", "KICKED", "UNEXPECTED"
  std::string detail;
};

using Message =
    std::variant<JoinMsg, ActionMsg, WelcomeMsg, RequestActionMsg,
                 TrickResultMsg, GameResultMsg, KickedMsg, RoundResultMsg,
                 ErrorMsg>;

// Serializes to exactly one line including the trailing '\n'; the body
// contains no interior newlines. The message must satisfy the schema
// invariants (in-range indices, 4-entry arrays and so on).
std::string EncodeMessage(const Message& message);

// Total: any byte sequence yields either a message or, with nullopt, a
// human-readable reason in *error_detail (when non-null). Never throws on
// malformed input. A single trailing '\n' or '\r\n' is tolerated.
std::optional<Message> DecodeMessage(std::string_view line,
                                     std::string* error_detail = nullptr);

std::string MaskToHex(ActionMask mask);
// Requires exactly 13 lowercase hex digits.
std::optional<ActionMask> MaskFromHex(std::string_view hex);

// Builds the request for one pending action. The observation must carry
// the mask for the seat being asked.
RequestActionMsg MakeActionRequest(long long game_id, const Observation& obs,
                                   int deadline_ms);

// Inverse of MakeActionRequest: the client-side view of the observation.
Observation ObservationFromRequest(const RequestActionMsg& msg);

}  // namespace hearts

#endif  // HEARTS_PROTOCOL_H_
