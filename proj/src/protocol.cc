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

#include "hearts/protocol.h"

#include <cmath>
#include <cstdio>

#include "hearts/json.h"

namespace hearts {
namespace {

// Signals a schema violation while decoding; caught inside DecodeMessage,
// never escapes it.
struct SchemaError {
  std::string detail;
};

[[noreturn]] void Fail(const std::string& detail) { throw SchemaError{detail}; }

void Require(bool cond, const char* detail) {
  if (!cond) Fail(detail);
}

// nlohmann's get<> raises json::exception on type mismatches; these helpers
// convert that into SchemaError with the offending field name.
template <typename T>
T Field(const Json& j, const char* key) {
  if (!j.contains(key)) Fail(std::string("missing field: ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    Fail(std::string("bad type for field: ") + key);
  }
}

int IntField(const Json& j, const char* key, long long lo, long long hi) {
  long long v = Field<long long>(j, key);
  if (v < lo || v > hi) Fail(std::string("out of range: ") + key);
  return static_cast<int>(v);
}

Json ScoreArray(const std::array<int, 4>& a) { return Json(a); }

std::array<int, 4> ScoreArrayField(const Json& j, const char* key, int lo,
                                   int hi) {
  auto v = Field<std::vector<long long>>(j, key);
  if (v.size() != 4) Fail(std::string("expected 4 entries: ") + key);
  std::array<int, 4> out;
  for (int i = 0; i < 4; ++i) {
    if (v[i] < lo || v[i] > hi) Fail(std::string("out of range: ") + key);
    out[i] = static_cast<int>(v[i]);
  }
  return out;
}

Json EncodeBody(const JoinMsg& m) {
  return Json{{"type", "join"}, {"name", m.name}, {"team", m.team}};
}

Json EncodeBody(const ActionMsg& m) {
  return Json{{"type", "action"},
              {"game_id", m.game_id},
              {"trick_number", m.trick_number},
              {"card_index", m.card_index}};
}

Json EncodeBody(const WelcomeMsg& m) {
  return Json{{"type", "welcome"},
              {"player_id", m.player_id},
              {"protocol_version", m.protocol_version}};
}

Json EncodeBody(const RequestActionMsg& m) {
  return Json{{"type", "request_action"},
              {"game_id", m.game_id},
              {"card_states", m.card_states},
              {"trick_number_normalized", m.trick_number_normalized},
              {"hearts_broken", m.hearts_broken},
              {"penalty_on_table", m.penalty_on_table},
              {"mask", MaskToHex(m.mask)},
              {"deadline_ms", m.deadline_ms}};
}

Json EncodeBody(const TrickResultMsg& m) {
  return Json{{"type", "trick_result"},
              {"game_id", m.game_id},
              {"winner_offset", m.winner_offset},
              {"penalty", m.penalty}};
}

Json EncodeBody(const GameResultMsg& m) {
  return Json{{"type", "game_result"},
              {"game_id", m.game_id},
              {"raw", ScoreArray(m.raw)},
              {"adjusted", ScoreArray(m.adjusted)},
              {"placements", ScoreArray(m.placements)}};
}

Json EncodeBody(const KickedMsg& m) {
  return Json{{"type", "kicked"}, {"reason", m.reason}};
}

Json EncodeBody(const EntrantSummary& e) {
  return Json{{"name", e.name},
              {"total_adjusted", e.total_adjusted},
              {"mean_adjusted", e.mean_adjusted},
              {"placements", e.placements},
              {"kicked", e.kicked},
              {"illegal_actions", e.illegal_actions},
              {"timeouts", e.timeouts},
              {"is_bot", e.is_bot}};
}

Json EncodeBody(const RoundResultMsg& m) {
  Json entrants = Json::array();
  for (const EntrantSummary& e : m.entrants) entrants.push_back(EncodeBody(e));
  return Json{{"type", "round_result"},
              {"n_games", m.n_games},
              {"entrants", std::move(entrants)}};
}

Json EncodeBody(const ErrorMsg& m) {
  return Json{{"type", "error"}, {"code", m.code}, {"detail", m.detail}};
}

Message DecodeBody(const std::string& type, const Json& j) {
  if (type == "join") {
    JoinMsg m;
    m.name = Field<std::string>(j, "name");
    m.team = Field<std::string>(j, "team");
    Require(!m.name.empty(), "join: name must be nonempty");
    return m;
  }
  if (type == "action") {
    ActionMsg m;
    m.game_id = Field<long long>(j, "game_id");
    m.trick_number = IntField(j, "trick_number", 1, kNumTricks);
    m.card_index = IntField(j, "card_index", 0, kNumCards - 1);
    Require(m.game_id >= 0, "action: negative game_id");
    return m;
  }
  if (type == "welcome") {
    WelcomeMsg m;
    m.player_id = IntField(j, "player_id", 0, 1 << 30);
    m.protocol_version = IntField(j, "protocol_version", 1, 1 << 30);
    return m;
  }
  if (type == "request_action") {
    RequestActionMsg m;
    m.game_id = Field<long long>(j, "game_id");
    Require(m.game_id >= 0, "request_action: negative game_id");
    auto states = Field<std::vector<long long>>(j, "card_states");
    Require(states.size() == kNumCards,
            "request_action: card_states must have 52 entries");
    for (int i = 0; i < kNumCards; ++i) {
      Require(states[i] >= 0 && states[i] < kNumCardCodes,
              "request_action: card state code out of range");
      m.card_states[i] = static_cast<uint8_t>(states[i]);
    }
    m.trick_number_normalized = Field<double>(j, "trick_number_normalized");
    Require(std::isfinite(m.trick_number_normalized) &&
                m.trick_number_normalized >= 0.0 &&
                m.trick_number_normalized <= 1.0,
            "request_action: trick_number_normalized out of [0, 1]");
    m.hearts_broken = IntField(j, "hearts_broken", 0, 1);
    m.penalty_on_table = IntField(j, "penalty_on_table", 0, kTotalPenalty);
    auto mask = MaskFromHex(Field<std::string>(j, "mask"));
    if (!mask) Fail("request_action: mask must be 13 lowercase hex digits");
    m.mask = *mask;
    m.deadline_ms = IntField(j, "deadline_ms", 1, 1 << 30);
    return m;
  }
  if (type == "trick_result") {
    TrickResultMsg m;
    m.game_id = Field<long long>(j, "game_id");
    m.winner_offset = IntField(j, "winner_offset", 0, kNumSeats - 1);
    m.penalty = IntField(j, "penalty", 0, kTotalPenalty);
    return m;
  }
  if (type == "game_result") {
    GameResultMsg m;
    m.game_id = Field<long long>(j, "game_id");
    m.raw = ScoreArrayField(j, "raw", 0, kTotalPenalty);
    m.adjusted = ScoreArrayField(j, "adjusted", 0, kTotalPenalty);
    m.placements = ScoreArrayField(j, "placements", 1, kNumSeats);
    return m;
  }
  if (type == "kicked") {
    return KickedMsg{Field<std::string>(j, "reason")};
  }
  if (type == "round_result") {
    RoundResultMsg m;
    m.n_games = Field<long long>(j, "n_games");
    Require(m.n_games >= 0, "round_result: negative n_games");
    const Json* entrants = j.contains("entrants") ? &j.at("entrants") : nullptr;
    if (entrants == nullptr || !entrants->is_array() || entrants->size() != 4) {
      Fail("round_result: entrants must be an array of 4");
    }
    for (const Json& ej : *entrants) {
      EntrantSummary e;
      e.name = Field<std::string>(ej, "name");
      e.total_adjusted = Field<long long>(ej, "total_adjusted");
      e.mean_adjusted = Field<double>(ej, "mean_adjusted");
      auto places = Field<std::vector<long long>>(ej, "placements");
      Require(places.size() == 4, "round_result: placements must have 4");
      for (int i = 0; i < 4; ++i) {
        Require(places[i] >= 0, "round_result: negative placement count");
        e.placements[i] = places[i];
      }
      e.kicked = Field<bool>(ej, "kicked");
      e.illegal_actions = Field<long long>(ej, "illegal_actions");
      e.timeouts = Field<long long>(ej, "timeouts");
      e.is_bot = Field<bool>(ej, "is_bot");
      m.entrants.push_back(std::move(e));
    }
    return m;
  }
  if (type == "error") {
    return ErrorMsg{Field<std::string>(j, "code"),
                    Field<std::string>(j, "detail")};
  }
  Fail("unknown message type: " + type);
}

}  // namespace

std::string EncodeMessage(const Message& message) {
  Json j = std::visit([](const auto& m) { return EncodeBody(m); }, message);
  std::string line = j.dump();
  line.push_back('\n');
  return line;
}

std::optional<Message> DecodeMessage(std::string_view line,
                                     std::string* error_detail) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  Json j = Json::parse(line, /*cb=*/nullptr, /*allow_exceptions=*/false);
  std::string detail;
  if (j.is_discarded()) {
    detail = "not a JSON object";
  } else if (!j.is_object()) {
    detail = "top-level value is not an object";
  } else if (!j.contains("type") || !j.at("type").is_string()) {
    detail = "missing type tag";
  } else {
    try {
      return DecodeBody(j.at("type").get<std::string>(), j);
    } catch (const SchemaError& e) {
      detail = e.detail;
    }
  }
  if (error_detail != nullptr) *error_detail = detail;
  return std::nullopt;
}

std::string MaskToHex(ActionMask mask) {
  char buf[14];
  std::snprintf(buf, sizeof(buf), "%013llx",
                static_cast<unsigned long long>(mask.bits()));
  return std::string(buf, 13);
}

std::optional<ActionMask> MaskFromHex(std::string_view hex) {
  if (hex.size() != 13) return std::nullopt;
  uint64_t bits = 0;
  for (char c : hex) {
    int digit;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else {
      return std::nullopt;
    }
    bits = (bits << 4) | static_cast<uint64_t>(digit);
  }
  return ActionMask(bits);
}

RequestActionMsg MakeActionRequest(long long game_id, const Observation& obs,
                                   int deadline_ms) {
  RequestActionMsg m;
  m.game_id = game_id;
  m.card_states = obs.card_states;
  m.trick_number_normalized = obs.trick_number_normalized;
  m.hearts_broken = obs.hearts_broken;
  m.penalty_on_table = obs.penalty_on_table;
  m.mask = obs.mask;
  m.deadline_ms = deadline_ms;
  return m;
}

Observation ObservationFromRequest(const RequestActionMsg& msg) {
  Observation obs;
  obs.card_states = msg.card_states;
  obs.trick_number_normalized = msg.trick_number_normalized;
  obs.hearts_broken = msg.hearts_broken;
  obs.penalty_on_table = msg.penalty_on_table;
  obs.mask = msg.mask;
  return obs;
}

}  // namespace hearts
