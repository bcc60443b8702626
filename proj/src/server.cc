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

#include "hearts/server.h"

#include <chrono>
#include <cmath>
#include <fstream>

#include "hearts/protocol.h"

namespace hearts {

RemoteEntrant::RemoteEntrant(std::string name, int player_id,
                             std::unique_ptr<TcpConnection> conn)
    : name_(std::move(name)), player_id_(player_id), conn_(std::move(conn)) {}

RemoteEntrant::~RemoteEntrant() { CloseConnection(); }

void RemoteEntrant::BeginRound(const TableConfig& config) {
  std::lock_guard<std::mutex> lock(mutex_);
  // Kicks last for one round; a lost connection never comes back.
  kicked_ = disconnected_;
  pending_.clear();
  timeout_ms_ = config.action_timeout_ms;
  grace_ms_ = config.grace_ms;
  cv_.notify_all();
}

Entrant::ActionReply RemoteEntrant::RequestAction(long long game_id,
                                                  const Observation& obs,
                                                  Rng& rng) {
  int advertised_ms;
  int trick = static_cast<int>(
      std::lround(obs.trick_number_normalized * kNumTricks));
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (kicked_) return ActionReply{PickUniform(obs.mask, rng), false};
    pending_[game_id] = PendingRequest{trick, std::nullopt};
    advertised_ms = timeout_ms_;
  }

  bool sent =
      conn_->SendLine(EncodeMessage(MakeActionRequest(game_id, obs,
                                                      advertised_ms)));
  std::unique_lock<std::mutex> lock(mutex_);
  if (!sent) {
    pending_.erase(game_id);
    KickLocked();
    return ActionReply{PickUniform(obs.mask, rng), false};
  }

  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::milliseconds(timeout_ms_ + grace_ms_);
  cv_.wait_until(lock, deadline, [&] {
    if (kicked_) return true;
    auto it = pending_.find(game_id);
    return it != pending_.end() && it->second.card_index.has_value();
  });

  auto it = pending_.find(game_id);
  if (it != pending_.end() && it->second.card_index.has_value()) {
    // A reply that raced the kick still arrived in time; honor it.
    Card card(*it->second.card_index);
    pending_.erase(it);
    return ActionReply{card, false};
  }
  if (it != pending_.end()) pending_.erase(it);
  if (kicked_) return ActionReply{PickUniform(obs.mask, rng), false};

  // Deadline passed with no reply: this request triggers the kick. Wake
  // the entrant's other pending requests so they resolve to bot draws
  // immediately instead of each waiting out its own deadline.
  KickLocked();
  lock.unlock();
  conn_->SendLine(EncodeMessage(
      KickedMsg{"no action within deadline; a bot plays the rest of this "
                "round"}));
  return ActionReply{PickUniform(obs.mask, rng), true};
}

void RemoteEntrant::KickLocked() {
  if (!kicked_) {
    kicked_ = true;
    cv_.notify_all();
  }
}

void RemoteEntrant::OnTrickResult(long long game_id, const TrickEvent& event,
                                  int my_seat) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (kicked_) return;
  }
  TrickResultMsg msg;
  msg.game_id = game_id;
  msg.winner_offset = (event.winner - my_seat + kNumSeats) % kNumSeats;
  msg.penalty = event.penalty_points;
  conn_->SendLine(EncodeMessage(msg));
}

void RemoteEntrant::OnGameResult(long long game_id, const Scores& scores,
                                 const std::array<int, 4>& placements,
                                 int my_seat) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (kicked_) return;
  }
  GameResultMsg msg;
  msg.game_id = game_id;
  for (int i = 0; i < kNumSeats; ++i) {
    int seat = (my_seat + i) % kNumSeats;
    msg.raw[i] = scores.raw[seat];
    msg.adjusted[i] = scores.adjusted[seat];
    msg.placements[i] = placements[seat];
  }
  conn_->SendLine(EncodeMessage(msg));
}

void RemoteEntrant::OnRoundResult(const RoundResultMsg& summary) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (kicked_) return;
  }
  conn_->SendLine(EncodeMessage(summary));
}

bool RemoteEntrant::kicked() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return kicked_;
}

bool RemoteEntrant::connected() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return !disconnected_;
}

void RemoteEntrant::ReaderLoop() {
  while (auto line = conn_->ReadLine()) {
    std::string detail;
    std::optional<Message> msg = DecodeMessage(*line, &detail);
    if (!msg) {
      conn_->SendLine(EncodeMessage(ErrorMsg{"MALFORMED", detail}));
      continue;
    }
    const ActionMsg* action = std::get_if<ActionMsg>(&*msg);
    if (action == nullptr) {
      conn_->SendLine(EncodeMessage(
          ErrorMsg{"UNEXPECTED", "only action messages are accepted here"}));
      continue;
    }
    bool delivered = false;
    bool was_kicked = false;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (kicked_) {
        was_kicked = true;
      } else {
        auto it = pending_.find(action->game_id);
        if (it != pending_.end() && !it->second.card_index.has_value() &&
            it->second.trick_number == action->trick_number) {
          it->second.card_index = action->card_index;
          delivered = true;
          cv_.notify_all();
        }
      }
    }
    if (was_kicked) {
      conn_->SendLine(EncodeMessage(
          ErrorMsg{"KICKED", "kicked this round; actions are discarded"}));
    } else if (!delivered) {
      conn_->SendLine(EncodeMessage(
          ErrorMsg{"UNEXPECTED", "no pending request for this game/trick"}));
    }
  }
  std::lock_guard<std::mutex> lock(mutex_);
  disconnected_ = true;
  KickLocked();
}

void RemoteEntrant::CloseConnection() { conn_->Close(); }

ArenaServer::ArenaServer(const ServerConfig& config)
    : config_(config), listener_(config.listen) {}

ArenaServer::~ArenaServer() { Shutdown(); }

void ArenaServer::Start() {
  acceptor_ = std::thread(&ArenaServer::AcceptLoop, this);
}

void ArenaServer::Shutdown() {
  shutting_down_ = true;
  listener_.Close();
  std::vector<std::thread> to_join;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    for (auto& player : players_) player->CloseConnection();
    to_join.swap(connection_threads_);
  }
  if (acceptor_.joinable()) acceptor_.join();
  for (std::thread& t : to_join) t.join();
}

void ArenaServer::AcceptLoop() {
  while (auto conn = listener_.Accept()) {
    if (shutting_down_) break;
    std::lock_guard<std::mutex> lock(mutex_);
    connection_threads_.emplace_back(&ArenaServer::HandleConnection, this,
                                     std::move(conn));
  }
}

void ArenaServer::HandleConnection(std::unique_ptr<TcpConnection> conn) {
  // The join handshake: reply to anything that is not a valid join and
  // keep the connection open until one arrives.
  while (auto line = conn->ReadLine()) {
    std::string detail;
    std::optional<Message> msg = DecodeMessage(*line, &detail);
    if (!msg) {
      conn->SendLine(EncodeMessage(ErrorMsg{"MALFORMED", detail}));
      continue;
    }
    const JoinMsg* join = std::get_if<JoinMsg>(&*msg);
    if (join == nullptr) {
      conn->SendLine(
          EncodeMessage(ErrorMsg{"UNEXPECTED", "join before anything else"}));
      continue;
    }

    int player_id;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      player_id = next_player_id_++;
    }
    conn->SendLine(
        EncodeMessage(WelcomeMsg{player_id, kProtocolVersion}));
    auto entrant = std::make_unique<RemoteEntrant>(join->name, player_id,
                                                   std::move(conn));
    RemoteEntrant* raw = entrant.get();
    {
      std::lock_guard<std::mutex> lock(mutex_);
      players_.push_back(std::move(entrant));
      join_cv_.notify_all();
    }
    raw->ReaderLoop();
    return;
  }
}

bool ArenaServer::WaitForPlayers(int n, int timeout_ms) {
  std::unique_lock<std::mutex> lock(mutex_);
  return join_cv_.wait_for(lock, std::chrono::milliseconds(timeout_ms), [&] {
    return static_cast<int>(players_.size()) >= n;
  });
}

int ArenaServer::n_joined() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return static_cast<int>(players_.size());
}

std::string ArenaServer::Status() const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::string out = "players: " + std::to_string(players_.size());
  for (const auto& p : players_) {
    out += "\n  #" + std::to_string(p->player_id()) + " " + p->name() +
           (p->connected() ? "" : " (disconnected)");
  }
  return out;
}

std::vector<Entrant*> ArenaServer::SnapshotEntrants(size_t limit) {
  std::vector<Entrant*> entrants;
  std::lock_guard<std::mutex> lock(mutex_);
  for (const auto& p : players_) {
    if (entrants.size() == limit) break;
    entrants.push_back(p.get());
  }
  return entrants;
}

TableResult ArenaServer::StartTable(const TableConfig& config) {
  std::lock_guard<std::mutex> round_lock(round_mutex_);
  std::vector<Entrant*> entrants = SnapshotEntrants(4);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    while (bots_.size() < 4 - entrants.size()) {
      bots_.push_back(std::make_unique<LocalEntrant>(
          "bot-" + std::to_string(bots_.size() + 1),
          std::make_shared<RandomPolicy>(), /*is_bot=*/true));
    }
    for (size_t i = 0; entrants.size() < 4; ++i) {
      entrants.push_back(bots_[i].get());
    }
  }
  std::array<Entrant*, 4> seats = {entrants[0], entrants[1], entrants[2],
                                   entrants[3]};
  TableResult result = RunTable(seats, config);
  AppendResults(result);
  return result;
}

TournamentResult ArenaServer::StartTournament(const TournamentConfig& config) {
  std::lock_guard<std::mutex> round_lock(round_mutex_);
  std::vector<Entrant*> entrants = SnapshotEntrants(8);
  if (entrants.empty()) {
    // An all-bot exhibition bracket is still a valid tournament.
    std::lock_guard<std::mutex> lock(mutex_);
    while (bots_.size() < 1) {
      bots_.push_back(std::make_unique<LocalEntrant>(
          "bot-1", std::make_shared<RandomPolicy>(), /*is_bot=*/true));
    }
    entrants.push_back(bots_[0].get());
  }
  TournamentResult result = RunTournament(entrants, config);
  AppendTournament(result);
  return result;
}

void ArenaServer::AppendResults(const TableResult& result) {
  if (config_.results_path.empty()) return;
  std::lock_guard<std::mutex> lock(results_mutex_);
  std::ofstream out(config_.results_path, std::ios::app);
  for (const GameRecord& record : result.games) {
    out << GameRecordJsonLine(record) << "\n";
  }
  out << EncodeMessage(SummarizeRound(result));
}

void ArenaServer::AppendTournament(const TournamentResult& result) {
  if (!config_.results_path.empty()) {
    for (const TournamentRound& round : result.rounds) {
      AppendResults(round.result);
    }
  }
  if (config_.results_path.empty()) return;
  std::lock_guard<std::mutex> lock(results_mutex_);
  std::ofstream out(config_.results_path, std::ios::app);
  out << TournamentJsonLine(result) << "\n";
}

}  // namespace hearts
