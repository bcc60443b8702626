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

#ifndef HEARTS_SERVER_H_
#define HEARTS_SERVER_H_

#include <condition_variable>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "hearts/net.h"
#include "hearts/table.h"
#include "hearts/tournament.h"

namespace hearts {

struct ServerConfig {
  SocketAddress listen;  // port 0 binds an ephemeral port (see port())
  TableConfig table;     // defaults for rounds started on this server
  // Append-only results log, one JSON object per game and per round;
  // empty disables logging.
  std::string results_path;
};

// A joined remote player: one connection, one reader thread, games
// multiplexed by game_id. Once its action deadline (timeout + grace)
// expires, or the connection drops, the entrant is kicked for the rest of
// the round and a seeded bot answers every remaining request.
class RemoteEntrant : public Entrant {
 public:
  RemoteEntrant(std::string name, int player_id,
                std::unique_ptr<TcpConnection> conn);
  ~RemoteEntrant() override;

  std::string name() const override { return name_; }
  int player_id() const { return player_id_; }

  void BeginRound(const TableConfig& config) override;
  ActionReply RequestAction(long long game_id, const Observation& obs,
                            Rng& rng) override;
  void OnTrickResult(long long game_id, const TrickEvent& event,
                     int my_seat) override;
  void OnGameResult(long long game_id, const Scores& scores,
                    const std::array<int, 4>& placements,
                    int my_seat) override;
  void OnRoundResult(const RoundResultMsg& summary) override;
  bool kicked() const override;

  bool connected() const;

  // Runs on the caller's thread until the connection closes; the server's
  // per-connection thread enters here after the join handshake.
  void ReaderLoop();

  void CloseConnection();

 private:
  // Caller holds mutex_. Marks the entrant kicked and wakes every waiting
  // request; idempotent.
  void KickLocked();

  const std::string name_;
  const int player_id_;
  std::unique_ptr<TcpConnection> conn_;

  mutable std::mutex mutex_;
  std::condition_variable cv_;
  struct PendingRequest {
    int trick_number;
    std::optional<int> card_index;
  };
  std::map<long long, PendingRequest> pending_;
  bool kicked_ = false;
  bool disconnected_ = false;
  int timeout_ms_ = 2000;
  int grace_ms_ = 250;
};

// Evaluation server: accepts joins on a listening socket and runs table
// rounds or tournaments over the joined players on demand, padding short
// tables with built-in random bots.
class ArenaServer {
 public:
  explicit ArenaServer(const ServerConfig& config);
  ~ArenaServer();

  ArenaServer(const ArenaServer&) = delete;
  ArenaServer& operator=(const ArenaServer&) = delete;

  // Begins accepting connections; returns immediately.
  void Start();
  void Shutdown();

  int port() const { return listener_.port(); }

  // Blocks until n players have joined or timeout_ms passed.
  bool WaitForPlayers(int n, int timeout_ms);

  int n_joined() const;
  std::string Status() const;

  // Plays one round over the first up-to-4 joined players (join order),
  // padded with bots. Blocks until complete; one round at a time.
  TableResult StartTable(const TableConfig& config);

  // Knockout over the first up-to-8 joined players, padded with bots.
  TournamentResult StartTournament(const TournamentConfig& config);

 private:
  void AcceptLoop();
  void HandleConnection(std::unique_ptr<TcpConnection> conn);
  std::vector<Entrant*> SnapshotEntrants(size_t limit);
  void AppendResults(const TableResult& result);
  void AppendTournament(const TournamentResult& result);

  ServerConfig config_;
  TcpListener listener_;
  std::atomic<bool> shutting_down_{false};

  mutable std::mutex mutex_;
  std::condition_variable join_cv_;
  std::vector<std::unique_ptr<RemoteEntrant>> players_;
  std::vector<std::unique_ptr<LocalEntrant>> bots_;
  int next_player_id_ = 1;

  std::mutex round_mutex_;   // serializes rounds
  std::mutex results_mutex_; // single writer of the results log

  std::thread acceptor_;
  std::vector<std::thread> connection_threads_;
};

}  // namespace hearts

#endif  // HEARTS_SERVER_H_
