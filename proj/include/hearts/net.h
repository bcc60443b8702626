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

#ifndef HEARTS_NET_H_
#define HEARTS_NET_H_

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace hearts {

// Minimal line-oriented TCP wrappers over POSIX sockets, just enough for
// the newline-delimited protocol. Blocking reads, mutex-serialized writes.

// Splits "host:port"; a bare ":port" or "port" binds/conects to 127.0.0.1.
struct SocketAddress {
  std::string host = "127.0.0.1";
  int port = 0;
};
std::optional<SocketAddress> ParseAddress(const std::string& text);

class TcpConnection {
 public:
  explicit TcpConnection(int fd);
  ~TcpConnection();

  TcpConnection(const TcpConnection&) = delete;
  TcpConnection& operator=(const TcpConnection&) = delete;

  // Writes the full buffer (the caller includes the trailing newline).
  // Returns false once the peer is gone; never raises SIGPIPE.
  bool SendLine(const std::string& line);

  // Blocks for the next complete line, stripped of its '\n'. nullopt on
  // EOF or error. Reassembles lines across short reads. Only one reader
  // thread per connection.
  std::optional<std::string> ReadLine();

  // Shuts the socket down, waking a blocked reader.
  void Close();

  bool closed() const { return closed_; }

 private:
  int fd_;
  std::mutex write_mutex_;
  std::string read_buffer_;
  std::atomic<bool> closed_{false};
};

std::unique_ptr<TcpConnection> TcpConnect(const SocketAddress& addr);

class TcpListener {
 public:
  // Binds and listens; port 0 picks a free port (see port()). Throws
  // std::runtime_error when the address cannot be bound.
  explicit TcpListener(const SocketAddress& addr);
  ~TcpListener();

  TcpListener(const TcpListener&) = delete;
  TcpListener& operator=(const TcpListener&) = delete;

  // Blocks for the next connection; nullptr once the listener is closed.
  std::unique_ptr<TcpConnection> Accept();

  void Close();

  int port() const { return port_; }

 private:
  int fd_;
  int port_;
  std::atomic<bool> closed_{false};
};

}  // namespace hearts

#endif  // HEARTS_NET_H_
