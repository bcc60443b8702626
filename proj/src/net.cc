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

#include "hearts/net.h"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <stdexcept>

namespace hearts {
namespace {

// Lines in this protocol are small (a request_action is ~400 bytes); cap
// buffering so a hostile peer cannot grow memory without newlines.
constexpr size_t kMaxLineBytes = 1 << 20;

sockaddr_in ToSockaddr(const SocketAddress& addr) {
  sockaddr_in sa{};
  sa.sin_family = AF_INET;
  sa.sin_port = htons(static_cast<uint16_t>(addr.port));
  if (inet_pton(AF_INET, addr.host.c_str(), &sa.sin_addr) != 1) {
    throw std::runtime_error("net: not an IPv4 address: " + addr.host);
  }
  return sa;
}

}  // namespace

std::optional<SocketAddress> ParseAddress(const std::string& text) {
  SocketAddress addr;
  std::string port_part = text;
  size_t colon = text.rfind(':');
  if (colon != std::string::npos) {
    if (colon > 0) addr.host = text.substr(0, colon);
    port_part = text.substr(colon + 1);
  }
  if (addr.host == "localhost") addr.host = "127.0.0.1";
  if (port_part.empty() ||
      port_part.find_first_not_of("0123456789") != std::string::npos) {
    return std::nullopt;
  }
  long port = std::strtol(port_part.c_str(), nullptr, 10);
  if (port < 0 || port > 65535) return std::nullopt;
  addr.port = static_cast<int>(port);
  return addr;
}

TcpConnection::TcpConnection(int fd) : fd_(fd) {
  int one = 1;
  setsockopt(fd_, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
  // Backstop: a peer that stopped reading cannot block a writer forever.
  // A timed-out send abandons the connection (partial lines must never be
  // followed by more data).
  timeval send_timeout{.tv_sec = 5, .tv_usec = 0};
  setsockopt(fd_, SOL_SOCKET, SO_SNDTIMEO, &send_timeout,
             sizeof(send_timeout));
}

TcpConnection::~TcpConnection() {
  Close();
  close(fd_);
}

bool TcpConnection::SendLine(const std::string& line) {
  std::lock_guard<std::mutex> lock(write_mutex_);
  if (closed_) return false;
  size_t sent = 0;
  while (sent < line.size()) {
    ssize_t n =
        send(fd_, line.data() + sent, line.size() - sent, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      Close();
      return false;
    }
    sent += static_cast<size_t>(n);
  }
  return true;
}

std::optional<std::string> TcpConnection::ReadLine() {
  while (true) {
    size_t pos = read_buffer_.find('\n');
    if (pos != std::string::npos) {
      std::string line = read_buffer_.substr(0, pos);
      read_buffer_.erase(0, pos + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    if (read_buffer_.size() > kMaxLineBytes) return std::nullopt;
    char chunk[4096];
    ssize_t n = recv(fd_, chunk, sizeof(chunk), 0);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) return std::nullopt;
    read_buffer_.append(chunk, static_cast<size_t>(n));
  }
}

void TcpConnection::Close() {
  bool expected = false;
  if (closed_.compare_exchange_strong(expected, true)) {
    shutdown(fd_, SHUT_RDWR);
  }
}

std::unique_ptr<TcpConnection> TcpConnect(const SocketAddress& addr) {
  sockaddr_in sa = ToSockaddr(addr);
  int fd = socket(AF_INET, SOCK_STREAM, 0);
  if (fd < 0) throw std::runtime_error("net: socket() failed");
  if (connect(fd, reinterpret_cast<sockaddr*>(&sa), sizeof(sa)) != 0) {
    int err = errno;
    close(fd);
    throw std::runtime_error("net: cannot connect to " + addr.host + ":" +
                             std::to_string(addr.port) + ": " +
                             std::strerror(err));
  }
  return std::make_unique<TcpConnection>(fd);
}

TcpListener::TcpListener(const SocketAddress& addr) : fd_(-1), port_(0) {
  sockaddr_in sa = ToSockaddr(addr);
  fd_ = socket(AF_INET, SOCK_STREAM, 0);
  if (fd_ < 0) throw std::runtime_error("net: socket() failed");
  int one = 1;
  setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
  if (bind(fd_, reinterpret_cast<sockaddr*>(&sa), sizeof(sa)) != 0 ||
      listen(fd_, 16) != 0) {
    int err = errno;
    close(fd_);
    throw std::runtime_error("net: cannot listen on " + addr.host + ":" +
                             std::to_string(addr.port) + ": " +
                             std::strerror(err));
  }
  sockaddr_in bound{};
  socklen_t len = sizeof(bound);
  getsockname(fd_, reinterpret_cast<sockaddr*>(&bound), &len);
  port_ = ntohs(bound.sin_port);
}

TcpListener::~TcpListener() {
  Close();
  close(fd_);
}

std::unique_ptr<TcpConnection> TcpListener::Accept() {
  while (true) {
    int fd = accept(fd_, nullptr, nullptr);
    if (fd >= 0) {
      if (closed_) {
        close(fd);
        return nullptr;
      }
      return std::make_unique<TcpConnection>(fd);
    }
    if (errno == EINTR) continue;
    return nullptr;
  }
}

void TcpListener::Close() {
  bool expected = false;
  if (closed_.compare_exchange_strong(expected, true)) {
    shutdown(fd_, SHUT_RDWR);
  }
}

}  // namespace hearts
