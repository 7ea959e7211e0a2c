#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <condition_variable>
#include <cstring>
#include <deque>
#include <mutex>
#include <thread>

#include "ncsg/error.hpp"
#include "ncsg/session.hpp"

namespace ncsg {

namespace {

// ------------------------------------------------------------------ pipe

struct Channel {
  std::mutex mu;
  std::condition_variable cv;
  std::deque<std::uint8_t> data;
  bool closed = false;

  void close() {
    {
      std::lock_guard lock(mu);
      closed = true;
    }
    cv.notify_all();
  }
};

class PipeEnd final : public Transport {
 public:
  PipeEnd(std::shared_ptr<Channel> in, std::shared_ptr<Channel> out, std::chrono::milliseconds timeout)
      : in_(std::move(in)), out_(std::move(out)), timeout_(timeout) {}
  ~PipeEnd() override { close(); }

  void close() override {
    out_->close();
    in_->close();
  }

 protected:
  void write_bytes(ByteView data) override {
    {
      std::lock_guard lock(out_->mu);
      if (out_->closed) throw Error(Errc::TransportFailure, "pipe closed");
      out_->data.insert(out_->data.end(), data.begin(), data.end());
    }
    out_->cv.notify_all();
  }

  void read_exact(std::uint8_t* dst, std::size_t n) override {
    std::unique_lock lock(in_->mu);
    if (!in_->cv.wait_for(lock, timeout_, [&] { return in_->data.size() >= n || in_->closed; }))
      throw Error(Errc::TransportFailure, "pipe read timed out");
    if (in_->data.size() < n) throw Error(Errc::TransportFailure, "pipe closed by peer");
    std::copy_n(in_->data.begin(), n, dst);
    in_->data.erase(in_->data.begin(), in_->data.begin() + static_cast<std::ptrdiff_t>(n));
  }

 private:
  std::shared_ptr<Channel> in_;
  std::shared_ptr<Channel> out_;
  std::chrono::milliseconds timeout_;
};

// ------------------------------------------------------------------- tcp

[[noreturn]] void sys_fail(const std::string& what) {
  throw Error(Errc::TransportFailure, what + ": " + std::strerror(errno));
}

class TcpStream final : public Transport {
 public:
  TcpStream(int fd, std::chrono::milliseconds timeout) : fd_(fd), timeout_(timeout) {
    const int one = 1;
    ::setsockopt(fd_, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
  }
  ~TcpStream() override { ::close(fd_); }

  void close() override { ::shutdown(fd_, SHUT_RDWR); }

 protected:
  void write_bytes(ByteView data) override {
    std::size_t sent = 0;
    while (sent < data.size()) {
      const auto r = ::send(fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
      if (r < 0) {
        if (errno == EINTR) continue;
        sys_fail("send");
      }
      sent += static_cast<std::size_t>(r);
    }
  }

  void read_exact(std::uint8_t* dst, std::size_t n) override {
    std::size_t got = 0;
    while (got < n) {
      pollfd p{fd_, POLLIN, 0};
      const int ready = ::poll(&p, 1, static_cast<int>(timeout_.count()));
      if (ready < 0) {
        if (errno == EINTR) continue;
        sys_fail("poll");
      }
      if (ready == 0) throw Error(Errc::TransportFailure, "tcp read timed out");
      const auto r = ::recv(fd_, dst + got, n - got, 0);
      if (r < 0) {
        if (errno == EINTR) continue;
        sys_fail("recv");
      }
      if (r == 0) throw Error(Errc::TransportFailure, "connection closed by peer");
      got += static_cast<std::size_t>(r);
    }
  }

 private:
  int fd_;
  std::chrono::milliseconds timeout_;
};

struct AddrInfo {
  addrinfo* head = nullptr;
  ~AddrInfo() {
    if (head) ::freeaddrinfo(head);
  }
};

void resolve(const std::string& host, std::uint16_t port, bool passive, AddrInfo& out) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  if (passive) hints.ai_flags = AI_PASSIVE;
  const auto service = std::to_string(port);
  if (const int rc = ::getaddrinfo(host.c_str(), service.c_str(), &hints, &out.head); rc != 0)
    throw Error(Errc::TransportFailure, "resolve " + host + ": " + ::gai_strerror(rc));
}

}  // namespace

std::pair<std::unique_ptr<Transport>, std::unique_ptr<Transport>> make_pipe(std::chrono::milliseconds timeout) {
  auto ab = std::make_shared<Channel>();
  auto ba = std::make_shared<Channel>();
  return {std::make_unique<PipeEnd>(ba, ab, timeout), std::make_unique<PipeEnd>(ab, ba, timeout)};
}

TcpListener::TcpListener(const std::string& host, std::uint16_t port) {
  AddrInfo ai;
  resolve(host, port, true, ai);
  for (auto* a = ai.head; a; a = a->ai_next) {
    const int fd = ::socket(a->ai_family, a->ai_socktype | SOCK_CLOEXEC, a->ai_protocol);
    if (fd < 0) continue;
    const int one = 1;
    ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
    if (::bind(fd, a->ai_addr, a->ai_addrlen) == 0 && ::listen(fd, 8) == 0) {
      fd_ = fd;
      break;
    }
    ::close(fd);
  }
  if (fd_ < 0) sys_fail("listen on " + host + ":" + std::to_string(port));
  sockaddr_storage addr{};
  socklen_t len = sizeof addr;
  ::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = addr.ss_family == AF_INET6 ? ntohs(reinterpret_cast<sockaddr_in6*>(&addr)->sin6_port)
                                     : ntohs(reinterpret_cast<sockaddr_in*>(&addr)->sin_port);
}

TcpListener::~TcpListener() {
  if (fd_ >= 0) ::close(fd_);
}

std::unique_ptr<Transport> TcpListener::accept(std::chrono::milliseconds timeout) {
  pollfd p{fd_, POLLIN, 0};
  const int ready = ::poll(&p, 1, static_cast<int>(timeout.count()));
  if (ready < 0) sys_fail("poll");
  if (ready == 0) throw Error(Errc::TransportFailure, "no connection before timeout");
  const int fd = ::accept4(fd_, nullptr, nullptr, SOCK_CLOEXEC);
  if (fd < 0) sys_fail("accept");
  return std::make_unique<TcpStream>(fd, timeout);
}

std::unique_ptr<Transport> tcp_connect(const std::string& host, std::uint16_t port,
                                       std::chrono::milliseconds timeout) {
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  for (;;) {
    AddrInfo ai;
    resolve(host, port, false, ai);
    for (auto* a = ai.head; a; a = a->ai_next) {
      const int fd = ::socket(a->ai_family, a->ai_socktype | SOCK_CLOEXEC, a->ai_protocol);
      if (fd < 0) continue;
      if (::connect(fd, a->ai_addr, a->ai_addrlen) == 0) return std::make_unique<TcpStream>(fd, timeout);
      ::close(fd);
    }
    if (std::chrono::steady_clock::now() >= deadline)
      throw Error(Errc::TransportFailure, "cannot connect to " + host + ":" + std::to_string(port));
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
  }
}

}  // namespace ncsg
