#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncsg/bytes.hpp"
#include "ncsg/protocols.hpp"

namespace ncsg {

// ------------------------------------------------------------------- wire

struct WireMessage {
  Tag tag;
  Bytes payload;

  bool operator==(const WireMessage&) const = default;
};

// tag (1) | length (4, big-endian) | payload.
Bytes encode_wire(const WireMessage& m);
// Exactly one message; unknown tags and length mismatches throw MalformedData.
WireMessage decode_wire(ByteView data);

// Braid words are sent letter by letter so relator-inserted rewrites survive
// transmission: 0x11 | n (2) | count (4) | letters (2 each, signed). Other
// platforms fall back to the canonical serialization.
Bytes encode_raw_word(const Element& e);
Element decode_raw_word(ByteView data);

// -------------------------------------------------------------- transports

class Transport {
 public:
  virtual ~Transport() = default;

  virtual void send(const WireMessage& m);
  // Throws ProtocolViolation for an unknown tag, TransportFailure on a closed
  // or timed-out channel.
  virtual WireMessage receive();
  // Wakes a blocked peer with TransportFailure. Idempotent.
  virtual void close() {}

 protected:
  virtual void write_bytes(ByteView data) = 0;
  virtual void read_exact(std::uint8_t* out, std::size_t n) = 0;
};

inline constexpr std::chrono::milliseconds kDefaultTimeout{10'000};

// Two connected in-process endpoints.
std::pair<std::unique_ptr<Transport>, std::unique_ptr<Transport>> make_pipe(
    std::chrono::milliseconds timeout = kDefaultTimeout);

// Listens on host:port; port 0 picks an ephemeral port.
class TcpListener {
 public:
  explicit TcpListener(const std::string& host = "127.0.0.1", std::uint16_t port = 0);
  ~TcpListener();
  TcpListener(const TcpListener&) = delete;
  TcpListener& operator=(const TcpListener&) = delete;

  std::uint16_t port() const { return port_; }
  // One connection, one session.
  std::unique_ptr<Transport> accept(std::chrono::milliseconds timeout = kDefaultTimeout);

 private:
  int fd_ = -1;
  std::uint16_t port_ = 0;
};

// Retries until the listener is up or the timeout passes.
std::unique_ptr<Transport> tcp_connect(const std::string& host, std::uint16_t port,
                                       std::chrono::milliseconds timeout = kDefaultTimeout);

// ---------------------------------------------------------------- session

enum class SessionMode : std::uint8_t { Auth, AuthVariant, Ka, KaVariant, Bits };

std::string_view mode_name(SessionMode m);
std::optional<SessionMode> parse_mode(std::string_view s);

struct SessionConfig {
  explicit SessionConfig(ProtocolParams p) : params(std::move(p)) {}

  ProtocolParams params;
  Role role = Role::A;
  SessionMode mode = SessionMode::Auth;
  // bits mode: number of rounds.
  std::size_t bits = 32;
  std::optional<std::uint64_t> seed;
  // Auth modes. A needs its key pair; B needs A's public key z'.
  std::optional<KeyPair> key;
  std::optional<Element> peer_public;
};

struct SessionOutcome {
  bool accepted = false;
  // Key agreement and bits modes.
  std::optional<Bytes> kappa_digest;
  // Bits mode: what this side sent (A) or decoded (B).
  std::vector<bool> bits;
  std::size_t resamples = 0;
  // Every message in order, with its sender; identical on both ends.
  Transcript transcript;
};

// Drives one session over `transport`. Throws TransportFailure,
// ParamsMismatch, ProtocolViolation.
SessionOutcome run_session(const SessionConfig& config, Transport& transport);

// Digest sent under tag 0x21; never the raw key.
Bytes kappa_confirm_digest(const ProtocolParams& params, const Element& kappa);
Bytes bits_confirm_digest(const std::vector<bool>& bits);

// Runs A and B on two threads over `a`/`b`; rethrows the first failure.
std::pair<SessionOutcome, SessionOutcome> run_pair(const SessionConfig& a_config, const SessionConfig& b_config,
                                                   Transport& a, Transport& b);

// ------------------------------------------------------------- key files

// "NCSGK", version, a1, a2, z, z'.
Bytes serialize_keypair(const KeyPair& key);
KeyPair parse_keypair(ByteView data);
// "NCSGZ", version, z, z'.
Bytes serialize_public_key(const KeyPair& key);
std::pair<Element, Element> parse_public_key(ByteView data);

Bytes read_file(const std::string& path);
void write_file(const std::string& path, ByteView data);

// -------------------------------------------------------------------- CLI

// Exit codes: 0 success/accept, 1 reject, 2 usage, 3 runtime error.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ncsg
