#include "ncsg/session.hpp"

#include <exception>
#include <fstream>
#include <iterator>
#include <random>
#include <thread>

#include "ncsg/error.hpp"

namespace ncsg {

namespace {

constexpr std::uint32_t kMaxPayload = 64u << 20;
constexpr std::uint8_t kRawBraid = 0x11;
constexpr std::uint8_t kKeyVersion = 1;

void expect_magic(ByteReader& in, std::string_view magic) {
  const auto m = in.take(magic.size());
  if (!std::equal(m.begin(), m.end(), magic.begin())) throw Error(Errc::MalformedData, "bad magic");
  if (in.u8() != kKeyVersion) throw Error(Errc::MalformedData, "unsupported version");
}

void put_magic(Bytes& out, std::string_view magic) {
  out.insert(out.end(), magic.begin(), magic.end());
  put_u8(out, kKeyVersion);
}

}  // namespace

// ------------------------------------------------------------------- wire

Bytes encode_wire(const WireMessage& m) {
  Bytes out;
  out.reserve(5 + m.payload.size());
  put_u8(out, static_cast<std::uint8_t>(m.tag));
  put_u32(out, static_cast<std::uint32_t>(m.payload.size()));
  put_bytes(out, m.payload);
  return out;
}

WireMessage decode_wire(ByteView data) {
  ByteReader in(data);
  const auto tag = in.u8();
  if (!is_known_tag(tag)) throw Error(Errc::MalformedData, "unknown wire tag " + std::to_string(tag));
  const auto len = in.u32();
  if (len != in.remaining()) throw Error(Errc::MalformedData, "length field does not match payload");
  const auto p = in.take(len);
  return WireMessage{static_cast<Tag>(tag), Bytes(p.begin(), p.end())};
}

Bytes encode_raw_word(const Element& e) {
  if (e.platform().kind() != PlatformKind::Braid) return serialize(e);
  Bytes out;
  put_u8(out, kRawBraid);
  put_u16(out, static_cast<std::uint16_t>(e.platform().size()));
  put_u32(out, static_cast<std::uint32_t>(e.payload().size()));
  for (const auto l : e.payload()) put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(l)));
  return out;
}

Element decode_raw_word(ByteView data) {
  ByteReader in(data);
  if (data.empty() || data[0] != kRawBraid) {
    auto e = deserialize_element(in);
    if (!in.done()) throw Error(Errc::MalformedData, "trailing bytes after element");
    return e;
  }
  in.u8();
  const int n = in.u16();
  const auto count = in.u32();
  if (count > in.remaining() / 2) throw Error(Errc::MalformedData, "truncated braid word");
  std::vector<int> letters;
  letters.reserve(count);
  for (std::uint32_t k = 0; k < count; ++k) letters.push_back(static_cast<std::int16_t>(in.u16()));
  if (!in.done()) throw Error(Errc::MalformedData, "trailing bytes after braid word");
  return make_braid(n, std::move(letters));
}

// -------------------------------------------------------------- transports

void Transport::send(const WireMessage& m) { write_bytes(encode_wire(m)); }

WireMessage Transport::receive() {
  std::uint8_t header[5];
  read_exact(header, 5);
  if (!is_known_tag(header[0]))
    throw Error(Errc::ProtocolViolation, "unknown wire tag " + std::to_string(header[0]));
  ByteReader in(ByteView(header + 1, 4));
  const auto len = in.u32();
  if (len > kMaxPayload) throw Error(Errc::ProtocolViolation, "oversized payload");
  WireMessage m{static_cast<Tag>(header[0]), Bytes(len)};
  if (len > 0) read_exact(m.payload.data(), len);
  return m;
}

// ---------------------------------------------------------------- session

std::string_view mode_name(SessionMode m) {
  switch (m) {
    case SessionMode::Auth: return "auth";
    case SessionMode::AuthVariant: return "auth-variant";
    case SessionMode::Ka: return "ka";
    case SessionMode::KaVariant: return "ka-variant";
    case SessionMode::Bits: return "bits";
  }
  return "?";
}

std::optional<SessionMode> parse_mode(std::string_view s) {
  for (auto m : {SessionMode::Auth, SessionMode::AuthVariant, SessionMode::Ka, SessionMode::KaVariant,
                 SessionMode::Bits})
    if (mode_name(m) == s) return m;
  return std::nullopt;
}

Bytes kappa_confirm_digest(const ProtocolParams&, const Element& kappa) {
  static constexpr std::string_view kDomain = "NCSG kappa-confirm";
  Bytes in(kDomain.begin(), kDomain.end());
  put_bytes(in, hash_element(kappa, HashMode::Bitstring));
  return sha256(in);
}

Bytes bits_confirm_digest(const std::vector<bool>& bits) {
  static constexpr std::string_view kDomain = "NCSG bits-confirm";
  Bytes in(kDomain.begin(), kDomain.end());
  put_u32(in, static_cast<std::uint32_t>(bits.size()));
  for (const bool b : bits) put_u8(in, b ? 1 : 0);
  return sha256(in);
}

namespace {

constexpr std::string_view kParamsMismatch = "params digest mismatch";

Role other(Role r) { return r == Role::A ? Role::B : Role::A; }

class Session {
 public:
  Session(const SessionConfig& c, Transport& t)
      : c_(c),
        t_(t),
        rng_(c.seed ? Rng(*c.seed).fork(c.role == Role::A ? 1 : 2) : Rng(std::random_device{}())) {}

  SessionOutcome run() {
    hello();
    switch (c_.mode) {
      case SessionMode::Auth:
      case SessionMode::AuthVariant: auth(); break;
      case SessionMode::Ka:
      case SessionMode::KaVariant: ka(); break;
      case SessionMode::Bits: bits(); break;
    }
    return std::move(out_);
  }

 private:
  bool is_a() const { return c_.role == Role::A; }

  void send(Tag tag, Bytes payload) {
    WireMessage m{tag, std::move(payload)};
    t_.send(m);
    out_.transcript.records.push_back({c_.role, m.tag, std::move(m.payload)});
  }

  WireMessage receive(Tag expected) {
    auto m = t_.receive();
    out_.transcript.records.push_back({other(c_.role), m.tag, m.payload});
    if (m.tag == Tag::Error)
      throw Error(Errc::ProtocolViolation,
                  "peer reported: " + std::string(m.payload.begin(), m.payload.end()));
    if (m.tag != expected)
      throw Error(Errc::ProtocolViolation, "expected " + std::string(tag_name(expected)) + ", got " +
                                               std::string(tag_name(m.tag)));
    return m;
  }

  Element element(const WireMessage& m) {
    auto e = deserialize_element(m.payload);
    if (!(e.platform() == c_.params.platform()))
      throw Error(Errc::ProtocolViolation, "element from another platform");
    return e;
  }

  Bytes hello_payload() const {
    auto p = params_digest(c_.params);
    put_u8(p, static_cast<std::uint8_t>(c_.mode));
    put_u32(p, static_cast<std::uint32_t>(c_.mode == SessionMode::Bits ? c_.bits : 0));
    return p;
  }

  void check_hello(const WireMessage& m) {
    const auto mine = hello_payload();
    if (m.payload.size() != mine.size() || !std::equal(mine.begin(), mine.begin() + 32, m.payload.begin())) {
      send(Tag::Error, Bytes(kParamsMismatch.begin(), kParamsMismatch.end()));
      throw Error(Errc::ParamsMismatch, std::string(kParamsMismatch));
    }
    if (m.payload != mine) {
      const std::string msg = "session mode mismatch";
      send(Tag::Error, Bytes(msg.begin(), msg.end()));
      throw Error(Errc::ProtocolViolation, msg);
    }
  }

  void hello() {
    if (is_a()) {
      send(Tag::Hello, hello_payload());
      auto m = t_.receive();
      out_.transcript.records.push_back({Role::B, m.tag, m.payload});
      if (m.tag == Tag::Error) {
        const std::string what(m.payload.begin(), m.payload.end());
        throw Error(what == kParamsMismatch ? Errc::ParamsMismatch : Errc::ProtocolViolation,
                    "peer reported: " + what);
      }
      if (m.tag != Tag::Hello) throw Error(Errc::ProtocolViolation, "expected hello");
      check_hello(m);
    } else {
      check_hello(receive(Tag::Hello));
      send(Tag::Hello, hello_payload());
    }
  }

  void auth() {
    const bool variant = c_.mode == SessionMode::AuthVariant;
    if (is_a()) {
      if (!c_.key) throw Error(Errc::InvalidArgument, "prover needs a key pair");
      const auto x = element(receive(Tag::Challenge));
      send(Tag::Response, variant ? respond_variant(c_.params, *c_.key, x) : respond(c_.params, *c_.key, x));
      const auto v = receive(Tag::Verdict);
      out_.accepted = v.payload.size() == 1 && v.payload[0] == 1;
    } else {
      if (!c_.peer_public) throw Error(Errc::InvalidArgument, "verifier needs the prover's public key");
      const auto st =
          variant ? challenge_variant(c_.params, *c_.peer_public, rng_) : challenge(c_.params, rng_);
      send(Tag::Challenge, serialize(st.x));
      const auto w = receive(Tag::Response);
      out_.accepted = variant ? verify_variant(c_.params, st, w.payload)
                              : verify(c_.params, st, *c_.peer_public, w.payload);
      send(Tag::Verdict, Bytes{static_cast<std::uint8_t>(out_.accepted ? 1 : 0)});
    }
  }

  // Publishes, computes kappa, exchanges confirm digests (A first).
  Element agree() {
    std::optional<Element> kappa;
    if (c_.mode == SessionMode::KaVariant) {
      if (is_a()) {
        const auto a = ka_variant_publish_a(c_.params, rng_);
        send(Tag::KPublish, serialize(a.published));
        kappa = ka_variant_shared_a(a, element(receive(Tag::KPublish)));
      } else {
        const auto k_a = element(receive(Tag::KPublish));
        const auto b = ka_variant_publish_b(c_.params, k_a, rng_);
        send(Tag::KPublish, serialize(b.published));
        kappa = ka_variant_shared_b(c_.params, b);
      }
    } else {
      const auto own = ka_publish(c_.params, c_.role, rng_);
      if (is_a()) {
        send(Tag::KPublish, serialize(own.published));
        kappa = ka_shared(own, element(receive(Tag::KPublish)));
      } else {
        const auto k_a = element(receive(Tag::KPublish));
        send(Tag::KPublish, serialize(own.published));
        kappa = ka_shared(own, k_a);
      }
    }
    const auto digest = kappa_confirm_digest(c_.params, *kappa);
    Bytes peer;
    if (is_a()) {
      send(Tag::KappaConfirm, digest);
      peer = receive(Tag::KappaConfirm).payload;
    } else {
      peer = receive(Tag::KappaConfirm).payload;
      send(Tag::KappaConfirm, digest);
    }
    out_.kappa_digest = digest;
    out_.accepted = peer == digest;
    return *kappa;
  }

  void ka() { agree(); }

  void bits() {
    const auto kappa = agree();
    if (!out_.accepted) return;
    if (is_a()) {
      for (std::size_t i = 0; i < c_.bits; ++i) {
        const bool bit = rng_.bit();
        for (;;) {
          try {
            send(Tag::BitRound, encode_raw_word(encode_bit_round(kappa, bit, rng_)));
            break;
          } catch (const Error& e) {
            if (e.code() != Errc::RoundAmbiguous) throw;
            ++out_.resamples;
          }
        }
        out_.bits.push_back(bit);
      }
      const auto peer = receive(Tag::KappaConfirm);
      out_.accepted = peer.payload == bits_confirm_digest(out_.bits);
      send(Tag::Verdict, Bytes{static_cast<std::uint8_t>(out_.accepted ? 1 : 0)});
    } else {
      for (std::size_t i = 0; i < c_.bits; ++i) {
        const auto r = decode_raw_word(receive(Tag::BitRound).payload);
        if (!(r.platform() == c_.params.platform()))
          throw Error(Errc::ProtocolViolation, "bit round from another platform");
        out_.bits.push_back(decode_bit_round(kappa, r));
      }
      send(Tag::KappaConfirm, bits_confirm_digest(out_.bits));
      const auto v = receive(Tag::Verdict);
      out_.accepted = v.payload.size() == 1 && v.payload[0] == 1;
    }
  }

  const SessionConfig& c_;
  Transport& t_;
  Rng rng_;
  SessionOutcome out_;
};

}  // namespace

SessionOutcome run_session(const SessionConfig& config, Transport& transport) {
  return Session(config, transport).run();
}

std::pair<SessionOutcome, SessionOutcome> run_pair(const SessionConfig& a_config, const SessionConfig& b_config,
                                                   Transport& a, Transport& b) {
  std::optional<SessionOutcome> out_a;
  std::exception_ptr err_a;
  std::thread ta([&] {
    try {
      out_a = run_session(a_config, a);
    } catch (...) {
      err_a = std::current_exception();
      a.close();
    }
  });
  std::optional<SessionOutcome> out_b;
  std::exception_ptr err_b;
  try {
    out_b = run_session(b_config, b);
  } catch (...) {
    err_b = std::current_exception();
    b.close();
  }
  ta.join();
  // The side that detected the fault reports it; the other only saw a
  // closed channel or an error record.
  for (const auto& e : {err_a, err_b}) {
    if (!e) continue;
    try {
      std::rethrow_exception(e);
    } catch (const Error& x) {
      if (x.code() != Errc::TransportFailure && x.code() != Errc::ProtocolViolation) throw;
    }
  }
  if (err_a) std::rethrow_exception(err_a);
  if (err_b) std::rethrow_exception(err_b);
  return {std::move(*out_a), std::move(*out_b)};
}

// ------------------------------------------------------------- key files

Bytes serialize_keypair(const KeyPair& key) {
  Bytes out;
  put_magic(out, "NCSGK");
  for (const auto* e : {&key.a1, &key.a2, &key.z, &key.z_prime}) put_bytes(out, serialize(*e));
  return out;
}

KeyPair parse_keypair(ByteView data) {
  ByteReader in(data);
  expect_magic(in, "NCSGK");
  auto a1 = deserialize_element(in);
  auto a2 = deserialize_element(in);
  auto z = deserialize_element(in);
  auto zp = deserialize_element(in);
  if (!in.done()) throw Error(Errc::MalformedData, "trailing bytes in key file");
  return KeyPair{std::move(a1), std::move(a2), std::move(z), std::move(zp)};
}

Bytes serialize_public_key(const KeyPair& key) {
  Bytes out;
  put_magic(out, "NCSGZ");
  put_bytes(out, serialize(key.z));
  put_bytes(out, serialize(key.z_prime));
  return out;
}

std::pair<Element, Element> parse_public_key(ByteView data) {
  ByteReader in(data);
  expect_magic(in, "NCSGZ");
  auto z = deserialize_element(in);
  auto zp = deserialize_element(in);
  if (!in.done()) throw Error(Errc::MalformedData, "trailing bytes in public key file");
  return {std::move(z), std::move(zp)};
}

Bytes read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::InvalidArgument, "cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, ByteView data) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write " + path);
  f.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!f) throw Error(Errc::InvalidArgument, "write failed: " + path);
}

}  // namespace ncsg
