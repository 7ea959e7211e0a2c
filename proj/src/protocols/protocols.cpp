#include "ncsg/protocols.hpp"

#include <openssl/evp.h>

#include "ncsg/error.hpp"

namespace ncsg {

namespace {

const Element& need(const std::optional<Element>& e, const char* what) {
  if (!e) throw Error(Errc::InvalidArgument, std::string("parameters lack anchor ") + what);
  return *e;
}

void require_invertible(const Element& e, const char* what) {
  if (!is_invertible(e))
    throw Error(Errc::NonInvertible, std::string(what) + " = " + to_string(e) + " has no inverse");
}

bool same_bytes(const Bytes& a, ByteView b) { return std::equal(a.begin(), a.end(), b.begin(), b.end()); }

}  // namespace

// ------------------------------------------------------------ ProtocolParams

ProtocolParams::ProtocolParams(SubsetFamily family, ProtocolSettings settings, Anchors anchors, Unchecked)
    : family_(std::move(family)), settings_(settings), anchors_(std::move(anchors)), checked_(false) {
  if (settings_.shape == SecretShape::InversePair && !platform().has_inverses())
    throw Error(Errc::InvalidArgument, "inverse-pair secrets need a group platform");
  for (const auto* a : {&anchors_.a1, &anchors_.a2, &anchors_.b2})
    if (*a && !((*a)->platform() == platform())) throw Error(Errc::PlatformMismatch, "anchor platform");
  if (settings_.method == SelectionMethod::Second) {
    need(anchors_.a1, "a1");
    need(anchors_.a2, "a2");
  } else if (settings_.method == SelectionMethod::Third) {
    need(anchors_.a1, "a1");
    need(anchors_.b2, "b2");
  }
}

ProtocolParams::ProtocolParams(SubsetFamily family, ProtocolSettings settings, Anchors anchors)
    : ProtocolParams(std::move(family), settings, std::move(anchors), Unchecked{}) {
  if (!selection_invariants_hold(selection()))
    throw Error(Errc::ConditionViolated, "a published generator does not commute with its anchor");
  const auto report = condition_report();
  if (const auto* bad = report.first_failure())
    throw Error(Errc::ConditionViolated, "clause " + bad->label() + " fails");
  checked_ = true;
}

ProtocolParams ProtocolParams::make_unchecked(SubsetFamily family, ProtocolSettings settings, Anchors anchors) {
  return ProtocolParams(std::move(family), settings, std::move(anchors), Unchecked{});
}

ProtocolParams ProtocolParams::from_selection(const SelectionOutcome& outcome, ProtocolSettings settings) {
  settings.method = outcome.method;
  return ProtocolParams(outcome.family, settings, outcome.anchors);
}

SelectionOutcome ProtocolParams::selection() const {
  return SelectionOutcome{settings_.method, family_, anchors_};
}

ConditionReport ProtocolParams::condition_report() const {
  return check_condition(effective_family(selection()), settings_.condition);
}

// ------------------------------------------------------------------- hashing

Bytes sha256(ByteView data) {
  Bytes out(32);
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != 32)
    throw Error(Errc::InvalidArgument, "SHA-256 failed");
  return out;
}

Bytes hash_element(const Element& e, HashMode mode) {
  auto ser = serialize(e);
  if (mode == HashMode::ElementIdentity) return ser;
  Bytes input;
  input.reserve(ser.size() + 4);
  put_u32(input, static_cast<std::uint32_t>(ser.size()));
  put_bytes(input, ser);
  return sha256(input);
}

// ------------------------------------------------------------------- secrets

SecretPair sample_secrets(const ProtocolParams& params, Role role, Rng& rng) {
  const auto& f = params.family();
  const auto method = params.settings().method;
  const bool inverse_pair = params.settings().shape == SecretShape::InversePair;
  const auto& anchors = params.anchors();
  if (role == Role::A) {
    Element a1 = method == SelectionMethod::First ? sample(f.L_A, rng) : need(anchors.a1, "a1");
    Element a2 = inverse_pair ? invert(a1)
                 : method == SelectionMethod::Second ? need(anchors.a2, "a2")
                                                     : sample(f.R_A, rng);
    return {std::move(a1), std::move(a2)};
  }
  Element b1 = sample(f.L_B, rng);
  Element b2 = inverse_pair ? invert(b1)
               : method == SelectionMethod::Third ? need(anchors.b2, "b2")
                                                  : sample(f.R_B, rng);
  return {std::move(b1), std::move(b2)};
}

// ------------------------------------------------------------ authentication

KeyPair keygen(const ProtocolParams& params, Rng& rng) {
  auto [a1, a2] = sample_secrets(params, Role::A, rng);
  auto z_prime = canonicalize(multiply({a1, params.z(), a2}));
  return KeyPair{std::move(a1), std::move(a2), params.z(), std::move(z_prime)};
}

KeyPair keygen_variant(const ProtocolParams& params, Rng& rng) {
  auto key = keygen(params, rng);
  require_invertible(key.a1, "a1");
  require_invertible(key.a2, "a2");
  return key;
}

VerifierState challenge_from(const Element& b1, const Element& b2, const Element& base) {
  return VerifierState{b1, b2, canonicalize(multiply({b1, base, b2}))};
}

VerifierState challenge(const ProtocolParams& params, Rng& rng) {
  auto [b1, b2] = sample_secrets(params, Role::B, rng);
  return challenge_from(b1, b2, params.z());
}

VerifierState challenge_variant(const ProtocolParams& params, const Element& z_prime, Rng& rng) {
  auto [b1, b2] = sample_secrets(params, Role::B, rng);
  return challenge_from(b1, b2, z_prime);
}

Bytes respond(const ProtocolParams& params, const KeyPair& key, const Element& x) {
  return hash_element(multiply({key.a1, x, key.a2}), params.settings().hash);
}

Bytes respond_variant(const ProtocolParams& params, const KeyPair& key, const Element& x) {
  const auto i1 = invert(key.a1);
  const auto i2 = invert(key.a2);
  return hash_element(multiply({i1, x, i2}), params.settings().hash);
}

bool verify(const ProtocolParams& params, const VerifierState& state, const Element& z_prime, ByteView w) {
  return same_bytes(hash_element(multiply({state.b1, z_prime, state.b2}), params.settings().hash), w);
}

bool verify_variant(const ProtocolParams& params, const VerifierState& state, ByteView w) {
  return same_bytes(hash_element(multiply({state.b1, params.z(), state.b2}), params.settings().hash), w);
}

std::pair<Bytes, Bytes> simulate_transcript(const ProtocolParams& params, const Element& z_prime,
                                            const Element& b1, const Element& b2) {
  const auto x = challenge_from(b1, b2, params.z()).x;
  return {serialize(x), hash_element(multiply({b1, z_prime, b2}), params.settings().hash)};
}

std::vector<WeightedElement> sampling_distribution(const SubsetSpec& subset, std::uint64_t cap) {
  const std::uint64_t g = subset.generators().size();
  const auto lo = subset.min_length();
  const auto hi = subset.max_length();
  // P(word of length L) = 1/(hi-lo+1) * g^-L; scaled by (hi-lo+1) g^hi.
  std::vector<std::uint64_t> pow(hi + 1, 1);
  for (std::size_t k = 1; k <= hi; ++k) {
    if (pow[k - 1] > cap / g) throw Error(Errc::SearchSpaceTooLarge, "sampling support too large");
    pow[k] = pow[k - 1] * g;
  }
  std::vector<WeightedElement> out;
  for (std::size_t len = lo; len <= hi; ++len) {
    std::vector<std::size_t> idx(len, 0);
    for (std::uint64_t n = 0; n < pow[len]; ++n) {
      out.push_back({product_of(subset, idx), pow[hi - len]});
      for (std::size_t k = len; k-- > 0;) {
        if (++idx[k] < g) break;
        idx[k] = 0;
      }
    }
  }
  return out;
}

// ------------------------------------------------------------- key agreement

KaSecrets ka_publish(const ProtocolParams& params, Role role, Rng& rng) {
  auto secret = sample_secrets(params, role, rng);
  auto k = canonicalize(multiply({secret.first, params.z(), secret.second}));
  return KaSecrets{role, std::move(secret), std::move(k)};
}

Element ka_shared(const KaSecrets& own, const Element& other) {
  return canonicalize(multiply({own.secret.first, other, own.secret.second}));
}

Bytes ka_shared_hashed(const ProtocolParams& params, const KaSecrets& own, const Element& other) {
  return hash_element(ka_shared(own, other), params.settings().hash);
}

KaSecrets ka_variant_publish_a(const ProtocolParams& params, Rng& rng) {
  auto a = ka_publish(params, Role::A, rng);
  require_invertible(a.secret.first, "a1");
  require_invertible(a.secret.second, "a2");
  return a;
}

KaSecrets ka_variant_publish_b(const ProtocolParams& params, const Element& k_a, Rng& rng) {
  auto secret = sample_secrets(params, Role::B, rng);
  auto k = canonicalize(multiply({secret.first, k_a, secret.second}));
  return KaSecrets{Role::B, std::move(secret), std::move(k)};
}

Element ka_variant_shared_a(const KaSecrets& a, const Element& k_b) {
  const auto i1 = invert(a.secret.first);
  const auto i2 = invert(a.secret.second);
  return canonicalize(multiply({i1, k_b, i2}));
}

Element ka_variant_shared_b(const ProtocolParams& params, const KaSecrets& b) {
  return canonicalize(multiply({b.secret.first, params.z(), b.secret.second}));
}

// -------------------------------------------------------------- bit exchange

Element encode_bit_round(const Element& kappa, bool bit, Rng& rng) {
  const auto& p = kappa.platform();
  Element r = kappa;
  if (p.kind() == PlatformKind::Braid) {
    const auto w = kappa.braid_word();
    if (bit) {
      r = make_braid(braid::scramble(w, 3, rng));
    } else {
      r = make_braid(braid::random_word(p.size(), w.letters.size() + rng.between(0, 6), rng));
    }
  } else if (!bit) {
    r = sample(platform_generators(p).with_range(1, 24), rng);
  }
  if (!bit && equal(r, kappa)) throw Error(Errc::RoundAmbiguous, "random word equals kappa");
  return r;
}

bool decode_bit_round(const Element& kappa, const Element& received) { return equal(received, kappa); }

BitExchangeResult bit_exchange(const Element& kappa_sender, const Element& kappa_receiver, std::size_t m,
                               Rng& rng) {
  BitExchangeResult out;
  for (std::size_t i = 0; i < m; ++i) {
    const bool bit = rng.bit();
    for (;;) {
      try {
        auto r = encode_bit_round(kappa_sender, bit, rng);
        out.receiver_bits.push_back(decode_bit_round(kappa_receiver, r));
        out.rounds.push_back(std::move(r));
        break;
      } catch (const Error& e) {
        if (e.code() != Errc::RoundAmbiguous) throw;
        ++out.resamples;
      }
    }
    out.sender_bits.push_back(bit);
  }
  return out;
}

// ---------------------------------------------------------------- transcript

bool is_known_tag(std::uint8_t tag) {
  switch (static_cast<Tag>(tag)) {
    case Tag::Hello:
    case Tag::Challenge:
    case Tag::Response:
    case Tag::Verdict:
    case Tag::KPublish:
    case Tag::KappaConfirm:
    case Tag::BitRound:
    case Tag::Error: return true;
  }
  return false;
}

std::string_view tag_name(Tag tag) {
  switch (tag) {
    case Tag::Hello: return "hello";
    case Tag::Challenge: return "challenge";
    case Tag::Response: return "response";
    case Tag::Verdict: return "verdict";
    case Tag::KPublish: return "k-publish";
    case Tag::KappaConfirm: return "kappa-confirm";
    case Tag::BitRound: return "bit-round";
    case Tag::Error: return "error";
  }
  return "unknown";
}

Bytes Transcript::serialize() const {
  Bytes out;
  for (const auto& r : records) {
    put_u8(out, static_cast<std::uint8_t>(r.tag));
    put_u32(out, static_cast<std::uint32_t>(r.payload.size()));
    put_bytes(out, r.payload);
  }
  return out;
}

Transcript parse_transcript(ByteView data) {
  ByteReader in(data);
  Transcript t;
  while (!in.done()) {
    const auto tag = in.u8();
    if (!is_known_tag(tag)) throw Error(Errc::MalformedData, "unknown transcript tag");
    const auto len = in.u32();
    const auto body = in.take(len);
    t.records.push_back({Role::A, static_cast<Tag>(tag), Bytes(body.begin(), body.end())});
  }
  return t;
}

}  // namespace ncsg
