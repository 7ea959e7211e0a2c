#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncsg/algebra.hpp"
#include "ncsg/bytes.hpp"
#include "ncsg/conditions.hpp"
#include "ncsg/rng.hpp"

namespace ncsg {

enum class HashMode : std::uint8_t { Bitstring = 0, ElementIdentity = 1 };
// InversePair forces a2 = a1^-1 and b2 = b1^-1 (conjugacy-style schemes).
enum class SecretShape : std::uint8_t { Independent = 0, InversePair = 1 };

struct ProtocolSettings {
  ConditionVariant condition = ConditionVariant::A;
  SelectionMethod method = SelectionMethod::First;
  HashMode hash = HashMode::Bitstring;
  SecretShape shape = SecretShape::Independent;
};

class ProtocolParams {
 public:
  // Validates the applicable condition (on the effective family for methods
  // 2 and 3). Throws ZIsIdentity / ZNotIdentity / ConditionViolated.
  ProtocolParams(SubsetFamily family, ProtocolSettings settings, Anchors anchors = {});
  // Skips the condition check; for deliberately broken parameters.
  static ProtocolParams make_unchecked(SubsetFamily family, ProtocolSettings settings, Anchors anchors = {});
  static ProtocolParams from_selection(const SelectionOutcome& outcome, ProtocolSettings settings);

  const SubsetFamily& family() const { return family_; }
  const Platform& platform() const { return family_.platform(); }
  const Element& z() const { return family_.z; }
  const ProtocolSettings& settings() const { return settings_; }
  const Anchors& anchors() const { return anchors_; }
  bool checked() const { return checked_; }

  ConditionReport condition_report() const;
  SelectionOutcome selection() const;

 private:
  struct Unchecked {};
  ProtocolParams(SubsetFamily family, ProtocolSettings settings, Anchors anchors, Unchecked);

  SubsetFamily family_;
  ProtocolSettings settings_;
  Anchors anchors_;
  bool checked_;
};

// Params file: "NCSG1", version byte, body. Anchors travel with the file.
Bytes serialize_params(const ProtocolParams& params);
ProtocolParams parse_params(ByteView data);
// SHA-256 of serialize_params.
Bytes params_digest(const ProtocolParams& params);

Bytes sha256(ByteView data);
// Bitstring: SHA-256 over (4-byte length || serialization). ElementIdentity:
// the serialization itself.
Bytes hash_element(const Element& e, HashMode mode);

enum class Role : std::uint8_t { A = 0, B = 1 };

struct SecretPair {
  Element first;
  Element second;
};

// Draws the role's secret pair, honoring anchors and the secret shape.
// A: (a1 from L_A, a2 from R_A); B: (b1 from L_B, b2 from R_B).
SecretPair sample_secrets(const ProtocolParams& params, Role role, Rng& rng);

// ---------------------------------------------------------- authentication

struct KeyPair {
  Element a1;
  Element a2;
  Element z;
  Element z_prime;
};

KeyPair keygen(const ProtocolParams& params, Rng& rng);
// Same draw, but throws NonInvertible unless a1 and a2 are invertible.
KeyPair keygen_variant(const ProtocolParams& params, Rng& rng);

struct VerifierState {
  Element b1;
  Element b2;
  Element x;
};

// x = b1 z b2.
VerifierState challenge(const ProtocolParams& params, Rng& rng);
// x = b1 z' b2.
VerifierState challenge_variant(const ProtocolParams& params, const Element& z_prime, Rng& rng);
// Challenge from given b1, b2 (simulation and attacks).
VerifierState challenge_from(const Element& b1, const Element& b2, const Element& base);

// w = H(a1 x a2).
Bytes respond(const ProtocolParams& params, const KeyPair& key, const Element& x);
// w = H(a1^-1 x a2^-1).
Bytes respond_variant(const ProtocolParams& params, const KeyPair& key, const Element& x);
// Accept iff w = H(b1 z' b2).
bool verify(const ProtocolParams& params, const VerifierState& state, const Element& z_prime, ByteView w);
// Accept iff w = H(b1 z b2).
bool verify_variant(const ProtocolParams& params, const VerifierState& state, ByteView w);

// (x, H(b1 z' b2)): the honest-verifier simulator's output for (b1, b2).
std::pair<Bytes, Bytes> simulate_transcript(const ProtocolParams& params, const Element& z_prime,
                                            const Element& b1, const Element& b2);

struct WeightedElement {
  Element element;
  std::uint64_t weight;
};

// Every index word sample() can draw from `subset`, with integer weights
// proportional to its probability. Throws SearchSpaceTooLarge above `cap`.
std::vector<WeightedElement> sampling_distribution(const SubsetSpec& subset, std::uint64_t cap = 1'000'000);

// ----------------------------------------------------------- key agreement

struct KaSecrets {
  Role role;
  SecretPair secret;
  Element published;
};

// K = s1 z s2, canonicalized.
KaSecrets ka_publish(const ProtocolParams& params, Role role, Rng& rng);
// kappa = s1 K_other s2.
Element ka_shared(const KaSecrets& own, const Element& other_published);
Bytes ka_shared_hashed(const ProtocolParams& params, const KaSecrets& own, const Element& other_published);

// A: invertible (a1, a2), K_A = a1 z a2. Throws NonInvertible.
KaSecrets ka_variant_publish_a(const ProtocolParams& params, Rng& rng);
// B: K_B = b1 K_A b2.
KaSecrets ka_variant_publish_b(const ProtocolParams& params, const Element& k_a, Rng& rng);
// A: kappa = a1^-1 K_B a2^-1.
Element ka_variant_shared_a(const KaSecrets& a, const Element& k_b);
// B: kappa = b1 z b2.
Element ka_variant_shared_b(const ProtocolParams& params, const KaSecrets& b);

// ------------------------------------------------------------ bit exchange

// Bit 1 is sent as a relator-inserted rewrite of kappa, bit 0 as an
// unrelated word of similar length. Throws RoundAmbiguous when the unrelated
// word happens to equal kappa; callers draw again.
Element encode_bit_round(const Element& kappa, bool bit, Rng& rng);
bool decode_bit_round(const Element& kappa, const Element& received);

struct BitExchangeResult {
  std::vector<bool> sender_bits;
  std::vector<bool> receiver_bits;
  std::vector<Element> rounds;
  std::size_t resamples = 0;
};

BitExchangeResult bit_exchange(const Element& kappa_sender, const Element& kappa_receiver, std::size_t m,
                               Rng& rng);

// ------------------------------------------------------------- transcript

enum class Tag : std::uint8_t {
  Hello = 0x01,
  Challenge = 0x10,
  Response = 0x11,
  Verdict = 0x12,
  KPublish = 0x20,
  KappaConfirm = 0x21,
  BitRound = 0x30,
  Error = 0x7F,
};

bool is_known_tag(std::uint8_t tag);
std::string_view tag_name(Tag tag);

struct TranscriptRecord {
  Role sender;
  Tag tag;
  Bytes payload;

  bool operator==(const TranscriptRecord&) const = default;
};

struct Transcript {
  std::vector<TranscriptRecord> records;

  // (tag, 4-byte length, payload) per record.
  Bytes serialize() const;
  bool operator==(const Transcript&) const = default;
};

// Parses records; roles are not on the wire and come back as A.
Transcript parse_transcript(ByteView data);

// ---------------------------------------------------------------- presets

struct Preset {
  std::string name;
  std::string description;
  ProtocolParams params;
};

std::vector<std::string> preset_names();
// Throws InvalidArgument for unknown names.
Preset make_preset(std::string_view name);

}  // namespace ncsg
