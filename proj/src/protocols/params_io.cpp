#include <array>

#include "ncsg/error.hpp"
#include "ncsg/protocols.hpp"

namespace ncsg {

namespace {

constexpr std::array<std::uint8_t, 5> kMagic{'N', 'C', 'S', 'G', '1'};
constexpr std::uint8_t kVersion = 1;

void put_subset(Bytes& out, const SubsetSpec& s) {
  put_u8(out, static_cast<std::uint8_t>(s.label()));
  put_u32(out, static_cast<std::uint32_t>(s.min_length()));
  put_u32(out, static_cast<std::uint32_t>(s.max_length()));
  put_u32(out, static_cast<std::uint32_t>(s.generators().size()));
  for (const auto& g : s.generators()) put_bytes(out, serialize(g));
}

Element read_element(ByteReader& in, const Platform& p) {
  auto e = deserialize_element(in);
  if (!(e.platform() == p)) throw Error(Errc::MalformedData, "element platform differs from header");
  return e;
}

SubsetSpec read_subset(ByteReader& in, const Platform& p) {
  const auto label = in.u8();
  if (label > static_cast<std::uint8_t>(SubsetLabel::Custom)) throw Error(Errc::MalformedData, "subset label");
  const auto lo = in.u32();
  const auto hi = in.u32();
  const auto count = in.u32();
  if (count == 0 || count > in.remaining()) throw Error(Errc::MalformedData, "subset size");
  std::vector<Element> gens;
  gens.reserve(count);
  for (std::uint32_t k = 0; k < count; ++k) gens.push_back(read_element(in, p));
  try {
    return SubsetSpec(std::move(gens), static_cast<SubsetLabel>(label), lo, hi);
  } catch (const Error& e) {
    throw Error(Errc::MalformedData, e.what());
  }
}

template <class E>
E read_enum(ByteReader& in, std::uint8_t max) {
  const auto v = in.u8();
  if (v > max) throw Error(Errc::MalformedData, "enum out of range");
  return static_cast<E>(v);
}

}  // namespace

Bytes serialize_params(const ProtocolParams& params) {
  Bytes out(kMagic.begin(), kMagic.end());
  put_u8(out, kVersion);
  const auto& p = params.platform();
  put_u8(out, static_cast<std::uint8_t>(p.kind()));
  put_u16(out, static_cast<std::uint16_t>(p.size()));
  put_u16(out, static_cast<std::uint16_t>(p.modulus()));
  const auto& s = params.settings();
  put_u8(out, static_cast<std::uint8_t>(s.condition));
  put_u8(out, static_cast<std::uint8_t>(s.method));
  put_u8(out, static_cast<std::uint8_t>(s.hash));
  put_u8(out, static_cast<std::uint8_t>(s.shape));
  put_u8(out, params.checked() ? 1 : 0);
  const auto& f = params.family();
  put_bytes(out, serialize(f.z));
  for (const auto* sub : {&f.Z, &f.L_A, &f.R_A, &f.L_B, &f.R_B}) put_subset(out, *sub);
  const auto& a = params.anchors();
  put_u8(out, static_cast<std::uint8_t>((a.a1 ? 1 : 0) | (a.a2 ? 2 : 0) | (a.b2 ? 4 : 0)));
  for (const auto* e : {&a.a1, &a.a2, &a.b2})
    if (*e) put_bytes(out, serialize(**e));
  return out;
}

ProtocolParams parse_params(ByteView data) {
  ByteReader in(data);
  const auto magic = in.take(kMagic.size());
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) throw Error(Errc::MalformedData, "bad magic");
  if (in.u8() != kVersion) throw Error(Errc::MalformedData, "unsupported params version");
  const auto kind = in.u8();
  const int size = in.u16();
  const int modulus = in.u16();
  Platform p = Platform::braid(2);
  try {
    switch (static_cast<PlatformKind>(kind)) {
      case PlatformKind::Braid: p = Platform::braid(size); break;
      case PlatformKind::Permutation: p = Platform::permutation(size); break;
      case PlatformKind::MatrixModP: p = Platform::matrix_mod_p(size, modulus); break;
      default: throw Error(Errc::MalformedData, "platform tag");
    }
  } catch (const Error& e) {
    if (e.code() == Errc::MalformedData) throw;
    throw Error(Errc::MalformedData, e.what());
  }
  ProtocolSettings s;
  s.condition = read_enum<ConditionVariant>(in, 1);
  const auto method = in.u8();
  if (method < 1 || method > 3) throw Error(Errc::MalformedData, "selection method");
  s.method = static_cast<SelectionMethod>(method);
  s.hash = read_enum<HashMode>(in, 1);
  s.shape = read_enum<SecretShape>(in, 1);
  const bool checked = read_enum<std::uint8_t>(in, 1) == 1;
  auto z = read_element(in, p);
  auto Z = read_subset(in, p);
  auto L_A = read_subset(in, p);
  auto R_A = read_subset(in, p);
  auto L_B = read_subset(in, p);
  auto R_B = read_subset(in, p);
  const auto flags = in.u8();
  if (flags > 7) throw Error(Errc::MalformedData, "anchor flags");
  Anchors a;
  if (flags & 1) a.a1 = read_element(in, p);
  if (flags & 2) a.a2 = read_element(in, p);
  if (flags & 4) a.b2 = read_element(in, p);
  if (!in.done()) throw Error(Errc::MalformedData, "trailing bytes in params");
  SubsetFamily f{std::move(z), std::move(Z), std::move(L_A), std::move(R_A), std::move(L_B), std::move(R_B)};
  return checked ? ProtocolParams(std::move(f), s, std::move(a))
                 : ProtocolParams::make_unchecked(std::move(f), s, std::move(a));
}

Bytes params_digest(const ProtocolParams& params) { return sha256(serialize_params(params)); }

}  // namespace ncsg
