#include "ncsg/bytes.hpp"

#include "ncsg/error.hpp"

namespace ncsg {

std::string to_hex(ByteView data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (auto b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::PlatformMismatch: return "PlatformMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonInvertible: return "NonInvertible";
    case Errc::InfinitePlatform: return "InfinitePlatform";
    case Errc::IndexTooSmall: return "IndexTooSmall";
    case Errc::ZIsIdentity: return "ZIsIdentity";
    case Errc::ZNotIdentity: return "ZNotIdentity";
    case Errc::ConditionViolated: return "ConditionViolated";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::NotFound: return "NotFound";
    case Errc::RoundAmbiguous: return "RoundAmbiguous";
    case Errc::MalformedData: return "MalformedData";
    case Errc::TransportFailure: return "TransportFailure";
    case Errc::ParamsMismatch: return "ParamsMismatch";
    case Errc::ProtocolViolation: return "ProtocolViolation";
  }
  return "Unknown";
}

}  // namespace ncsg
